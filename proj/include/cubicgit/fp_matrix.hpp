#pragma once

#include <cstdint>
#include <vector>

namespace cubicgit {

// Dense matrix over F_p with lazily reduced 64-bit entries. Built for one
// purpose: row-echelon rank of large multiplication matrices.
class FpMat {
public:
    FpMat(std::size_t rows, std::size_t cols, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t p() const { return p_; }

    void set(std::size_t i, std::size_t j, std::uint32_t v) { a_[i * cols_ + j] = v; }
    std::uint32_t get(std::size_t i, std::size_t j) const {
        return static_cast<std::uint32_t>(a_[i * cols_ + j] % p_);
    }
    void add(std::size_t i, std::size_t j, std::uint64_t v) {
        a_[i * cols_ + j] = (a_[i * cols_ + j] + v) % p_;
    }

    // Destroys the contents.
    std::size_t rank_destructive();

private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint64_t> a_;
    std::vector<std::uint64_t*> row_;
};

}  // namespace cubicgit
