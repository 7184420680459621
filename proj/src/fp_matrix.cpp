#include "cubicgit/fp_matrix.hpp"

#include "cubicgit/scalar.hpp"

namespace cubicgit {

FpMat::FpMat(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0), row_(rows) {
    for (std::size_t i = 0; i < rows; ++i) row_[i] = a_.data() + i * cols;
}

std::size_t FpMat::rank_destructive() {
    const std::uint64_t p = p_;
    // Each elimination adds at most (p-1)*p to an entry; renormalize a row
    // before it can overflow.
    const std::uint64_t step = (p - 1) * p;
    const std::uint64_t budget = step ? (~std::uint64_t{0} - p) / step : ~std::uint64_t{0};
    std::vector<std::uint64_t> dirty(rows_, 0);
    std::vector<std::uint32_t> pneg(cols_);

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = rows_;
        for (std::size_t i = r; i < rows_; ++i) {
            if (row_[i][col] % p != 0) { pivot = i; break; }
        }
        if (pivot == rows_) continue;
        std::swap(row_[r], row_[pivot]);
        std::swap(dirty[r], dirty[pivot]);

        std::uint64_t* pr = row_[r];
        const std::uint32_t inv =
            mod_inverse(static_cast<std::uint32_t>(pr[col] % p), p_);
        for (std::size_t j = col; j < cols_; ++j) {
            std::uint64_t v = pr[j] % p * inv % p;
            pr[j] = v;
            pneg[j] = static_cast<std::uint32_t>(p - v);
        }
        dirty[r] = 0;

        const bool narrow = p < (1u << 15);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            std::uint64_t* ai = row_[i];
            const std::uint32_t f = static_cast<std::uint32_t>(ai[col] % p);
            if (f == 0) continue;
            if (dirty[i] + 1 > budget) {
                for (std::size_t j = col; j < cols_; ++j) ai[j] %= p;
                dirty[i] = 0;
            }
            const std::uint32_t* pn = pneg.data();
            if (narrow) {
                // f and pn[j] both fit in 16 bits; the product stays in 32.
                for (std::size_t j = col; j < cols_; ++j)
                    ai[j] += f * pn[j];
            } else {
                for (std::size_t j = col; j < cols_; ++j)
                    ai[j] += static_cast<std::uint64_t>(f) * pn[j];
            }
            ++dirty[i];
        }
        ++r;
    }
    return r;
}

}  // namespace cubicgit
