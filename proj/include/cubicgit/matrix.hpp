#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cubicgit/scalar.hpp"

namespace cubicgit {

// Dense rectangular matrix of exact scalars with a single field tag.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, FieldTag tag = FieldTag::Q());
    static ExactMatrix identity(std::size_t n, FieldTag tag = FieldTag::Q());
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldTag& tag() const { return tag_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar v);

    ExactMatrix transposed() const;
    ExactMatrix operator*(const ExactMatrix& o) const;

private:
    std::size_t rows_, cols_;
    FieldTag tag_;
    std::vector<Scalar> a_;
};

// Rank over the matrix's field: fraction-free Bareiss elimination over Q
// (after clearing row denominators, with a structural singleton-row pass and
// sparsity-minded pivoting), ordinary elimination over F_p.
std::size_t rank(const ExactMatrix& a);

// Rank of an integer matrix given as sparse rows over Q.
struct SparseIntRow {
    std::vector<std::pair<std::size_t, Integer>> entries;  // (col, value), cols ascending
};
std::size_t rank_sparse_q(std::vector<SparseIntRow> rows, std::size_t cols);

// Basis of the right kernel over Q: denominator-cleared integer vectors with
// content 1 and positive leading entry, deterministic in the column order.
std::vector<std::vector<Integer>> kernel_basis(const ExactMatrix& a);

// Indices of standard basis vectors completing span(s) to the whole space,
// chosen greedily in index order. |result| = ambient_dim - rank(s).
std::vector<std::size_t> complement_basis(const std::vector<std::vector<Rational>>& s,
                                          std::size_t ambient_dim);

// One solution of A x = b over Q (free variables set to 0), or nullopt.
std::optional<std::vector<Rational>> solve(const ExactMatrix& a,
                                           std::span<const Rational> b);

// Incremental row-echelon form over an exact field. reduce() returns the
// canonical remainder supported on the non-pivot columns.
class Echelon {
public:
    Echelon(std::size_t cols, FieldTag tag) : cols_(cols), tag_(tag) {}

    // Reduces v against the current rows; keeps it when independent.
    // Returns true when the row increased the rank.
    bool add_row(std::vector<Scalar> v);
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
    // Row whose pivot is pivot_cols()[k]; pivot entry is 1.
    const std::vector<Scalar>& row(std::size_t k) const { return rows_[k]; }
    // Columns not used as pivots, ascending.
    std::vector<std::size_t> free_cols() const;

private:
    std::size_t cols_;
    FieldTag tag_;
    std::vector<std::vector<Scalar>> rows_;  // pivot entry normalized to 1
    std::vector<std::size_t> pivots_;        // ascending
};

}  // namespace cubicgit
