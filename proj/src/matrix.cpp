#include "cubicgit/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "cubicgit/errors.hpp"
#include "cubicgit/fp_matrix.hpp"

namespace cubicgit {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, FieldTag tag)
    : rows_(rows), cols_(cols), tag_(tag), a_(rows * cols, Scalar::zero(tag)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, FieldTag tag) {
    ExactMatrix m(n, n, tag);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(tag));
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return ExactMatrix(0, 0);
    FieldTag tag = rows[0].empty() ? FieldTag::Q() : rows[0][0].tag();
    ExactMatrix m(rows.size(), rows[0].size(), tag);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void ExactMatrix::set(std::size_t i, std::size_t j, Scalar v) {
    if (!(v.tag() == tag_)) throw FieldMismatch();
    a_[i * cols_ + j] = std::move(v);
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix m(cols_, rows_, tag_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
    if (!(tag_ == o.tag_)) throw FieldMismatch();
    ExactMatrix m(rows_, o.cols_, tag_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Scalar acc = Scalar::zero(tag_);
            for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            m.set(i, j, std::move(acc));
        }
    }
    return m;
}

namespace {

// Fraction-free elimination with full pivoting; entries stay minors of the
// input, so each division is exact.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> m) {
    if (m.empty()) return 0;
    const std::size_t n_cols = m[0].size();
    std::vector<std::size_t> live_rows(m.size()), live_cols(n_cols);
    for (std::size_t i = 0; i < m.size(); ++i) live_rows[i] = i;
    for (std::size_t j = 0; j < n_cols; ++j) live_cols[j] = j;

    Integer prev = 1;
    std::size_t rank = 0;
    while (!live_rows.empty() && !live_cols.empty()) {
        std::vector<std::size_t> row_nnz(m.size(), 0), col_nnz(n_cols, 0);
        for (std::size_t r : live_rows)
            for (std::size_t c : live_cols)
                if (m[r][c] != 0) { ++row_nnz[r]; ++col_nnz[c]; }

        std::size_t best_r = m.size(), best_c = n_cols;
        unsigned long long best_score = ~0ull;
        for (std::size_t c : live_cols) {
            if (col_nnz[c] == 0) continue;
            for (std::size_t r : live_rows) {
                if (m[r][c] == 0) continue;
                unsigned long long score =
                    static_cast<unsigned long long>(row_nnz[r] - 1) * (col_nnz[c] - 1);
                if (score < best_score ||
                    (score == best_score && (c < best_c || (c == best_c && r < best_r)))) {
                    best_score = score;
                    best_r = r;
                    best_c = c;
                }
            }
        }
        if (best_r == m.size()) break;

        const Integer piv = m[best_r][best_c];
        for (std::size_t r : live_rows) {
            if (r == best_r) continue;
            const Integer t = m[r][best_c];
            for (std::size_t c : live_cols) {
                if (c == best_c) continue;
                Integer& v = m[r][c];
                if (v == 0 && t == 0) continue;
                Integer num = v * piv - t * m[best_r][c];
                if (num == 0) { v = 0; continue; }
                assert(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()));
                mpz_divexact(v.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[r][best_c] = 0;
        }
        prev = piv;
        ++rank;
        std::erase(live_rows, best_r);
        std::erase(live_cols, best_c);
    }
    return rank;
}

}  // namespace

std::size_t rank_sparse_q(std::vector<SparseIntRow> rows, std::size_t cols) {
    // Structural pass: a row with a single nonzero pivots for free; removing
    // its column may create new singletons.
    std::vector<std::size_t> nnz(rows.size());
    std::vector<bool> dead_col(cols, false), dead_row(rows.size(), false);
    std::vector<std::vector<std::size_t>> col_rows(cols);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        nnz[i] = 0;
        for (auto& [c, v] : rows[i].entries) {
            if (v == 0) continue;
            ++nnz[i];
            col_rows[c].push_back(i);
        }
        if (nnz[i] == 1) queue.push_back(i);
    }
    std::size_t rank = 0;
    while (!queue.empty()) {
        std::size_t r = queue.front();
        queue.pop_front();
        if (dead_row[r] || nnz[r] != 1) continue;
        std::size_t c = cols;
        for (auto& [cc, v] : rows[r].entries)
            if (!dead_col[cc] && v != 0) c = cc;
        if (c == cols) continue;  // stale
        ++rank;
        dead_row[r] = true;
        dead_col[c] = true;
        for (std::size_t other : col_rows[c]) {
            if (dead_row[other]) continue;
            for (auto& [cc, v] : rows[other].entries) {
                if (cc == c && v != 0) {
                    v = 0;
                    if (--nnz[other] == 1) queue.push_back(other);
                }
            }
            if (nnz[other] == 0) dead_row[other] = true;
        }
    }

    // Residual dense Bareiss on the live block.
    std::vector<std::size_t> col_map(cols, cols);
    std::size_t live_cols = 0;
    for (std::size_t c = 0; c < cols; ++c)
        if (!dead_col[c]) col_map[c] = live_cols++;
    std::vector<std::vector<Integer>> dense;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (dead_row[i]) continue;
        std::vector<Integer> row(live_cols, 0);
        bool any = false;
        for (auto& [c, v] : rows[i].entries) {
            if (v == 0 || dead_col[c]) continue;
            row[col_map[c]] = v;
            any = true;
        }
        if (any) dense.push_back(std::move(row));
    }
    return rank + bareiss_rank(std::move(dense));
}

namespace {

std::vector<SparseIntRow> to_integer_rows(const ExactMatrix& a) {
    std::vector<SparseIntRow> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& q = a.at(i, j).rat();
            if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& q = a.at(i, j).rat();
            if (q == 0) continue;
            Integer v = q.get_num() * (lcm / q.get_den());
            rows[i].entries.emplace_back(j, std::move(v));
        }
    }
    return rows;
}

}  // namespace

std::size_t rank(const ExactMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    if (a.tag().is_prime()) {
        FpMat m(a.rows(), a.cols(), a.tag().p);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                m.set(i, j, a.at(i, j).residue_value());
        return m.rank_destructive();
    }
    return rank_sparse_q(to_integer_rows(a), a.cols());
}

bool Echelon::add_row(std::vector<Scalar> v) {
    if (v.size() != cols_) throw DimensionMismatch("echelon row length");
    v = reduce(std::move(v));
    std::size_t pc = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j].is_zero()) { pc = j; break; }
    }
    if (pc == cols_) return false;
    Scalar inv = v[pc].inverse();
    for (std::size_t j = pc; j < cols_; ++j) v[j] = v[j] * inv;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, pc);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

std::vector<Scalar> Echelon::reduce(std::vector<Scalar> v) const {
    if (v.size() != cols_) throw DimensionMismatch("echelon row length");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = v[pivots_[k]];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (std::size_t j = pivots_[k]; j < cols_; ++j) {
            if (!rows_[k][j].is_zero()) v[j] = v[j] - f * rows_[k][j];
        }
    }
    return v;
}

std::vector<std::size_t> Echelon::free_cols() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j) ++k;
        else out.push_back(j);
    }
    return out;
}

namespace {

std::vector<Integer> normalize_integer_vector(const std::vector<Rational>& v) {
    Integer lcm = 1;
    for (const Rational& q : v)
        if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> out(v.size());
    Integer content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (lcm / v[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content > 1)
        for (Integer& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    for (const Integer& x : out) {
        if (x != 0) {
            if (x < 0)
                for (Integer& y : out) y = -y;
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Integer>> kernel_basis(const ExactMatrix& a) {
    if (!a.tag().is_rational()) throw FieldMismatch();
    Echelon ech(a.cols(), a.tag());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Scalar> row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a.at(i, j);
        ech.add_row(std::move(row));
    }
    // One kernel vector per free column, by descending back-substitution.
    std::vector<std::vector<Integer>> out;
    const auto& pivots = ech.pivot_cols();
    for (std::size_t fc : ech.free_cols()) {
        std::vector<Rational> v(a.cols(), 0);
        v[fc] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const auto& row = ech.row(k);
            Rational acc = 0;
            for (std::size_t j = pivots[k] + 1; j < a.cols(); ++j)
                if (!row[j].is_zero() && v[j] != 0) acc += row[j].rat() * v[j];
            v[pivots[k]] = -acc;
        }
        out.push_back(normalize_integer_vector(v));
    }
    return out;
}

std::vector<std::size_t> complement_basis(const std::vector<std::vector<Rational>>& s,
                                          std::size_t ambient_dim) {
    Echelon ech(ambient_dim, FieldTag::Q());
    for (const auto& v : s) {
        if (v.size() != ambient_dim) throw DimensionMismatch("vector length vs ambient_dim");
        std::vector<Scalar> row(ambient_dim);
        for (std::size_t j = 0; j < ambient_dim; ++j) row[j] = Scalar::rational(v[j]);
        ech.add_row(std::move(row));
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        std::vector<Scalar> e(ambient_dim, Scalar::zero(FieldTag::Q()));
        e[i] = Scalar::one(FieldTag::Q());
        if (ech.add_row(std::move(e))) out.push_back(i);
    }
    return out;
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& a,
                                           std::span<const Rational> b) {
    if (!a.tag().is_rational()) throw FieldMismatch();
    if (b.size() != a.rows()) throw DimensionMismatch("rhs length");
    // Echelon on [A | b]; inconsistency shows as a pivot in the last column.
    const std::size_t aug = a.cols();
    Echelon ech(aug + 1, a.tag());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Scalar> row(aug + 1);
        for (std::size_t j = 0; j < aug; ++j) row[j] = a.at(i, j);
        row[aug] = Scalar::rational(b[i]);
        ech.add_row(std::move(row));
    }
    const auto& pivots = ech.pivot_cols();
    for (std::size_t pc : pivots)
        if (pc == aug) return std::nullopt;
    // Free variables 0; pivots by descending back-substitution.
    std::vector<Rational> x(aug, 0);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const auto& row = ech.row(k);
        Rational acc = row[aug].rat();
        for (std::size_t j = pivots[k] + 1; j < aug; ++j)
            if (!row[j].is_zero() && x[j] != 0) acc -= row[j].rat() * x[j];
        x[pivots[k]] = acc;
    }
    return x;
}

}  // namespace cubicgit
