#include "cubicgit/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace cubicgit {

Monomial Monomial::unit(std::size_t n_vars, std::size_t i, std::uint32_t exp) {
    std::vector<std::uint32_t> e(n_vars, 0);
    e.at(i) = exp;
    return Monomial(std::move(e));
}

std::uint32_t Monomial::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size())
        throw std::invalid_argument("monomial variable counts differ");
    std::vector<std::uint32_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + o.e_[i];
    return Monomial(std::move(e));
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.n_vars(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {
void enumerate(std::size_t var, std::uint32_t remaining, std::vector<std::uint32_t>& cur,
               std::vector<Monomial>& out) {
    if (var + 1 == cur.size()) {
        cur[var] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (std::uint32_t e = remaining; e != static_cast<std::uint32_t>(-1); --e) {
        cur[var] = e;
        enumerate(var + 1, remaining - e, cur, out);
    }
}
}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n_vars, std::uint32_t degree) {
    if (n_vars == 0) throw std::invalid_argument("n_vars must be positive");
    std::vector<Monomial> out;
    out.reserve(binomial(static_cast<unsigned>(n_vars + degree - 1), degree));
    std::vector<std::uint32_t> cur(n_vars, 0);
    enumerate(0, degree, cur, out);
    return out;
}

unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (n > 66) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace cubicgit
