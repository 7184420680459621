#include "cubicgit/polynomial.hpp"

#include <sstream>

#include "cubicgit/errors.hpp"
#include "cubicgit/matrix.hpp"

namespace cubicgit {

Polynomial Polynomial::zero(std::size_t n_vars, std::uint32_t degree, FieldTag tag) {
    return Polynomial(n_vars, degree, tag);
}

Polynomial Polynomial::from_terms(std::size_t n_vars, std::uint32_t degree, FieldTag tag,
                                  std::vector<std::pair<Monomial, Scalar>> terms) {
    Polynomial f(n_vars, degree, tag);
    for (auto& [m, c] : terms) {
        if (m.n_vars() != n_vars) throw DimensionMismatch("monomial length vs n_vars");
        if (m.degree() != degree) throw InhomogeneousError(degree, m.degree());
        if (!(c.tag() == tag)) throw FieldMismatch();
        if (c.is_zero()) continue;
        auto it = f.terms_.find(m);
        if (it == f.terms_.end()) {
            f.terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) f.terms_.erase(it);
        }
    }
    return f;
}

Polynomial Polynomial::single(std::size_t n_vars, Monomial m, Scalar c) {
    std::uint32_t deg = m.degree();
    return from_terms(n_vars, deg, c.tag(), {{std::move(m), std::move(c)}});
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(tag_) : it->second;
}

const std::pair<const Monomial, Scalar>& Polynomial::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return *terms_.begin();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (n_vars_ != o.n_vars_) throw DimensionMismatch("polynomial n_vars");
    if (!(tag_ == o.tag_)) throw FieldMismatch();
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw InhomogeneousError(degree_, o.degree_);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (!(c.tag() == tag_)) throw FieldMismatch();
    Polynomial r(n_vars_, degree_, tag_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (n_vars_ != o.n_vars_) throw DimensionMismatch("polynomial n_vars");
    if (!(tag_ == o.tag_)) throw FieldMismatch();
    Polynomial r(n_vars_, degree_ + o.degree_, tag_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            Scalar c = ca * cb;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_.emplace(std::move(m), std::move(c));
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return n_vars_ == o.n_vars_ && tag_ == o.tag_ &&
           (terms_.empty() && o.terms_.empty() ? true : degree_ == o.degree_) &&
           terms_ == o.terms_;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = Polynomial::single(n_vars_, Monomial(std::vector<std::uint32_t>(n_vars_, 0)),
                                        Scalar::one(tag_));
    for (std::uint32_t i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= n_vars_) throw DimensionMismatch("variable index");
    std::uint32_t out_deg = degree_ == 0 ? 0 : degree_ - 1;
    Polynomial r(n_vars_, out_deg, tag_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m[var];
        if (e == 0) continue;
        std::vector<std::uint32_t> exps = m.exponents();
        exps[var] -= 1;
        Scalar nc = c * Scalar::of_int(static_cast<long>(e), tag_);
        if (!nc.is_zero()) r.terms_.emplace(Monomial(std::move(exps)), std::move(nc));
    }
    return r;
}

Polynomial Polynomial::substitute_linear(const ExactMatrix& m) const {
    if (m.rows() != n_vars_ || m.cols() != n_vars_)
        throw DimensionMismatch("substitution matrix must be n_vars x n_vars");
    if (!(m.tag() == tag_)) throw FieldMismatch();
    if (rank(m) != n_vars_) throw SingularSubstitution();

    // Linear form for variable i: column i of M.
    std::vector<Polynomial> forms;
    forms.reserve(n_vars_);
    for (std::size_t i = 0; i < n_vars_; ++i) {
        std::vector<std::pair<Monomial, Scalar>> terms;
        for (std::size_t j = 0; j < n_vars_; ++j) {
            terms.emplace_back(Monomial::unit(n_vars_, j), m.at(j, i));
        }
        forms.push_back(Polynomial::from_terms(n_vars_, 1, tag_, std::move(terms)));
    }

    Polynomial result = Polynomial::zero(n_vars_, degree_, tag_);
    for (const auto& [mono, c] : terms_) {
        Polynomial term = Polynomial::single(
            n_vars_, Monomial(std::vector<std::uint32_t>(n_vars_, 0)), c);
        for (std::size_t i = 0; i < n_vars_; ++i) {
            for (std::uint32_t e = 0; e < mono[i]; ++e) term = term * forms[i];
        }
        result = result + term;
    }
    return result;
}

Polynomial Polynomial::reduce_mod_p(std::uint32_t p) const {
    if (!tag_.is_rational()) throw FieldMismatch();
    FieldTag tag = FieldTag::Fp(p);
    Polynomial r(n_vars_, degree_, tag);
    for (const auto& [m, c] : terms_) {
        std::uint32_t v = rational_mod_p(c.rat(), p);
        if (v != 0) r.terms_.emplace(m, Scalar::residue(v, p));
    }
    return r;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
    if (point.size() != n_vars_) throw DimensionMismatch("evaluation point length");
    Scalar acc = Scalar::zero(tag_);
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (std::size_t i = 0; i < n_vars_; ++i) {
            for (std::uint32_t e = 0; e < m[i]; ++e) v = v * point[i];
        }
        acc = acc + v;
    }
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = false;
        std::string mag;
        if (tag_.is_rational()) {
            negative = c.rat() < 0;
            mag = rational_str(negative ? Rational(-c.rat()) : c.rat());
        } else {
            mag = c.str();
        }
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        bool unit_coeff = (mag == "1");
        bool wrote_factor = false;
        if (!unit_coeff || m.degree() == 0) {
            out << mag;
            wrote_factor = true;
        }
        for (std::size_t i = 0; i < n_vars_; ++i) {
            if (m[i] == 0) continue;
            if (wrote_factor) out << '*';
            out << 'x' << i;
            if (m[i] >= 2) out << '^' << m[i];
            wrote_factor = true;
        }
    }
    return out.str();
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
    return f.derivative(var);
}

Polynomial substitute_linear(const Polynomial& f, const ExactMatrix& m) {
    return f.substitute_linear(m);
}

Polynomial reduce_mod_p(const Polynomial& f, std::uint32_t p) {
    return f.reduce_mod_p(p);
}

}  // namespace cubicgit
