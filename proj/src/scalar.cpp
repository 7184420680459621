#include "cubicgit/scalar.hpp"

#include <cctype>

namespace cubicgit {

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const char* what) -> Rational { throw SyntaxError(i, what); };
    std::string num, den;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') num += '-';  // mpz_set_str rejects a leading '+'
        ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        return fail("digit");
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            return fail("digit after '/'");
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
    }
    if (i != text.size()) return fail("end of number");
    if (den.empty()) den = "1";
    if (Integer(den, 10) == 0) throw SyntaxError(i, "nonzero denominator");
    Rational q{Integer(num, 10), Integer(den, 10)};
    q.canonicalize();
    return q;
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d : {2u, 3u, 5u, 7u}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 32-bit inputs.
    std::uint32_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = x * base % n;
            base = base * base % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldTag FieldTag::Fp(std::uint32_t p) {
    if (p < 3 || p >= (1u << 31) || !is_prime_u32(p))
        throw Error("field characteristic must be an odd prime below 2^31: got " +
                    std::to_string(p));
    return {FieldKind::prime, p};
}

std::string FieldTag::str() const {
    return is_rational() ? "Q" : "F_" + std::to_string(p);
}

Scalar Scalar::rational(Rational q) {
    Scalar s;
    q.canonicalize();
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::rational(long num, unsigned long den) {
    return rational(Rational(num, den));
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t p) {
    FieldTag tag = FieldTag::Fp(p);
    Scalar s;
    s.tag_ = tag;
    s.q_ = 0;
    s.r_ = static_cast<std::uint32_t>(value % p);
    return s;
}

Scalar Scalar::zero(FieldTag tag) { return of_int(0, tag); }
Scalar Scalar::one(FieldTag tag) { return of_int(1, tag); }

Scalar Scalar::of_int(long v, FieldTag tag) {
    if (tag.is_rational()) return rational(Rational(v));
    long r = v % static_cast<long>(tag.p);
    if (r < 0) r += tag.p;
    return residue(static_cast<std::uint64_t>(r), tag.p);
}

bool Scalar::is_zero() const { return tag_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return tag_.is_rational() ? q_ == 1 : r_ == 1; }

const Rational& Scalar::rat() const {
    if (!tag_.is_rational()) throw FieldMismatch();
    return q_;
}

std::uint32_t Scalar::residue_value() const {
    if (!tag_.is_prime()) throw FieldMismatch();
    return r_;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (tag_.is_rational()) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : tag_.p - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check(o);
    Scalar s = *this;
    if (tag_.is_rational()) s.q_ = q_ + o.q_;
    else {
        std::uint64_t v = std::uint64_t(r_) + o.r_;
        s.r_ = static_cast<std::uint32_t>(v >= tag_.p ? v - tag_.p : v);
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check(o);
    Scalar s = *this;
    if (tag_.is_rational()) s.q_ = q_ * o.q_;
    else s.r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % tag_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar s = *this;
    if (tag_.is_rational()) s.q_ = 1 / q_;
    else s.r_ = mod_inverse(r_, tag_.p);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(tag_ == o.tag_)) return false;
    return tag_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    return tag_.is_rational() ? rational_str(q_) : std::to_string(r_);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Extended Euclid; p prime and a != 0 mod p.
    long long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw DivisionByZero();
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t rational_mod_p(const Rational& q, std::uint32_t p) {
    Integer den = q.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), p))
        throw BadPrime(p, rational_str(q));
    std::uint32_t n = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_num().get_mpz_t(), p));
    std::uint32_t d = static_cast<std::uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
    return static_cast<std::uint32_t>(std::uint64_t(n) * mod_inverse(d, p) % p);
}

}  // namespace cubicgit
