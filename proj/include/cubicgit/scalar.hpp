#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

#include "cubicgit/errors.hpp"

namespace cubicgit {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" (or just "p" when q = 1).
std::string rational_str(const Rational& q);

// Accepts "p", "-p", "p/q"; canonicalizes. Throws SyntaxError.
Rational parse_rational(const std::string& text);

bool is_prime_u32(std::uint32_t n);

enum class FieldKind : std::uint8_t { rationals, prime };

// Every scalar container carries one of these; mixing tags is an error.
struct FieldTag {
    FieldKind kind{FieldKind::rationals};
    std::uint32_t p{0};

    static FieldTag Q() { return {}; }
    static FieldTag Fp(std::uint32_t p);  // odd prime below 2^31

    bool is_rational() const { return kind == FieldKind::rationals; }
    bool is_prime() const { return kind == FieldKind::prime; }
    std::string str() const;

    friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

// Exact scalar: a rational in lowest terms with positive denominator, or a
// prime-field residue in [0, p).
class Scalar {
public:
    Scalar() : tag_(FieldTag::Q()), q_(0) {}

    static Scalar rational(Rational q);
    static Scalar rational(long num, unsigned long den = 1);
    static Scalar residue(std::uint64_t value, std::uint32_t p);
    static Scalar zero(FieldTag tag);
    static Scalar one(FieldTag tag);
    // Canonical image of a small integer in the tagged field.
    static Scalar of_int(long v, FieldTag tag);

    const FieldTag& tag() const { return tag_; }
    bool is_zero() const;
    bool is_one() const;

    // Valid only for the matching tag.
    const Rational& rat() const;
    std::uint32_t residue_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check(const Scalar& o) const {
        if (!(tag_ == o.tag_)) throw FieldMismatch();
    }

    FieldTag tag_;
    Rational q_;       // rationals only
    std::uint32_t r_{0};  // prime field only
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

// Residue of num/den mod p; throws BadPrime when p | den.
std::uint32_t rational_mod_p(const Rational& q, std::uint32_t p);

}  // namespace cubicgit
