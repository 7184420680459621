#include <cctype>
#include <optional>

#include "cubicgit/errors.hpp"
#include "cubicgit/polynomial.hpp"

namespace cubicgit {

namespace {

class Parser {
public:
    Parser(const std::string& text, std::size_t n_vars, FieldTag tag)
        : text_(text), n_vars_(n_vars), tag_(tag) {}

    Polynomial run() {
        std::vector<std::pair<Monomial, Scalar>> terms;
        std::optional<std::uint32_t> degree;

        skip_ws();
        bool negate = false;
        if (peek() == '-' || peek() == '+') negate = take() == '-';
        for (;;) {
            auto [m, c] = term();
            if (degree && m.degree() != *degree)
                throw InhomogeneousError(*degree, m.degree());
            if (!degree) degree = m.degree();
            terms.emplace_back(std::move(m), negate ? -c : c);

            skip_ws();
            if (pos_ == text_.size()) break;
            char op = take();
            if (op == '+') negate = false;
            else if (op == '-') negate = true;
            else throw SyntaxError(pos_ - 1, "'+' or '-'");
            skip_ws();
        }
        return Polynomial::from_terms(n_vars_, degree.value_or(0), tag_, std::move(terms));
    }

private:
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::pair<Monomial, Scalar> term() {
        Scalar coeff = Scalar::one(tag_);
        std::vector<std::uint32_t> exps(n_vars_, 0);
        char c = peek();
        bool any = false;
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            coeff = coefficient();
            any = true;
        } else if (c == 'x') {
            factor(exps);
            any = true;
        } else {
            throw SyntaxError(pos_, "coefficient or variable");
        }
        while (peek() == '*') {
            take();
            if (peek() != 'x') throw SyntaxError(pos_, "variable");
            factor(exps);
        }
        if (!any) throw SyntaxError(pos_, "term");
        return {Monomial(std::move(exps)), std::move(coeff)};
    }

    void factor(std::vector<std::uint32_t>& exps) {
        take();  // 'x'
        unsigned long idx = uint_lit("variable index");
        if (idx >= n_vars_) {
            throw UnknownVariable("x" + std::to_string(idx));
        }
        std::uint32_t e = 1;
        if (peek() == '^') {
            take();
            skip_ws();
            e = static_cast<std::uint32_t>(uint_lit("exponent"));
        }
        exps[idx] += e;
    }

    Scalar coefficient() {
        std::string num;
        char c = peek();
        if (c == '-' || c == '+') {
            if (take() == '-') num += '-';  // mpz_set_str rejects a leading '+'
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "digit");
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            num += take();
        std::string den = "1";
        if (peek() == '/') {
            take();
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError(pos_, "digit after '/'");
            den.clear();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                den += take();
            if (Integer(den, 10) == 0) throw SyntaxError(pos_, "nonzero denominator");
        }
        Rational q{Integer(num, 10), Integer(den, 10)};
        q.canonicalize();
        if (tag_.is_rational()) return Scalar::rational(std::move(q));
        return Scalar::residue(rational_mod_p(q, tag_.p), tag_.p);
    }

    unsigned long uint_lit(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError(pos_, what);
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1000000) throw SyntaxError(pos_, "smaller integer");
            ++pos_;
        }
        return v;
    }

    const std::string& text_;
    std::size_t n_vars_;
    FieldTag tag_;
    std::size_t pos_{0};
};

}  // namespace

Polynomial parse_poly(const std::string& text, std::size_t n_vars, FieldTag tag) {
    if (n_vars == 0) throw DimensionMismatch("n_vars must be positive");
    return Parser(text, n_vars, tag).run();
}

}  // namespace cubicgit
