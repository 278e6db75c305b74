#include "tracehom/laurent.hpp"

#include "tracehom/errors.hpp"

namespace tracehom {

LaurentPolynomial LaurentPolynomial::monomial(BigInt coefficient, int exponent) {
    LaurentPolynomial p;
    if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
    return p;
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<int> LaurentPolynomial::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> LaurentPolynomial::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(int exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const BigInt& factor) const {
    LaurentPolynomial out;
    if (factor == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int exponent_delta) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + exponent_delta, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::pow(int exponent) const {
    if (exponent < 0) throw DomainError("LaurentPolynomial::pow: negative exponent");
    LaurentPolynomial acc = one();
    LaurentPolynomial base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::substitute_inverse() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        bool negative = c < 0;
        BigInt absval = negative ? BigInt(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        bool unit = absval == 1;
        if (!unit || e == 0) out += absval.str();
        if (e != 0) {
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace tracehom
