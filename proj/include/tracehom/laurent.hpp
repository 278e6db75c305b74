#ifndef TRACEHOM_LAURENT_HPP
#define TRACEHOM_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "tracehom/bigint.hpp"

namespace tracehom {

/// Laurent polynomial in t with arbitrary-precision integer coefficients.
/// Negative exponents occur in intermediates (t^{-1} substitutions); final
/// path-space series are validated to live in t^{>=1} with coefficients >= 0.
/// Zero coefficients are never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    static LaurentPolynomial monomial(BigInt coefficient, int exponent);
    static LaurentPolynomial constant(BigInt value) { return monomial(std::move(value), 0); }
    static LaurentPolynomial one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coefficient(int exponent) const;
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial& operator*=(const LaurentPolynomial& other) { return *this = *this * other; }

    LaurentPolynomial scaled(const BigInt& factor) const;
    LaurentPolynomial shifted(int exponent_delta) const; // multiply by t^delta
    LaurentPolynomial pow(int exponent) const;           // exponent >= 0
    LaurentPolynomial substitute_inverse() const;        // t -> t^{-1}

    bool operator==(const LaurentPolynomial& other) const = default;

    std::string str() const; // "8t^2 + t^3", "0"

private:
    std::map<int, BigInt> terms_;

    void add_term(int exponent, const BigInt& coefficient);
};

} // namespace tracehom

#endif
