#ifndef TRACEHOM_INT_POLYNOMIAL_HPP
#define TRACEHOM_INT_POLYNOMIAL_HPP

#include <vector>

#include "tracehom/bigint.hpp"

namespace tracehom {

/// Ordinary polynomial (chromatic polynomials live here). Coefficients ascending
/// by degree; trailing zeros are normalized away, so the zero polynomial has an
/// empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    static IntPolynomial constant(BigInt value);
    static IntPolynomial variable(); // q
    static IntPolynomial monomial(BigInt coefficient, int degree);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coefficients_; }
    BigInt coefficient(int degree) const;
    bool is_zero() const { return coefficients_.empty(); }

    BigInt operator()(const BigInt& x) const; // Horner evaluation

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    IntPolynomial operator*(const IntPolynomial& other) const;
    IntPolynomial& operator*=(const IntPolynomial& other) { return *this = *this * other; }

    bool operator==(const IntPolynomial& other) const = default;

private:
    std::vector<BigInt> coefficients_;

    void normalize();
};

} // namespace tracehom

#endif
