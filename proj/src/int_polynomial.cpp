#include "tracehom/int_polynomial.hpp"

namespace tracehom {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
    normalize();
}

IntPolynomial IntPolynomial::constant(BigInt value) {
    IntPolynomial p;
    if (value != 0) p.coefficients_.push_back(std::move(value));
    return p;
}

IntPolynomial IntPolynomial::variable() { return monomial(1, 1); }

IntPolynomial IntPolynomial::monomial(BigInt coefficient, int degree) {
    IntPolynomial p;
    if (coefficient != 0) {
        p.coefficients_.assign(static_cast<std::size_t>(degree) + 1, 0);
        p.coefficients_.back() = std::move(coefficient);
    }
    return p;
}

BigInt IntPolynomial::coefficient(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coefficients_.size())) return 0;
    return coefficients_[static_cast<std::size_t>(degree)];
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void IntPolynomial::normalize() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (coefficients_.size() < other.coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (coefficients_.size() < other.coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<BigInt> out(coefficients_.size() + other.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            out[i + j] += coefficients_[i] * other.coefficients_[j];
    return IntPolynomial(std::move(out));
}

} // namespace tracehom
