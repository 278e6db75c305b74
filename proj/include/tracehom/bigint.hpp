#ifndef TRACEHOM_BIGINT_HPP
#define TRACEHOM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace tracehom {

// Acyclic-orientation counts grow factorially with the conflict-graph size,
// so every count and coefficient in this project is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

} // namespace tracehom

#endif
