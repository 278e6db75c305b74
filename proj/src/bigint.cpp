#include "tracehom/bigint.hpp"

#include "tracehom/errors.hpp"

namespace tracehom {

BigInt factorial(int n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact at every step
    }
    return r;
}

} // namespace tracehom
