#include "tracehom/subset.hpp"

#include <bit>

#include "tracehom/errors.hpp"

namespace tracehom {

int subset_size(Subset s) { return std::popcount(s); }

Subset subset_from_elements(const std::vector<int>& elements, int n) {
    if (n < 1 || n > kMaxGroundSize)
        throw DomainError("ground-set size n must be between 1 and " + std::to_string(kMaxGroundSize));
    Subset s = 0;
    for (int e : elements) {
        if (e < 1 || e > n)
            throw DomainError("element " + std::to_string(e) + " outside {1.." + std::to_string(n) + "}");
        Subset bit = Subset{1} << (e - 1);
        if (s & bit) throw DomainError("duplicate element " + std::to_string(e));
        s |= bit;
    }
    return s;
}

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(s)));
    while (s) {
        int b = std::countr_zero(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

bool canonical_subset_less(Subset a, Subset b) {
    if (a == b) return false;
    int sa = std::popcount(a), sb = std::popcount(b);
    if (sa != sb) return sa < sb;
    // Equal sizes: the smallest element of the symmetric difference decides;
    // it belongs to the lexicographically smaller set.
    Subset d = a ^ b;
    return (a >> std::countr_zero(d)) & 1;
}

std::string subset_to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace tracehom
