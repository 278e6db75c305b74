#ifndef TRACEHOM_SUBSET_HPP
#define TRACEHOM_SUBSET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tracehom {

// Subsets of the process set {1..n} are bitmasks: bit p-1 stands for process p.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 30;

int subset_size(Subset s);

/// Build a subset from 1-based elements; rejects out-of-range and duplicate entries.
Subset subset_from_elements(const std::vector<int>& elements, int n);

/// Ascending 1-based elements.
std::vector<int> subset_elements(Subset s);

inline bool subset_contains(Subset outer, Subset inner) { return (inner & ~outer) == 0; }

/// Canonical order used everywhere: cardinality first, then lexicographic on
/// the ascending element lists (so {1,4} precedes {2,3}).
bool canonical_subset_less(Subset a, Subset b);

std::string subset_to_string(Subset s); // "{1,2}"

} // namespace tracehom

#endif
