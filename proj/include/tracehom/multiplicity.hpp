#ifndef TRACEHOM_MULTIPLICITY_HPP
#define TRACEHOM_MULTIPLICITY_HPP

#include <utility>
#include <vector>

#include "tracehom/subset.hpp"

namespace tracehom {

/// Finitely supported map m from members of F to positive integers. Entries are
/// kept in canonical member order; values are always >= 1 (zero values are
/// simply absent). The empty map is representable but most operations require
/// nonempty support.
class MultiplicityMap {
public:
    MultiplicityMap() = default;
    explicit MultiplicityMap(std::vector<std::pair<Subset, int>> entries);

    const std::vector<std::pair<Subset, int>>& entries() const { return entries_; }
    int value(Subset member) const; // 0 when absent
    bool empty() const { return entries_.empty(); }
    int total_copies() const; // Σ_F m(F)
    /// Σ_{F ∋ i} m(F) for 1-based coordinate i.
    int coordinate_load(int i) const;

    bool operator==(const MultiplicityMap& other) const = default;

    std::string str() const; // "{1,2}:1 {3,4}:2"

private:
    std::vector<std::pair<Subset, int>> entries_;
};

/// Canonical order on maps: supports compared lexicographically in member
/// order, then value tuples lexicographically.
bool canonical_multiplicity_less(const MultiplicityMap& a, const MultiplicityMap& b);

} // namespace tracehom

#endif
