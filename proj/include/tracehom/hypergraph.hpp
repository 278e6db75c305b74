#ifndef TRACEHOM_HYPERGRAPH_HPP
#define TRACEHOM_HYPERGRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tracehom/simplicial_complex.hpp"
#include "tracehom/subset.hpp"

namespace tracehom {

struct HypergraphLimits {
    std::size_t max_members = 100000;
    std::size_t max_matchings = 1000000;
};

/// Upward-closed family F of subsets of {1..n}, encoded by the antichain of its
/// minimal sets (the generators). F ∈ F iff F contains some generator. Every
/// generator has 2 <= |G| <= n; redundant input generators (supersets of other
/// generators) are dropped with a warning collected on the instance.
/// Immutable after construction.
class Hypergraph {
public:
    Hypergraph(int n, std::vector<Subset> generators);
    static Hypergraph from_element_lists(int n, const std::vector<std::vector<int>>& generators);

    int ground_size() const { return n_; }
    const std::vector<Subset>& generators() const { return generators_; }
    const std::vector<std::string>& reduction_warnings() const { return warnings_; }
    bool has_members() const { return !generators_.empty(); }

    bool is_member(Subset f) const;
    /// Membership test on a 1-based element list; out-of-range elements raise DomainError.
    bool is_member_of_elements(const std::vector<int>& elements) const;

    /// All members of F in canonical order (cardinality, then lexicographic).
    std::vector<Subset> members(std::size_t max_members = HypergraphLimits{}.max_members) const;

    /// Members contained in K, canonical order.
    std::vector<Subset> members_within(Subset k, std::size_t max_members = HypergraphLimits{}.max_members) const;

    /// s(F) = size of the smallest member; DomainError when F is empty.
    int min_member_size() const;

    /// Stable textual key ("n=4;g={1,2}|{3,4}") used by caches.
    std::string canonical_encoding() const;

private:
    int n_ = 0;
    std::vector<Subset> generators_;
    std::vector<std::string> warnings_;
};

/// A set of pairwise disjoint members, canonically sorted.
struct Matching {
    std::vector<Subset> members;
    bool operator==(const Matching& other) const = default;
};

/// G ⪯ H iff every member of G is contained in some member of H.
bool matching_refines(const Matching& g, const Matching& h);
bool canonical_matching_less(const Matching& a, const Matching& b);

/// Finite poset of matchings with the relation precomputed on construction.
class MatchingPoset {
public:
    MatchingPoset() = default;
    explicit MatchingPoset(std::vector<Matching> elements);

    std::size_t size() const { return elements_.size(); }
    const std::vector<Matching>& elements() const { return elements_; }
    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }

private:
    std::vector<Matching> elements_;
    std::vector<std::vector<bool>> leq_;
};

/// All nonempty matchings of F (pairwise disjoint members), canonical order.
std::vector<Matching> all_matchings(const Hypergraph& h, const HypergraphLimits& limits = {});

/// The poset M(F)_{≺K}: matchings whose members all lie inside K, minus the
/// singleton {K}. K must be a member of F.
MatchingPoset matchings_strictly_below(const Hypergraph& h, Subset k, const HypergraphLimits& limits = {});

/// Order complex: vertices are poset elements (by index), simplices are chains.
/// The empty poset yields the empty complex {∅}.
SimplicialComplex order_complex(const MatchingPoset& p, std::size_t max_facets = HypergraphLimits{}.max_matchings);

} // namespace tracehom

#endif
