#ifndef TRACEHOM_SIMPLICIAL_COMPLEX_HPP
#define TRACEHOM_SIMPLICIAL_COMPLEX_HPP

#include <cstddef>
#include <vector>

namespace tracehom {

/// Finite abstract simplicial complex on vertices 0..vertex_count-1, stored by
/// its facets (maximal simplices); the downward closure is generated on demand.
///
/// Two degenerate values matter:
///   - the empty complex {∅}: one empty facet, no vertices; carries reduced
///     homology of rank 1 in degree -1;
///   - the void complex: no simplices at all (default constructed).
class SimplicialComplex {
public:
    SimplicialComplex() = default; // void complex

    static SimplicialComplex empty_complex();

    /// Facets as sorted vertex lists (sorting/deduplication applied; contained
    /// facets dropped). The empty facet {} is allowed.
    static SimplicialComplex from_facets(int vertex_count, std::vector<std::vector<int>> facets);

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const;
    int vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    /// Dimension of the complex: -1 for {∅}, largest facet size - 1 otherwise.
    /// Undefined (throws) on the void complex.
    int dimension() const;

    /// Full closure grouped by dimension: result[d+1] lists the d-simplices in
    /// canonical (sorted) order, d ranging over -1..dimension(). Empty for the
    /// void complex.
    std::vector<std::vector<std::vector<int>>> simplices_by_dimension() const;

    /// Total number of simplices in the closure, the empty simplex included.
    std::size_t simplex_count() const;

    bool operator==(const SimplicialComplex& other) const = default;

private:
    int vertex_count_ = 0;
    std::vector<std::vector<int>> facets_;
};

/// Join with a single new vertex (used by tests: cones are acyclic).
SimplicialComplex cone_over(const SimplicialComplex& base);

} // namespace tracehom

#endif
