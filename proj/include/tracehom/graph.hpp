#ifndef TRACEHOM_GRAPH_HPP
#define TRACEHOM_GRAPH_HPP

#include <utility>
#include <vector>

#include "tracehom/hypergraph.hpp"
#include "tracehom/multiplicity.hpp"
#include "tracehom/subset.hpp"

namespace tracehom {

/// Vertex (F, i) of a conflict graph: copy i (1-based, i <= m(F)) of member F.
struct ConflictVertex {
    Subset member = 0;
    int copy = 0;
    bool operator==(const ConflictVertex& other) const = default;
};

/// Simple undirected graph; vertices 0..n-1, edges normalized to (low, high),
/// deduplicated, loops rejected. Conflict graphs carry vertex labels.
class SimpleGraph {
public:
    SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges);
    SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges, std::vector<ConflictVertex> labels);

    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);
    static SimpleGraph path(int n);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<ConflictVertex>& labels() const { return labels_; }

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<ConflictVertex> labels_;
};

/// The conflict graph T_F(m): one vertex per copy (F, i), i in [m(F)], edges
/// joining distinct copies of intersecting members (so each member's copies
/// form a clique). Vertices appear in canonical member order, copies ascending.
SimpleGraph conflict_graph(const Hypergraph& h, const MultiplicityMap& m);

} // namespace tracehom

#endif
