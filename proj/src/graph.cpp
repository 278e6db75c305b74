#include "tracehom/graph.hpp"

#include <algorithm>

#include "tracehom/errors.hpp"

namespace tracehom {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : SimpleGraph(vertex_count, std::move(edges), {}) {}

SimpleGraph::SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges, std::vector<ConflictVertex> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count < 0) throw DomainError("vertex count must be nonnegative");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count)
        throw DomainError("label count must match vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw DomainError("loop edge at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw DomainError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph conflict_graph(const Hypergraph& h, const MultiplicityMap& m) {
    std::vector<ConflictVertex> labels;
    for (const auto& [member, count] : m.entries()) {
        if (!h.is_member(member))
            throw DomainError("multiplicity support " + subset_to_string(member) + " is not a member of the family");
        for (int copy = 1; copy <= count; ++copy) labels.push_back({member, copy});
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i].member & labels[j].member) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    int n = static_cast<int>(labels.size());
    return SimpleGraph(n, std::move(edges), std::move(labels));
}

} // namespace tracehom
