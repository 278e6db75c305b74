#include "tracehom/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "tracehom/errors.hpp"

namespace tracehom {

SimplicialComplex SimplicialComplex::empty_complex() {
    SimplicialComplex x;
    x.vertex_count_ = 0;
    x.facets_.push_back({});
    return x;
}

bool SimplicialComplex::is_empty_complex() const {
    return facets_.size() == 1 && facets_.front().empty();
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, std::vector<std::vector<int>> facets) {
    if (vertex_count < 0) throw DomainError("vertex count must be nonnegative");
    SimplicialComplex x;
    x.vertex_count_ = vertex_count;

    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= vertex_count)
                throw DomainError("facet vertex " + std::to_string(v) + " out of range");
    }
    std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Drop facets contained in a later (larger) one.
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < facets.size() && maximal; ++j)
            maximal = !std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end());
        if (maximal) x.facets_.push_back(std::move(facets[i]));
    }
    return x;
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw DomainError("dimension of the void complex is undefined");
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<std::vector<int>>> SimplicialComplex::simplices_by_dimension() const {
    if (is_void()) return {};
    int dim = dimension();
    if (dim > 21)
        throw ResourceLimitError("closure cap: facet with " + std::to_string(dim + 1) +
                                 " vertices exceeds the 2^22-subset expansion guard");
    std::vector<std::set<std::vector<int>>> closure(static_cast<std::size_t>(dim) + 2);
    for (const auto& facet : facets_) {
        std::size_t k = facet.size();
        // All subsets of the facet, the empty one included.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<int> simplex;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::uint64_t{1} << i)) simplex.push_back(facet[i]);
            closure[simplex.size()].insert(std::move(simplex));
        }
    }
    std::vector<std::vector<std::vector<int>>> out;
    out.reserve(closure.size());
    for (auto& level : closure) out.emplace_back(level.begin(), level.end());
    return out;
}

std::size_t SimplicialComplex::simplex_count() const {
    std::size_t total = 0;
    for (const auto& level : simplices_by_dimension()) total += level.size();
    return total;
}

SimplicialComplex cone_over(const SimplicialComplex& base) {
    if (base.is_void()) return SimplicialComplex::from_facets(1, {{0}});
    int apex = base.vertex_count();
    std::vector<std::vector<int>> facets;
    for (auto f : base.facets()) {
        f.push_back(apex);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(apex + 1, std::move(facets));
}

} // namespace tracehom
