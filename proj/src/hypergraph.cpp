#include "tracehom/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "tracehom/errors.hpp"

namespace tracehom {

Hypergraph::Hypergraph(int n, std::vector<Subset> generators) : n_(n) {
    if (n < 1 || n > kMaxGroundSize)
        throw DomainError("ground-set size n must be between 1 and " + std::to_string(kMaxGroundSize));
    const Subset universe = (Subset{1} << n) - 1;

    std::sort(generators.begin(), generators.end(), canonical_subset_less);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    for (Subset g : generators) {
        if ((g & ~universe) != 0) throw DomainError("generator " + subset_to_string(g) + " has elements outside {1..n}");
        if (subset_size(g) < 2)
            throw DomainError("generator " + subset_to_string(g) + " has fewer than 2 elements");
    }

    // Keep only inclusion-minimal generators. Canonical order sorts by size,
    // so potential subsets always precede their supersets.
    for (Subset g : generators) {
        bool minimal = true;
        for (Subset accepted : generators_) {
            if (subset_contains(g, accepted)) {
                warnings_.push_back("generator " + subset_to_string(g) + " dropped: superset of " +
                                    subset_to_string(accepted));
                minimal = false;
                break;
            }
        }
        if (minimal) generators_.push_back(g);
    }
}

Hypergraph Hypergraph::from_element_lists(int n, const std::vector<std::vector<int>>& generators) {
    std::vector<Subset> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(subset_from_elements(g, n));
    return Hypergraph(n, std::move(gens));
}

bool Hypergraph::is_member(Subset f) const {
    for (Subset g : generators_)
        if (subset_contains(f, g)) return true;
    return false;
}

bool Hypergraph::is_member_of_elements(const std::vector<int>& elements) const {
    return is_member(subset_from_elements(elements, n_));
}

std::vector<Subset> Hypergraph::members_within(Subset k, std::size_t max_members) const {
    // Upward closure restricted to subsets of K, grown one element at a time
    // from the generators that fit inside K.
    std::set<Subset> seen;
    std::vector<Subset> frontier;
    for (Subset g : generators_) {
        if (subset_contains(k, g) && seen.insert(g).second) frontier.push_back(g);
    }
    while (!frontier.empty()) {
        Subset cur = frontier.back();
        frontier.pop_back();
        Subset missing = k & ~cur;
        while (missing) {
            Subset bit = missing & (~missing + 1);
            missing &= missing - 1;
            Subset next = cur | bit;
            if (seen.insert(next).second) {
                if (seen.size() > max_members)
                    throw ResourceLimitError("member cap exceeded (max_members=" + std::to_string(max_members) + ")");
                frontier.push_back(next);
            }
        }
    }
    std::vector<Subset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), canonical_subset_less);
    return out;
}

std::vector<Subset> Hypergraph::members(std::size_t max_members) const {
    const Subset universe = (Subset{1} << n_) - 1;
    return members_within(universe, max_members);
}

int Hypergraph::min_member_size() const {
    if (generators_.empty()) throw DomainError("min member size undefined: the family has no members");
    int best = n_ + 1;
    for (Subset g : generators_) best = std::min(best, subset_size(g));
    return best;
}

std::string Hypergraph::canonical_encoding() const {
    std::string out = "n=" + std::to_string(n_) + ";g=";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += "|";
        out += subset_to_string(generators_[i]);
    }
    return out;
}

bool matching_refines(const Matching& g, const Matching& h) {
    for (Subset a : g.members) {
        bool covered = false;
        for (Subset b : h.members) {
            if (subset_contains(b, a)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool canonical_matching_less(const Matching& a, const Matching& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    for (std::size_t i = 0; i < a.members.size(); ++i) {
        if (a.members[i] != b.members[i]) return canonical_subset_less(a.members[i], b.members[i]);
    }
    return false;
}

MatchingPoset::MatchingPoset(std::vector<Matching> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), canonical_matching_less);
    const std::size_t m = elements_.size();
    leq_.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) leq_[i][j] = matching_refines(elements_[i], elements_[j]);
}

namespace {

// Backtracking over candidate members in canonical order; every nonempty
// prefix-disjoint selection is a matching.
void enumerate_matchings(const std::vector<Subset>& candidates, std::size_t start, Subset used,
                         std::vector<Subset>& current, std::vector<Matching>& out, std::size_t cap) {
    for (std::size_t i = start; i < candidates.size(); ++i) {
        if (used & candidates[i]) continue;
        current.push_back(candidates[i]);
        Matching m{current};
        std::sort(m.members.begin(), m.members.end(), canonical_subset_less);
        out.push_back(std::move(m));
        if (out.size() > cap)
            throw ResourceLimitError("matching cap exceeded (max_matchings=" + std::to_string(cap) + ")");
        enumerate_matchings(candidates, i + 1, used | candidates[i], current, out, cap);
        current.pop_back();
    }
}

std::vector<Matching> matchings_over(const std::vector<Subset>& candidates, std::size_t cap) {
    std::vector<Matching> out;
    std::vector<Subset> current;
    enumerate_matchings(candidates, 0, 0, current, out, cap);
    std::sort(out.begin(), out.end(), canonical_matching_less);
    return out;
}

} // namespace

std::vector<Matching> all_matchings(const Hypergraph& h, const HypergraphLimits& limits) {
    return matchings_over(h.members(limits.max_members), limits.max_matchings);
}

MatchingPoset matchings_strictly_below(const Hypergraph& h, Subset k, const HypergraphLimits& limits) {
    if (!h.is_member(k)) throw DomainError("K = " + subset_to_string(k) + " is not a member of the family");
    std::vector<Matching> matchings = matchings_over(h.members_within(k, limits.max_members), limits.max_matchings);
    std::erase_if(matchings, [k](const Matching& m) { return m.members.size() == 1 && m.members.front() == k; });
    return MatchingPoset(std::move(matchings));
}

SimplicialComplex order_complex(const MatchingPoset& p, std::size_t max_facets) {
    const std::size_t n = p.size();
    if (n == 0) return SimplicialComplex::empty_complex();

    auto lt = [&p](std::size_t i, std::size_t j) { return i != j && p.leq(i, j); };

    // Cover relation; maximal chains are exactly the maximal paths in it.
    std::vector<std::vector<std::size_t>> covers(n);
    std::vector<bool> is_minimal(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!lt(i, j)) continue;
            is_minimal[j] = false;
            bool direct = true;
            for (std::size_t mid = 0; mid < n && direct; ++mid) direct = !(lt(i, mid) && lt(mid, j));
            if (direct) covers[i].push_back(j);
        }
    }

    std::vector<std::vector<int>> facets;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        chain.push_back(static_cast<int>(v));
        if (covers[v].empty()) {
            facets.push_back(chain);
            if (facets.size() > max_facets)
                throw ResourceLimitError("order-complex facet cap exceeded (" + std::to_string(max_facets) + ")");
        } else {
            for (std::size_t w : covers[v]) self(self, w);
        }
        chain.pop_back();
    };
    for (std::size_t v = 0; v < n; ++v)
        if (is_minimal[v]) dfs(dfs, v);

    return SimplicialComplex::from_facets(static_cast<int>(n), std::move(facets));
}

} // namespace tracehom
