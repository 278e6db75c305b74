#include "tracehom/multiplicity.hpp"

#include <algorithm>

#include "tracehom/errors.hpp"

namespace tracehom {

MultiplicityMap::MultiplicityMap(std::vector<std::pair<Subset, int>> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return canonical_subset_less(a.first, b.first); });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].second < 1)
            throw DomainError("multiplicity of " + subset_to_string(entries_[i].first) + " must be positive");
        if (i > 0 && entries_[i].first == entries_[i - 1].first)
            throw DomainError("duplicate member " + subset_to_string(entries_[i].first) + " in multiplicity map");
    }
}

int MultiplicityMap::value(Subset member) const {
    for (const auto& [f, v] : entries_)
        if (f == member) return v;
    return 0;
}

int MultiplicityMap::total_copies() const {
    int total = 0;
    for (const auto& [f, v] : entries_) total += v;
    return total;
}

int MultiplicityMap::coordinate_load(int i) const {
    const Subset bit = Subset{1} << (i - 1);
    int total = 0;
    for (const auto& [f, v] : entries_)
        if (f & bit) total += v;
    return total;
}

std::string MultiplicityMap::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    for (const auto& [f, v] : entries_) {
        if (!out.empty()) out += " ";
        out += subset_to_string(f) + ":" + std::to_string(v);
    }
    return out;
}

bool canonical_multiplicity_less(const MultiplicityMap& a, const MultiplicityMap& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    for (std::size_t i = 0; i < std::min(ea.size(), eb.size()); ++i) {
        if (ea[i].first != eb[i].first) return canonical_subset_less(ea[i].first, eb[i].first);
    }
    if (ea.size() != eb.size()) return ea.size() < eb.size();
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i].second != eb[i].second) return ea[i].second < eb[i].second;
    return false;
}

} // namespace tracehom
