#include "vulnmap/errors.hpp"
#include "vulnmap/hierclf.hpp"
#include "vulnmap/util.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace vulnmap {

std::vector<int> WeaknessHierarchy::ancestors_inclusive(int id) const {
    std::set<int> seen;
    std::vector<int> stack{id};
    while (!stack.empty()) {
        const int n = stack.back();
        stack.pop_back();
        if (!contains(n) || !seen.insert(n).second) continue;
        for (int p : parents.at(n)) stack.push_back(p);
    }
    return {seen.begin(), seen.end()};
}

std::vector<int> WeaknessHierarchy::ancestor_closure(const std::vector<int>& labels) const {
    std::set<int> out;
    for (int l : labels)
        for (int a : ancestors_inclusive(l)) out.insert(a);
    return {out.begin(), out.end()};
}

WeaknessHierarchy build_hierarchy(const std::vector<CweEntry>& cwes) {
    WeaknessHierarchy h;
    std::set<int> active;
    for (const auto& c : cwes)
        if (!c.is_category && c.status == CweStatus::active) active.insert(c.id);
    for (const auto& c : cwes) {
        if (!active.count(c.id)) continue;
        auto& ps = h.parents[c.id];
        for (int p : c.parents)
            if (active.count(p) && p != c.id) ps.push_back(p);
        std::sort(ps.begin(), ps.end());
        h.children[c.id];
    }
    for (const auto& [n, ps] : h.parents)
        for (int p : ps) h.children[p].push_back(n);
    for (auto& [_, cs] : h.children) std::sort(cs.begin(), cs.end());
    h.nodes.assign(active.begin(), active.end());
    for (int n : h.nodes)
        if (h.parents[n].empty()) h.roots.push_back(n);

    // The catalog parser already rejects cycles, but hierarchies can also be
    // assembled from hand-built entries.
    std::map<int, int> state;
    std::function<void(int)> visit = [&](int n) {
        state[n] = 1;
        for (int c : h.children[n]) {
            if (state[c] == 1) throw IntegrityError("hierarchy: cycle through " + cwe_label(n) + " and " + cwe_label(c));
            if (state[c] == 0) visit(c);
        }
        state[n] = 2;
    };
    for (int n : h.nodes)
        if (state[n] == 0) visit(n);
    if (!h.nodes.empty() && h.roots.empty()) throw IntegrityError("hierarchy: no root nodes");
    return h;
}

void index_training_cves(WeaknessHierarchy& h, const std::vector<const CveRecord*>& cves) {
    std::map<int, std::vector<std::string>> index;
    std::map<int, std::vector<int>> ancestor_cache;
    for (const CveRecord* c : cves) {
        std::set<int> nodes;
        for (int l : c->assigned_cwes) {
            if (!h.contains(l)) continue;
            auto it = ancestor_cache.find(l);
            if (it == ancestor_cache.end()) it = ancestor_cache.emplace(l, h.ancestors_inclusive(l)).first;
            nodes.insert(it->second.begin(), it->second.end());
        }
        for (int n : nodes) index[n].push_back(c->id);
    }
    for (auto& [_, ids] : index) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
    h.training_index.clear();
    for (int n : h.nodes) h.training_index[n] = std::move(index[n]);
}

WeaknessHierarchy build_hierarchy(const KnowledgeSnapshot& snapshot) {
    WeaknessHierarchy h = build_hierarchy(snapshot.cwes);
    std::vector<const CveRecord*> all;
    all.reserve(snapshot.cves.size());
    for (const auto& c : snapshot.cves) all.push_back(&c);
    index_training_cves(h, all);
    return h;
}

}  // namespace vulnmap
