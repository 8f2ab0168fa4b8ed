#include "vulnmap/attackmap.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>

namespace vulnmap {

std::string_view to_string(EdgeSource s) {
    switch (s) {
        case EdgeSource::capec_chain: return "capec_chain";
        case EdgeSource::procedure_example: return "procedure_example";
        case EdgeSource::curated_map: return "curated_map";
    }
    return "capec_chain";
}

EdgeSource edge_source_from_string(std::string_view s) {
    if (s == "capec_chain") return EdgeSource::capec_chain;
    if (s == "procedure_example") return EdgeSource::procedure_example;
    if (s == "curated_map") return EdgeSource::curated_map;
    throw InputError("unknown edge source '" + std::string(s) + "'");
}

std::string_view to_string(CweOrigin o) { return o == CweOrigin::nvd_assigned ? "nvd_assigned" : "model_predicted"; }

std::vector<std::string> MappingTable::techniques_for(int cwe) const {
    std::set<std::string> out;
    auto [lo, hi] = cwe_to_technique.equal_range(cwe);
    for (auto it = lo; it != hi; ++it) out.insert(it->second.to_id);
    return {out.begin(), out.end()};
}

std::vector<std::string> MappingTable::actors_for(const std::string& technique) const {
    std::set<std::string> out;
    auto [lo, hi] = technique_to_actor.equal_range(technique);
    for (auto it = lo; it != hi; ++it) out.insert(it->second.to_id);
    return {out.begin(), out.end()};
}

std::vector<CuratedRow> parse_curated_map(std::string_view text, std::vector<std::string>* warnings) {
    std::vector<CuratedRow> rows;
    std::size_t line_no = 0;
    for (const auto& raw : split(text, '\n')) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto cols = split(line, '\t');
        auto cwe = cols.empty() ? std::nullopt : parse_cwe_id(trim(cols[0]));
        const std::string tech = cols.size() > 1 ? trim(cols[1]) : std::string();
        if (!cwe || !is_technique_id(tech)) {
            if (warnings) warnings->push_back("curated map line " + std::to_string(line_no) + ": malformed row skipped");
            continue;
        }
        CuratedRow r;
        r.cwe = *cwe;
        r.technique = tech;
        r.note = cols.size() > 2 ? trim(cols[2]) : std::string();
        r.line = line_no;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<MappingEdge> capec_chain_edges(const KnowledgeSnapshot& snap) {
    std::map<std::pair<int, std::string>, std::vector<int>> via;
    for (const auto& p : snap.capecs)
        for (int c : p.related_cwes) {
            if (!snap.find_cwe(c)) continue;
            for (const auto& t : p.related_techniques)
                if (snap.find_technique(t)) via[{c, t}].push_back(p.id);
        }
    std::vector<MappingEdge> out;
    for (auto& [key, capecs] : via) {
        std::sort(capecs.begin(), capecs.end());
        std::vector<std::string> names;
        for (int id : capecs) names.push_back("CAPEC-" + std::to_string(id));
        out.push_back(MappingEdge{cwe_label(key.first), key.second, EdgeSource::capec_chain, "via " + join(names, ", ")});
    }
    return out;
}

std::vector<MappingEdge> procedure_edges(const KnowledgeSnapshot& snap) {
    std::map<std::pair<int, std::string>, std::set<std::string>> via;
    for (const auto& t : snap.techniques)
        for (const auto& cve_id : t.referenced_cves) {
            const CveRecord* cve = snap.find_cve(cve_id);
            if (!cve) continue;
            for (int c : cve->assigned_cwes)
                if (snap.find_cwe(c)) via[{c, t.id}].insert(cve_id);
        }
    std::vector<MappingEdge> out;
    for (auto& [key, cves] : via)
        out.push_back(MappingEdge{cwe_label(key.first), key.second, EdgeSource::procedure_example,
                                  "references " + join({cves.begin(), cves.end()}, ", ")});
    return out;
}

std::multimap<int, MappingEdge> build_cwe_to_technique(const KnowledgeSnapshot& snap,
                                                       const std::vector<CuratedRow>& curated,
                                                       std::vector<std::string>* warnings) {
    std::multimap<int, MappingEdge> out;
    std::set<std::tuple<int, std::string, EdgeSource>> seen;
    auto add = [&](int cwe, MappingEdge e) {
        if (seen.emplace(cwe, e.to_id, e.source).second) out.emplace(cwe, std::move(e));
    };
    for (auto& e : capec_chain_edges(snap)) add(*parse_cwe_id(e.from_id), e);
    for (auto& e : procedure_edges(snap)) add(*parse_cwe_id(e.from_id), e);
    for (const auto& r : curated) {
        const bool cwe_ok = snap.find_cwe(r.cwe) != nullptr;
        const bool tech_ok = snap.find_technique(r.technique) != nullptr;
        if (!cwe_ok || !tech_ok) {
            if (warnings)
                warnings->push_back("curated map line " + std::to_string(r.line) + ": unknown " +
                                    (cwe_ok ? "technique " + r.technique : cwe_label(r.cwe)) + ", row skipped");
            continue;
        }
        std::string evidence = "curated map line " + std::to_string(r.line);
        if (!r.note.empty()) evidence += ": " + r.note;
        add(r.cwe, MappingEdge{cwe_label(r.cwe), r.technique, EdgeSource::curated_map, std::move(evidence)});
    }
    return out;
}

std::multimap<std::string, MappingEdge> build_technique_to_actor(const KnowledgeSnapshot& snap) {
    std::map<std::pair<std::string, std::string>, std::set<std::string>> credited;  // (technique, actor) -> via
    for (const auto& a : snap.actors)
        for (const auto& t : a.used_techniques) {
            credited[{t, a.id}].insert("uses " + t);
            if (auto parent = parent_technique(t); parent && snap.find_technique(*parent))
                credited[{*parent, a.id}].insert("credited from sub-technique " + t);
        }
    std::multimap<std::string, MappingEdge> out;
    for (const auto& [key, via] : credited) {
        // Direct use wins over parent credit when both exist.
        std::string evidence =
            via.count("uses " + key.first) ? "uses " + key.first : join({via.begin(), via.end()}, "; ");
        out.emplace(key.first, MappingEdge{key.first, key.second, EdgeSource::procedure_example, std::move(evidence)});
    }
    return out;
}

MappingTable build_mapping_table(const KnowledgeSnapshot& snap, const std::vector<CuratedRow>& curated,
                                 std::vector<std::string>* warnings) {
    MappingTable t;
    t.cwe_to_technique = build_cwe_to_technique(snap, curated, warnings);
    t.technique_to_actor = build_technique_to_actor(snap);
    t.built_from = snap.snapshot_id;
    return t;
}

CapecChainStats capec_chain_stats(const KnowledgeSnapshot& snap) {
    std::set<std::string> cwes, techs;
    for (const auto& e : capec_chain_edges(snap)) {
        cwes.insert(e.from_id);
        techs.insert(e.to_id);
    }
    return {cwes.size(), techs.size()};
}

std::vector<std::string> rank_techniques_from_cwes(const std::vector<int>& ranked_cwes, const MappingTable& table) {
    struct Info {
        std::size_t best_rank = SIZE_MAX;
        std::set<EdgeSource> sources;
    };
    std::map<std::string, Info> info;
    for (std::size_t r = 0; r < ranked_cwes.size(); ++r) {
        auto [lo, hi] = table.cwe_to_technique.equal_range(ranked_cwes[r]);
        for (auto it = lo; it != hi; ++it) {
            auto& i = info[it->second.to_id];
            i.best_rank = std::min(i.best_rank, r);
            i.sources.insert(it->second.source);
        }
    }
    std::vector<std::string> out;
    for (const auto& [t, _] : info) out.push_back(t);
    std::stable_sort(out.begin(), out.end(), [&](const std::string& a, const std::string& b) {
        const auto &ia = info.at(a), &ib = info.at(b);
        if (ia.best_rank != ib.best_rank) return ia.best_rank < ib.best_rank;
        if (ia.sources.size() != ib.sources.size()) return ia.sources.size() > ib.sources.size();
        return a < b;
    });
    return out;
}

std::vector<CweLink> rank_predicted_cwes(const std::vector<CwePrediction>& preds) {
    std::set<int> has_kept_descendant;
    for (const auto& p : preds)
        for (std::size_t i = 0; i + 1 < p.path.size(); ++i) has_kept_descendant.insert(p.path[i]);
    std::vector<CwePrediction> sorted = preds;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const CwePrediction& a, const CwePrediction& b) {
        auto key = [&](const CwePrediction& p) {
            return std::make_tuple(p.fallback ? 1 : 0, has_kept_descendant.count(p.cwe) ? 1 : 0, -p.score, p.cwe);
        };
        return key(a) < key(b);
    });
    std::vector<CweLink> out;
    for (const auto& p : sorted) out.push_back(CweLink{p.cwe, CweOrigin::model_predicted, p.score, p.fallback});
    return out;
}

ExplanationChain analyze_cve(const AnalyzeRequest& request, const HierarchicalModel* model, const MappingTable& table,
                             const KnowledgeSnapshot& snap) {
    ExplanationChain chain;
    const CveRecord* record = nullptr;
    if (request.cve) {
        if (!is_cve_id(*request.cve)) throw InputError("malformed CVE id '" + *request.cve + "'");
        chain.cve = *request.cve;
        record = snap.find_cve(*request.cve);
        if (!record && !request.description) throw NotFoundError(*request.cve + " is not in snapshot " + snap.snapshot_id);
        if (!record) chain.warnings.push_back(*request.cve + " is not in the snapshot; using the supplied description");
    } else if (!request.description) {
        throw InputError("analyze: either a CVE id or a description is required");
    }
    chain.description = record ? record->description : *request.description;

    if (record) {
        for (int c : record->assigned_cwes) {
            const CweEntry* e = snap.find_cwe(c);
            if (e && !e->is_category && e->status == CweStatus::active)
                chain.cwe_links.push_back(CweLink{c, CweOrigin::nvd_assigned, std::nullopt, false});
            else
                chain.warnings.push_back(cwe_label(c) + " assigned by NVD is not an active weakness; ignored");
        }
    }
    if (chain.cwe_links.empty()) {
        if (!model) throw ConfigError("analyze: no model is loaded and the CVE has no usable CWE assignment");
        chain.cwe_links = rank_predicted_cwes(predict_cwes(chain.description, *model));
    }

    std::vector<int> ranked;
    for (const auto& l : chain.cwe_links) ranked.push_back(l.cwe);
    for (int c : ranked) {
        auto [lo, hi] = table.cwe_to_technique.equal_range(c);
        for (auto it = lo; it != hi; ++it) chain.technique_links.push_back(it->second);
    }
    chain.techniques = rank_techniques_from_cwes(ranked, table);

    std::map<std::string, ActorLink> actors;
    for (const auto& t : chain.techniques) {
        auto [lo, hi] = table.technique_to_actor.equal_range(t);
        for (auto it = lo; it != hi; ++it) {
            chain.actor_links.push_back(it->second);
            auto& a = actors[it->second.to_id];
            a.actor_id = it->second.to_id;
            a.edges.push_back(it->second);
        }
    }
    for (auto& [id, a] : actors) {
        const ThreatActor* ta = snap.find_actor(id);
        a.name = ta ? ta->name : id;
        std::set<std::string> supporting;
        for (const auto& e : a.edges) supporting.insert(e.from_id);
        a.supporting_techniques = supporting.size();
        chain.actors.push_back(std::move(a));
    }
    std::sort(chain.actors.begin(), chain.actors.end(), [](const ActorLink& a, const ActorLink& b) {
        if (a.supporting_techniques != b.supporting_techniques) return a.supporting_techniques > b.supporting_techniques;
        if (a.name != b.name) return a.name < b.name;
        return a.actor_id < b.actor_id;
    });
    return chain;
}

ExplanationChain analyze_cve(const std::string& cve, const HierarchicalModel* model, const MappingTable& table,
                             const KnowledgeSnapshot& snap) {
    return analyze_cve(AnalyzeRequest{cve, std::nullopt}, model, table, snap);
}

}  // namespace vulnmap
