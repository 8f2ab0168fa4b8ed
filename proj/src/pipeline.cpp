#include "vulnmap/pipeline.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <algorithm>
#include <unordered_map>

namespace vulnmap {

namespace {

bool is_hierarchy_weakness(const KnowledgeSnapshot& snap, int id) {
    const CweEntry* e = snap.find_cwe(id);
    return e && !e->is_category && e->status == CweStatus::active;
}

}  // namespace

std::vector<LabeledDoc> labeled_documents(const KnowledgeSnapshot& snap) {
    std::vector<LabeledDoc> docs;
    for (const auto& c : snap.cves) {
        LabeledDoc d{c.id, c.description, {}};
        for (int l : c.assigned_cwes)
            if (is_hierarchy_weakness(snap, l)) d.labels.push_back(l);
        if (!d.labels.empty()) docs.push_back(std::move(d));
    }
    return docs;
}

void apply_feedback(std::vector<LabeledDoc>& docs, const KnowledgeSnapshot& snap,
                    const std::vector<FeedbackRecord>& feedback) {
    if (feedback.empty()) return;
    std::map<std::string, std::set<int>> labels;
    std::map<std::string, std::string> text;
    for (const auto& d : docs) {
        labels[d.cve].insert(d.labels.begin(), d.labels.end());
        text[d.cve] = d.text;
    }
    std::vector<FeedbackRecord> ordered = feedback;
    std::sort(ordered.begin(), ordered.end(),
              [](const FeedbackRecord& a, const FeedbackRecord& b) { return a.record_id < b.record_id; });
    for (const auto& r : ordered) {
        const CveRecord* cve = snap.find_cve(r.cve_id);
        if (!cve) continue;
        if (!text.count(r.cve_id)) text[r.cve_id] = cve->description;
        auto& set = labels[r.cve_id];
        switch (r.verdict) {
            case Verdict::accept:
                if (is_hierarchy_weakness(snap, r.proposed_cwe)) set.insert(r.proposed_cwe);
                break;
            case Verdict::reject:
                set.erase(r.proposed_cwe);
                break;
            case Verdict::replace:
                set.erase(r.proposed_cwe);
                if (r.replacement_cwe && is_hierarchy_weakness(snap, *r.replacement_cwe)) set.insert(*r.replacement_cwe);
                break;
        }
    }
    docs.clear();
    for (auto& [cve, set] : labels)
        if (!set.empty()) docs.push_back(LabeledDoc{cve, text[cve], {set.begin(), set.end()}});
}

DocumentSplit split_documents(const std::vector<LabeledDoc>& docs, const std::array<double, 3>& ratios,
                              std::uint64_t seed) {
    std::vector<SplitItem> items;
    items.reserve(docs.size());
    std::unordered_map<std::string, const LabeledDoc*> by_id;
    for (const auto& d : docs) {
        items.push_back(SplitItem{d.cve, d.labels});
        by_id.emplace(d.cve, &d);
    }
    const DatasetSplit s = split_dataset(items, ratios, seed);
    DocumentSplit out;
    for (const auto& id : s.train) out.train.push_back(*by_id.at(id));
    for (const auto& id : s.validation) out.validation.push_back(*by_id.at(id));
    for (const auto& id : s.test) out.test.push_back(*by_id.at(id));
    return out;
}

SynonymSources load_synonym_sources(const AppConfig& cfg) {
    SynonymSources s;
    if (!cfg.glossary.empty()) s.glossary = read_file(cfg.glossary);
    if (!cfg.manual_synonyms.empty()) s.manual = read_file(cfg.manual_synonyms);
    return s;
}

SynonymCodebook snapshot_codebook(const KnowledgeSnapshot& snap, const SynonymSources& sources) {
    return build_codebook(snap.cwes, parse_glossary(sources.glossary), parse_glossary(sources.manual));
}

TrainResult train_pipeline(const KnowledgeSnapshot& snap, const TrainConfig& config, const SynonymSources& synonyms,
                           const std::vector<FeedbackRecord>& feedback) {
    std::vector<LabeledDoc> docs = labeled_documents(snap);
    apply_feedback(docs, snap, feedback);
    DocumentSplit split = split_documents(docs, config.split, config.seed);
    TrainingInputs in;
    in.cwes = snap.cwes;
    in.codebook = snapshot_codebook(snap, synonyms);
    in.train = std::move(split.train);
    in.validation = std::move(split.validation);
    in.snapshot_id = snap.snapshot_id;
    TrainResult r;
    r.model = train_hierarchy(in, config, &r.warnings);
    r.test_report = evaluate_model(r.model, split.test);
    return r;
}

std::map<std::string, std::vector<int>> predict_documents(const HierarchicalModel& model,
                                                          const std::vector<LabeledDoc>& docs) {
    std::map<std::string, std::vector<int>> out;
    for (const auto& d : docs) out[d.cve] = predicted_labels(predict_cwes(d.text, model));
    return out;
}

ScoreReport evaluate_model(const HierarchicalModel& model, const std::vector<LabeledDoc>& docs,
                           const std::optional<std::set<int>>& universe) {
    const std::set<int> u = universe ? *universe : std::set<int>(model.label_nodes.begin(), model.label_nodes.end());
    LabelSets pred, truth;
    std::size_t covered = 0;
    for (const auto& d : docs) {
        const bool inside =
            !d.labels.empty() && std::all_of(d.labels.begin(), d.labels.end(), [&](int l) { return u.count(l) != 0; });
        if (!inside) continue;
        ++covered;
        auto& t = truth[d.cve];
        for (int l : model.hierarchy.ancestor_closure(d.labels))
            if (u.count(l)) t.insert(cwe_label(l));
        auto& p = pred[d.cve];
        for (int l : predicted_labels(predict_cwes(d.text, model)))
            if (u.count(l)) p.insert(cwe_label(l));
    }
    ScoreReport r = micro_macro_scores(pred, truth);
    r.coverage = docs.empty() ? 0.0 : static_cast<double>(covered) / static_cast<double>(docs.size());
    r.label_count = u.size();
    r.degenerate = covered == 0;
    return r;
}

std::vector<ScoreReport> sweep_model(const HierarchicalModel& model, const std::vector<LabeledDoc>& docs,
                                     const std::vector<int>& cutoffs, CoverageMode mode) {
    SweepInput in;
    in.sample_counts = model.sample_counts;
    for (const auto& d : docs) in.actual[d.cve] = d.labels;
    in.predicted = predict_documents(model, docs);
    in.expand_truth = [&](const std::vector<int>& labels) { return model.hierarchy.ancestor_closure(labels); };
    return threshold_sweep(in, cutoffs, mode);
}

MrrResult two_step_mrr(const HierarchicalModel& model, const MappingTable& table, const KnowledgeSnapshot& snap,
                       const GroundTruthSet& truth) {
    MrrResult r;
    LabelSets t;
    for (const auto& e : truth.entries) {
        t[e.cve] = e.labels;
        const CveRecord* cve = snap.find_cve(e.cve);
        if (!cve) {
            ++r.missing;
            continue;
        }
        std::vector<int> ranked;
        for (const auto& l : rank_predicted_cwes(predict_cwes(cve->description, model))) ranked.push_back(l.cwe);
        r.ranked[e.cve] = rank_techniques_from_cwes(ranked, table);
        ++r.evaluated;
    }
    r.mrr = mean_reciprocal_rank(r.ranked, t);
    return r;
}

MrrResult baseline_mrr(const TechniqueIndex& index, const KnowledgeSnapshot& snap, const GroundTruthSet& truth) {
    MrrResult r;
    LabelSets t;
    for (const auto& e : truth.entries) {
        t[e.cve] = e.labels;
        const CveRecord* cve = snap.find_cve(e.cve);
        if (!cve) {
            ++r.missing;
            continue;
        }
        std::vector<std::string> ids;
        for (const auto& [id, _] : rank_techniques(cve->description, index, index.entries().size())) ids.push_back(id);
        r.ranked[e.cve] = std::move(ids);
        ++r.evaluated;
    }
    r.mrr = mean_reciprocal_rank(r.ranked, t);
    return r;
}

double lookup_coverage(const KnowledgeSnapshot& snap) {
    if (snap.cves.empty()) return 0.0;
    std::size_t mapped = 0;
    for (const auto& c : snap.cves)
        mapped += std::any_of(c.assigned_cwes.begin(), c.assigned_cwes.end(),
                              [&](int l) { return is_hierarchy_weakness(snap, l); });
    return static_cast<double>(mapped) / static_cast<double>(snap.cves.size());
}

namespace {

nlohmann::json edge_json(const MappingEdge& e) {
    return {{"from", e.from_id}, {"to", e.to_id}, {"source", std::string(to_string(e.source))}, {"evidence", e.evidence}};
}

}  // namespace

nlohmann::json chain_to_json(const ExplanationChain& chain, const ChainView& view) {
    using nlohmann::json;
    json j;
    j["cve_id"] = chain.cve.empty() ? json(nullptr) : json(chain.cve);
    j["description"] = chain.description;
    json cwes = json::array();
    for (const auto& l : chain.cwe_links) {
        json c = {{"cwe", cwe_label(l.cwe)}, {"origin", std::string(to_string(l.origin))}, {"fallback", l.fallback}};
        c["score"] = l.score ? json(*l.score) : json(nullptr);
        cwes.push_back(std::move(c));
    }
    j["cwes"] = std::move(cwes);
    const std::size_t shown = view.max_techniques ? std::min(*view.max_techniques, chain.techniques.size())
                                                  : chain.techniques.size();
    json techs = json::array();
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& t = chain.techniques[i];
        json edges = json::array();
        for (const auto& e : chain.technique_links)
            if (e.to_id == t) edges.push_back(edge_json(e));
        techs.push_back({{"technique", t}, {"rank", i + 1}, {"edges", std::move(edges)}});
    }
    j["techniques"] = std::move(techs);
    if (view.include_actors) {
        json actors = json::array();
        for (const auto& a : chain.actors) {
            json edges = json::array();
            for (const auto& e : a.edges) edges.push_back(edge_json(e));
            actors.push_back({{"actor", a.actor_id},
                              {"name", a.name},
                              {"supporting_techniques", a.supporting_techniques},
                              {"edges", std::move(edges)}});
        }
        j["actors"] = std::move(actors);
    }
    j["counts"] = {{"cwes", chain.cwe_links.size()},
                   {"techniques", chain.techniques.size()},
                   {"actors", chain.actors.size()}};
    j["warnings"] = chain.warnings;
    return j;
}

std::map<int, std::size_t> labels_per_cutoff(const std::map<int, int>& counts, const std::vector<int>& cutoffs) {
    std::map<int, std::size_t> out;
    for (int c : cutoffs)
        out[c] = static_cast<std::size_t>(
            std::count_if(counts.begin(), counts.end(), [&](const auto& kv) { return kv.second >= c; }));
    return out;
}

std::map<int, int> label_counts(const std::vector<LabeledDoc>& docs) {
    std::map<int, int> out;
    for (const auto& d : docs)
        for (int l : std::set<int>(d.labels.begin(), d.labels.end())) ++out[l];
    return out;
}

nlohmann::json report_summary_json(const ScoreReport& r) {
    nlohmann::json j = {{"micro_precision", r.micro_precision}, {"micro_recall", r.micro_recall},
                        {"micro_f", r.micro_f},                 {"macro_precision", r.macro_precision},
                        {"macro_recall", r.macro_recall},       {"macro_f", r.macro_f},
                        {"evaluated", r.evaluated},             {"labels", r.label_count},
                        {"degenerate", r.degenerate}};
    j["coverage"] = r.coverage ? nlohmann::json(*r.coverage) : nlohmann::json(nullptr);
    j["sample_threshold"] = r.sample_threshold ? nlohmann::json(*r.sample_threshold) : nlohmann::json(nullptr);
    return j;
}

}  // namespace vulnmap
