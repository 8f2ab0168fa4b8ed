#pragma once

#include "vulnmap/attackmap.hpp"
#include "vulnmap/baseline.hpp"
#include "vulnmap/config.hpp"
#include "vulnmap/datafeeds.hpp"
#include "vulnmap/eval.hpp"
#include "vulnmap/feedback.hpp"
#include "vulnmap/hierclf.hpp"
#include "vulnmap/textprep.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vulnmap {

/// CVEs with at least one assigned CWE that is a hierarchy node (an active
/// weakness).  Labels outside the hierarchy are dropped.
std::vector<LabeledDoc> labeled_documents(const KnowledgeSnapshot& snap);

/// Accept adds the proposed CWE to the CVE's labels, reject removes it,
/// replace swaps it for the replacement.  Records apply in id order.  A CVE
/// that gains its first label becomes a document.
void apply_feedback(std::vector<LabeledDoc>& docs, const KnowledgeSnapshot& snap,
                    const std::vector<FeedbackRecord>& feedback);

struct DocumentSplit {
    std::vector<LabeledDoc> train, validation, test;
};
DocumentSplit split_documents(const std::vector<LabeledDoc>& docs, const std::array<double, 3>& ratios,
                              std::uint64_t seed);

/// Glossary and manual groups as text (empty means none).
struct SynonymSources {
    std::string glossary;
    std::string manual;
};
SynonymSources load_synonym_sources(const AppConfig& cfg);
SynonymCodebook snapshot_codebook(const KnowledgeSnapshot& snap, const SynonymSources& sources);

struct TrainResult {
    HierarchicalModel model;
    ScoreReport test_report;
    std::vector<std::string> warnings;
};

/// Splits the labelled documents with the configured ratios and seed,
/// trains on the training part, tunes the threshold on validation and scores
/// the test part.
TrainResult train_pipeline(const KnowledgeSnapshot& snap, const TrainConfig& config, const SynonymSources& synonyms,
                           const std::vector<FeedbackRecord>& feedback = {});

/// Per-document predictions as CWE id lists.
std::map<std::string, std::vector<int>> predict_documents(const HierarchicalModel& model,
                                                          const std::vector<LabeledDoc>& docs);

/// Scores predictions against ancestor-closed truth, both restricted to the
/// universe (the model's label nodes by default).  Only documents whose
/// labels all lie inside the universe are scored; coverage reports their share.
ScoreReport evaluate_model(const HierarchicalModel& model, const std::vector<LabeledDoc>& docs,
                           const std::optional<std::set<int>>& universe = std::nullopt);

std::vector<ScoreReport> sweep_model(const HierarchicalModel& model, const std::vector<LabeledDoc>& docs,
                                     const std::vector<int>& cutoffs, CoverageMode mode = CoverageMode::all);

struct MrrResult {
    double mrr = 0;
    std::size_t evaluated = 0;
    std::size_t missing = 0;  // truth CVEs absent from the snapshot
    std::map<std::string, std::vector<std::string>> ranked;
};

/// Predicts CWEs from each ground-truth CVE's description (ignoring any NVD
/// assignment) and ranks techniques through the mapping table.
MrrResult two_step_mrr(const HierarchicalModel& model, const MappingTable& table, const KnowledgeSnapshot& snap,
                       const GroundTruthSet& truth);
/// Ranks techniques by TF-IDF cosine against the technique index.
MrrResult baseline_mrr(const TechniqueIndex& index, const KnowledgeSnapshot& snap, const GroundTruthSet& truth);

/// Share of snapshot CVEs that already carry an active-weakness assignment.
double lookup_coverage(const KnowledgeSnapshot& snap);

struct ChainView {
    bool include_actors = true;
    std::optional<std::size_t> max_techniques;
};
/// Structured form of an explanation chain, with a counts summary.  The
/// counts always describe the full chain; the view only trims the lists.
nlohmann::json chain_to_json(const ExplanationChain& chain, const ChainView& view = {});

/// Aggregate scores of a report as JSON (per-label rows omitted).
nlohmann::json report_summary_json(const ScoreReport& r);

/// Number of distinct labels whose count in `counts` meets each cutoff.
std::map<int, std::size_t> labels_per_cutoff(const std::map<int, int>& counts, const std::vector<int>& cutoffs);
/// Direct label counts over a set of documents.
std::map<int, int> label_counts(const std::vector<LabeledDoc>& docs);

}  // namespace vulnmap
