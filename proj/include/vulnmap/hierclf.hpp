#pragma once

#include "vulnmap/datafeeds.hpp"
#include "vulnmap/features.hpp"
#include "vulnmap/textprep.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vulnmap {

/// The research-view DAG over active weaknesses.
struct WeaknessHierarchy {
    std::vector<int> nodes;                      // sorted
    std::map<int, std::vector<int>> children;    // sorted child lists
    std::map<int, std::vector<int>> parents;     // sorted parent lists
    std::vector<int> roots;                      // parentless nodes, sorted
    std::map<int, std::vector<std::string>> training_index;  // node -> CVE ids, sorted

    bool contains(int id) const { return parents.count(id) != 0; }
    /// The node and all of its ancestors, sorted.
    std::vector<int> ancestors_inclusive(int id) const;
    /// Labels restricted to hierarchy nodes, closed under ancestors.
    std::vector<int> ancestor_closure(const std::vector<int>& labels) const;

    bool operator==(const WeaknessHierarchy&) const = default;
};

/// Structure only: active weaknesses and their research-view parent links.
/// Deprecated and obsolete entries, and categories, are left out.
WeaknessHierarchy build_hierarchy(const std::vector<CweEntry>& cwes);

/// A CVE's assigned labels are propagated to every ancestor.  Labels that are
/// not hierarchy nodes are ignored.
void index_training_cves(WeaknessHierarchy& h, const std::vector<const CveRecord*>& cves);

/// Structure plus an index over every CVE in the snapshot.
WeaknessHierarchy build_hierarchy(const KnowledgeSnapshot& snapshot);

struct NodeClassifier {
    int node = 0;
    std::vector<double> weights;
    double bias = 0.0;

    double score(const FeatureVector& x) const;
    bool operator==(const NodeClassifier&) const = default;
};

struct TrainConfig {
    int min_samples = 500;
    /// When set, only these labels may become trainable label nodes.
    std::optional<std::vector<int>> label_universe;
    double learning_rate = 2.0;
    double momentum = 0.9;  // Nesterov; 0 gives plain gradient descent
    int epochs = 300;
    double l2 = 1e-4;
    double negative_ratio = 5.0;
    std::size_t max_positives = 5000;  // 0 means no cap
    bool class_balance = true;
    std::uint64_t seed = 42;
    int n_max = 2;
    int min_df = 3;
    std::vector<double> threshold_grid = {0.30, 0.35, 0.40, 0.45, 0.50, 0.55, 0.60, 0.65, 0.70};
    double default_threshold = 0.5;
    unsigned threads = 0;  // 0 means hardware concurrency
    /// Train / validation / test ratios used when a pipeline splits a snapshot.
    std::array<double, 3> split = {0.7, 0.1, 0.2};
};

/// One binary problem: rows with 0/1 targets and per-row weights.
struct NodeProblem {
    std::vector<const FeatureVector*> rows;
    std::vector<double> targets;
    std::vector<double> sample_weights;
    std::size_t dimension = 0;
};

/// Builds the weighted problem.  With class balancing each class carries
/// half of the total weight; otherwise every row weighs 1.
NodeProblem make_node_problem(const std::vector<const FeatureVector*>& positives,
                              const std::vector<const FeatureVector*>& negatives, std::size_t dimension,
                              bool class_balance);

/// Weighted mean log-loss plus (l2 / 2) * ||w||^2.  The bias is not penalised.
double node_objective(const NodeProblem& p, const std::vector<double>& w, double b, double l2);
void node_gradient(const NodeProblem& p, const std::vector<double>& w, double b, double l2,
                   std::vector<double>& grad_w, double& grad_b);

/// Full-batch gradient descent from zero.  Throws if either class is empty.
NodeClassifier train_node(int node, const std::vector<const FeatureVector*>& positives,
                          const std::vector<const FeatureVector*>& negatives, std::size_t dimension,
                          const TrainConfig& config);

struct CwePrediction {
    int cwe = 0;
    double score = 0.0;
    std::vector<int> path;  // root first, ends at cwe
    bool fallback = false;  // kept by max-fallback rather than by the threshold

    bool operator==(const CwePrediction&) const = default;
};

/// Threshold-guided descent.  Roots at or above the threshold are kept, or
/// the single best root when none qualifies (ties to the smaller id).  The
/// same rule is applied to the children of every kept node.  Each kept node
/// reports the kept-edge path from a kept root with the largest score sum
/// (ties to the lexicographically smallest path).  Output is sorted by score
/// descending, then id.
std::vector<CwePrediction> traverse(const std::vector<int>& roots, const std::map<int, std::vector<int>>& children,
                                    const std::function<double(int)>& score, double threshold);

struct HierarchicalModel {
    static constexpr std::uint32_t kFormatVersion = 1;

    WeaknessHierarchy hierarchy;
    Vocabulary vocabulary;
    SynonymCodebook codebook;
    std::vector<std::string> stopwords;       // sorted
    std::map<int, NodeClassifier> classifiers;
    double threshold = 0.5;
    std::string trained_on;                   // snapshot id
    std::map<int, int> sample_counts;         // direct label counts in the training split
    std::vector<int> label_nodes;             // trainable labels, sorted
    TrainConfig config;

    /// Roots and child lists restricted to nodes that have a classifier.
    std::vector<int> trained_roots() const;
    const std::map<int, std::vector<int>>& trained_children() const;
    void rebuild_views();

    TokenStream preprocess(std::string_view text) const;
    FeatureVector vectorize(std::string_view text) const;
    std::map<int, double> score_all(const FeatureVector& x) const;

private:
    std::vector<int> trained_roots_;
    std::map<int, std::vector<int>> trained_children_;
    std::optional<TextNormalizer> normalizer_;
};

std::vector<CwePrediction> predict_cwes(std::string_view description, const HierarchicalModel& model);
std::vector<CwePrediction> predict_cwes(std::string_view description, const HierarchicalModel& model,
                                        double threshold);

/// A training document: CVE id, text and its direct hierarchy labels.
struct LabeledDoc {
    std::string cve;
    std::string text;
    std::vector<int> labels;
};

/// Training inputs prepared from a snapshot and a split.
struct TrainingInputs {
    std::vector<CweEntry> cwes;
    SynonymCodebook codebook;
    std::vector<std::string> stopwords;  // empty means the built-in list
    std::vector<LabeledDoc> train;
    std::vector<LabeledDoc> validation;  // used to tune the threshold; may be empty
    std::string snapshot_id;
};

/// Trains every trainable node.  A node is trainable when its direct label
/// count in the training split is at least min_samples (and it is inside the
/// label universe when one is given); its ancestors are trained as well so
/// descent can reach it.
HierarchicalModel train_hierarchy(const TrainingInputs& inputs, const TrainConfig& config,
                                  std::vector<std::string>* warnings = nullptr);

/// Evaluation set of a prediction: the predicted CWEs as a sorted set.
std::vector<int> predicted_labels(const std::vector<CwePrediction>& preds);

std::string save_model(const HierarchicalModel& model);
HierarchicalModel load_model(std::string_view bytes);
std::string model_id(std::string_view bytes);

}  // namespace vulnmap
