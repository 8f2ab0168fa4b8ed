#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vulnmap {

struct GroundTruthEntry {
    std::string cve;
    std::set<std::string> labels;
    std::string origin;  // "procedure_example" or "manual"
};

struct GroundTruthSet {
    std::vector<GroundTruthEntry> entries;
    std::size_t count(std::string_view origin) const;
};

/// Tab-separated: CVE id, comma-separated labels, origin tag.  Blank lines
/// and '#' comments are skipped.
GroundTruthSet parse_ground_truth(std::string_view text);

struct SplitItem {
    std::string id;
    std::vector<int> labels;
};

struct DatasetSplit {
    std::vector<std::string> train, validation, test;
};

/// Split sizes by largest-remainder rounding (ties to the earlier part).
std::array<std::size_t, 3> split_sizes(std::size_t n, const std::array<double, 3>& ratios);

/// Deterministic stratified split.  Items are grouped by their rarest label,
/// shuffled within each group under the seed, and dealt out so that every
/// group is spread across the three parts in proportion to the ratios.
DatasetSplit split_dataset(const std::vector<SplitItem>& items, const std::array<double, 3>& ratios,
                           std::uint64_t seed);

using LabelSets = std::map<std::string, std::set<std::string>>;

struct LabelScore {
    double precision = 0, recall = 0, f = 0;
    std::size_t support = 0;  // occurrences in the actual sets
    std::size_t tp = 0, fp = 0, fn = 0;
};

struct ScoreReport {
    std::map<std::string, LabelScore> per_label;
    std::size_t tp = 0, fp = 0, fn = 0;
    double micro_precision = 0, micro_recall = 0, micro_f = 0;
    double macro_precision = 0, macro_recall = 0, macro_f = 0;
    std::size_t evaluated = 0;  // number of CVEs scored
    std::optional<int> sample_threshold;
    std::optional<double> coverage;
    std::size_t label_count = 0;  // size of the label universe in a sweep row
    bool degenerate = false;
};

/// Per-label counts pooled for micro scores and averaged for macro scores
/// over the union of labels appearing in either side.  Ratios with a zero
/// denominator count as 0.  Throws when the key sets differ.
ScoreReport micro_macro_scores(const LabelSets& predicted, const LabelSets& actual);

enum class CoverageMode { all, any };

struct SweepInput {
    std::map<int, int> sample_counts;
    /// Per CVE: predicted labels and direct truth labels.
    std::map<std::string, std::vector<int>> predicted;
    std::map<std::string, std::vector<int>> actual;
    /// Optional expansion of truth labels before scoring (e.g. ancestor closure).
    std::function<std::vector<int>(const std::vector<int>&)> expand_truth;
};

/// One report per cutoff.  The universe is every label whose sample count
/// meets the cutoff; coverage is the share of CVEs whose truth labels are all
/// (or, in "any" mode, at least partly) inside the universe; scores are
/// computed over covered CVEs with both sides restricted to the universe.
std::vector<ScoreReport> threshold_sweep(const SweepInput& input, const std::vector<int>& cutoffs,
                                         CoverageMode mode = CoverageMode::all);

/// 1 / position of the first ranked item found in truth, or 0.
double reciprocal_rank(const std::vector<std::string>& ranked, const std::set<std::string>& truth);
/// Mean over the truth set; a CVE without a ranked list counts as 0.
double mean_reciprocal_rank(const std::map<std::string, std::vector<std::string>>& ranked, const LabelSets& truth);
/// coverage * 1 + (1 - coverage) * model_mrr
double combined_mrr(double lookup_coverage, double model_mrr);

/// Mean of the micro and macro aggregates over repeated runs.
ScoreReport average_reports(const std::vector<ScoreReport>& runs);

}  // namespace vulnmap
