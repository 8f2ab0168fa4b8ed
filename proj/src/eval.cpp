#include "vulnmap/eval.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace vulnmap {

std::size_t GroundTruthSet::count(std::string_view origin) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const GroundTruthEntry& e) { return e.origin == origin; }));
}

GroundTruthSet parse_ground_truth(std::string_view text) {
    GroundTruthSet set;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    for (const auto& raw : split(text, '\n')) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split(line, '\t');
        const std::string where = "ground truth line " + std::to_string(line_no);
        if (cols.size() != 3) throw InputError(where + ": expected 3 tab-separated columns");
        GroundTruthEntry e;
        e.cve = trim(cols[0]);
        if (!is_cve_id(e.cve)) throw InputError(where + ": malformed CVE id '" + e.cve + "'");
        for (const auto& l : split(cols[1], ',')) {
            const std::string label = trim(l);
            if (!label.empty()) e.labels.insert(label);
        }
        if (e.labels.empty()) throw InputError(where + ": empty label set");
        e.origin = trim(cols[2]);
        if (e.origin != "procedure_example" && e.origin != "manual")
            throw InputError(where + ": unknown origin '" + e.origin + "'");
        if (!seen.insert(e.cve).second) throw InputError(where + ": duplicate " + e.cve);
        set.entries.push_back(std::move(e));
    }
    return set;
}

std::array<std::size_t, 3> split_sizes(std::size_t n, const std::array<double, 3>& ratios) {
    double sum = 0;
    for (double r : ratios) {
        if (!(r >= 0)) throw InputError("split ratios must be non-negative");
        sum += r;
    }
    if (std::fabs(sum - 1.0) > 1e-9) throw InputError("split ratios must sum to 1 (got " + format_double(sum) + ")");
    std::array<std::size_t, 3> sizes{};
    // Remainders are compared on a 1e-9 grid so that ratios such as 0.53 and
    // 0.07 whose exact remainders tie are not separated by rounding noise.
    std::array<long long, 3> rem{};
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        const double exact = static_cast<double>(n) * ratios[i];
        sizes[i] = static_cast<std::size_t>(std::floor(exact + 1e-9));
        rem[i] = std::llround((exact - static_cast<double>(sizes[i])) * 1e9);
        assigned += sizes[i];
    }
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rem[a] > rem[b]; });
    for (std::size_t k = 0; assigned < n; ++k, ++assigned) ++sizes[order[k % 3]];
    return sizes;
}

DatasetSplit split_dataset(const std::vector<SplitItem>& items, const std::array<double, 3>& ratios,
                           std::uint64_t seed) {
    const auto quota = split_sizes(items.size(), ratios);
    std::map<int, std::size_t> freq;
    for (const auto& it : items)
        for (int l : std::set<int>(it.labels.begin(), it.labels.end())) ++freq[l];
    std::set<std::string> ids;
    std::map<int, std::vector<std::size_t>> strata;  // rarest label -> item indices
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!ids.insert(items[i].id).second) throw InputError("split: duplicate id " + items[i].id);
        int key = -1;
        for (int l : items[i].labels)
            if (key == -1 || freq[l] < freq[key] || (freq[l] == freq[key] && l < key)) key = l;
        strata[key].push_back(i);
    }
    std::vector<std::size_t> order;
    order.reserve(items.size());
    for (auto& [key, members] : strata) {
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return items[a].id < items[b].id; });
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(static_cast<std::int64_t>(key))));
        for (std::size_t i = members.size(); i > 1; --i) std::swap(members[i - 1], members[rng() % i]);
        order.insert(order.end(), members.begin(), members.end());
    }
    // Deal items to the part furthest behind its proportional target.  The
    // deficits always sum to one before a deal and the largest is dealt, so no
    // part overshoots and the final sizes equal the quotas exactly.
    DatasetSplit out;
    std::array<std::vector<std::string>*, 3> parts{&out.train, &out.validation, &out.test};
    std::array<std::size_t, 3> dealt{};
    const double n = static_cast<double>(items.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        int best = -1;
        double best_deficit = 0;
        for (int s = 0; s < 3; ++s) {
            if (dealt[s] >= quota[s]) continue;
            const double deficit = static_cast<double>(quota[s]) * static_cast<double>(j + 1) / n - static_cast<double>(dealt[s]);
            if (best == -1 || deficit > best_deficit) {
                best = s;
                best_deficit = deficit;
            }
        }
        ++dealt[best];
        parts[best]->push_back(items[order[j]].id);
    }
    for (auto* p : parts) std::sort(p->begin(), p->end());
    return out;
}

namespace {

double ratio(double a, double b) { return b == 0.0 ? 0.0 : a / b; }
double fscore(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

}  // namespace

ScoreReport micro_macro_scores(const LabelSets& predicted, const LabelSets& actual) {
    std::vector<std::string> offenders;
    for (const auto& [k, _] : predicted)
        if (!actual.count(k)) offenders.push_back(k + " (predicted only)");
    for (const auto& [k, _] : actual)
        if (!predicted.count(k)) offenders.push_back(k + " (actual only)");
    if (!offenders.empty()) throw InputError("score: CVE key sets differ: " + join(offenders, ", "));

    ScoreReport r;
    r.evaluated = actual.size();
    for (const auto& [cve, truth] : actual) {
        const auto& pred = predicted.at(cve);
        for (const auto& l : pred) {
            auto& s = r.per_label[l];
            truth.count(l) ? ++s.tp : ++s.fp;
        }
        for (const auto& l : truth) {
            auto& s = r.per_label[l];
            ++s.support;
            if (!pred.count(l)) ++s.fn;
        }
    }
    double sp = 0, sr = 0, sf = 0;
    for (auto& [_, s] : r.per_label) {
        s.precision = ratio(static_cast<double>(s.tp), static_cast<double>(s.tp + s.fp));
        s.recall = ratio(static_cast<double>(s.tp), static_cast<double>(s.tp + s.fn));
        s.f = fscore(s.precision, s.recall);
        r.tp += s.tp;
        r.fp += s.fp;
        r.fn += s.fn;
        sp += s.precision;
        sr += s.recall;
        sf += s.f;
    }
    r.micro_precision = ratio(static_cast<double>(r.tp), static_cast<double>(r.tp + r.fp));
    r.micro_recall = ratio(static_cast<double>(r.tp), static_cast<double>(r.tp + r.fn));
    r.micro_f = fscore(r.micro_precision, r.micro_recall);
    const double n = static_cast<double>(r.per_label.size());
    r.macro_precision = ratio(sp, n);
    r.macro_recall = ratio(sr, n);
    r.macro_f = ratio(sf, n);
    r.label_count = r.per_label.size();
    return r;
}

std::vector<ScoreReport> threshold_sweep(const SweepInput& input, const std::vector<int>& cutoffs, CoverageMode mode) {
    std::vector<ScoreReport> out;
    for (int cutoff : cutoffs) {
        std::set<int> universe;
        for (const auto& [label, count] : input.sample_counts)
            if (count >= cutoff) universe.insert(label);
        ScoreReport report;
        if (universe.empty()) {
            report.degenerate = true;
            report.sample_threshold = cutoff;
            report.coverage = 0.0;
            out.push_back(std::move(report));
            continue;
        }
        LabelSets pred, truth;
        std::size_t covered = 0;
        for (const auto& [cve, direct] : input.actual) {
            bool all = !direct.empty(), any = false;
            for (int l : direct) {
                const bool in = universe.count(l) != 0;
                all = all && in;
                any = any || in;
            }
            if (!(mode == CoverageMode::all ? all : any)) continue;
            ++covered;
            auto& t = truth[cve];
            for (int l : input.expand_truth ? input.expand_truth(direct) : direct)
                if (universe.count(l)) t.insert(cwe_label(l));
            auto& p = pred[cve];
            auto it = input.predicted.find(cve);
            if (it != input.predicted.end())
                for (int l : it->second)
                    if (universe.count(l)) p.insert(cwe_label(l));
        }
        report = micro_macro_scores(pred, truth);
        report.sample_threshold = cutoff;
        report.label_count = universe.size();
        report.coverage = input.actual.empty() ? 0.0
                                               : static_cast<double>(covered) / static_cast<double>(input.actual.size());
        report.degenerate = covered == 0;
        out.push_back(std::move(report));
    }
    return out;
}

double reciprocal_rank(const std::vector<std::string>& ranked, const std::set<std::string>& truth) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < ranked.size(); ++i)
        if (!seen.insert(ranked[i]).second) throw InputError("reciprocal rank: duplicate item " + ranked[i]);
    for (std::size_t i = 0; i < ranked.size(); ++i)
        if (truth.count(ranked[i])) return 1.0 / static_cast<double>(i + 1);
    return 0.0;
}

double mean_reciprocal_rank(const std::map<std::string, std::vector<std::string>>& ranked, const LabelSets& truth) {
    if (truth.empty()) throw InputError("MRR: empty truth set");
    double sum = 0;
    for (const auto& [cve, labels] : truth) {
        auto it = ranked.find(cve);
        if (it != ranked.end()) sum += reciprocal_rank(it->second, labels);
    }
    return sum / static_cast<double>(truth.size());
}

double combined_mrr(double lookup_coverage, double model_mrr) {
    if (!(lookup_coverage >= 0 && lookup_coverage <= 1)) throw InputError("combined MRR: coverage outside [0,1]");
    if (!(model_mrr >= 0 && model_mrr <= 1)) throw InputError("combined MRR: model MRR outside [0,1]");
    return lookup_coverage * 1.0 + (1.0 - lookup_coverage) * model_mrr;
}

ScoreReport average_reports(const std::vector<ScoreReport>& runs) {
    if (runs.empty()) throw InputError("average: no runs");
    ScoreReport a;
    for (const auto& r : runs) {
        a.micro_precision += r.micro_precision;
        a.micro_recall += r.micro_recall;
        a.micro_f += r.micro_f;
        a.macro_precision += r.macro_precision;
        a.macro_recall += r.macro_recall;
        a.macro_f += r.macro_f;
        a.evaluated += r.evaluated;
    }
    const double n = static_cast<double>(runs.size());
    for (double* v : {&a.micro_precision, &a.micro_recall, &a.micro_f, &a.macro_precision, &a.macro_recall, &a.macro_f})
        *v /= n;
    a.sample_threshold = runs.front().sample_threshold;
    return a;
}

}  // namespace vulnmap
