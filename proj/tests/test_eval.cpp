#include "test_support.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/eval.hpp"
#include "vulnmap/util.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace vulnmap;

namespace {

struct OracleScores {
    double micro_p = 0, micro_r = 0, micro_f = 0, macro_p = 0, macro_r = 0, macro_f = 0;
    std::size_t labels = 0;
};

// Set arithmetic per label, F written as 2tp / (2tp + fp + fn).
OracleScores oracle_scores(const LabelSets& pred, const LabelSets& truth) {
    std::set<std::string> universe;
    for (const auto& [_, s] : pred) universe.insert(s.begin(), s.end());
    for (const auto& [_, s] : truth) universe.insert(s.begin(), s.end());
    OracleScores o;
    double TP = 0, FP = 0, FN = 0;
    for (const auto& l : universe) {
        double tp = 0, fp = 0, fn = 0;
        for (const auto& [cve, t] : truth) {
            const bool in_p = pred.at(cve).count(l) > 0, in_t = t.count(l) > 0;
            tp += in_p && in_t;
            fp += in_p && !in_t;
            fn += !in_p && in_t;
        }
        TP += tp;
        FP += fp;
        FN += fn;
        o.macro_p += tp + fp > 0 ? tp / (tp + fp) : 0;
        o.macro_r += tp + fn > 0 ? tp / (tp + fn) : 0;
        o.macro_f += tp > 0 ? 2 * tp / (2 * tp + fp + fn) : 0;
    }
    o.labels = universe.size();
    if (!universe.empty()) {
        o.macro_p /= static_cast<double>(universe.size());
        o.macro_r /= static_cast<double>(universe.size());
        o.macro_f /= static_cast<double>(universe.size());
    }
    o.micro_p = TP + FP > 0 ? TP / (TP + FP) : 0;
    o.micro_r = TP + FN > 0 ? TP / (TP + FN) : 0;
    o.micro_f = TP > 0 ? 2 * TP / (2 * TP + FP + FN) : 0;
    return o;
}

std::set<std::string> random_labels(std::mt19937_64& rng, int alphabet, std::size_t max_size) {
    std::set<std::string> s;
    const std::size_t n = rng() % (max_size + 1);
    for (std::size_t i = 0; i < n; ++i) s.insert("L" + std::to_string(rng() % static_cast<std::uint64_t>(alphabet)));
    return s;
}

void check_close(double got, double want) { CHECK(std::abs(got - want) <= 1e-12); }

}  // namespace

TEST_CASE("split sizes for the 70/10/20 ratios") {
    CHECK(split_sizes(100, {0.7, 0.1, 0.2}) == std::array<std::size_t, 3>{70, 10, 20});
    CHECK(split_sizes(3, {0.7, 0.1, 0.2}) == std::array<std::size_t, 3>{2, 0, 1});
    CHECK(split_sizes(0, {0.7, 0.1, 0.2}) == std::array<std::size_t, 3>{0, 0, 0});
    CHECK_THROWS_AS(split_sizes(10, {0.7, 0.1, 0.1}), InputError);
    CHECK_THROWS_AS(split_sizes(10, {1.2, -0.1, -0.1}), InputError);
}

TEST_CASE("split sizes follow largest-remainder rounding exactly") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const int a = static_cast<int>(rng() % 101), b = static_cast<int>(rng() % static_cast<std::uint64_t>(101 - a));
        const std::array<int, 3> pct{a, b, 100 - a - b};
        const std::size_t n = rng() % 300;
        // Integer arithmetic: floor(n * p / 100) and remainder (n * p) mod 100.
        std::array<std::size_t, 3> want{};
        std::array<std::size_t, 3> rem{};
        std::size_t total = 0;
        for (int i = 0; i < 3; ++i) {
            want[i] = n * static_cast<std::size_t>(pct[i]) / 100;
            rem[i] = n * static_cast<std::size_t>(pct[i]) % 100;
            total += want[i];
        }
        std::array<int, 3> idx{0, 1, 2};
        std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return rem[x] > rem[y]; });
        for (int k = 0; total < n; ++k, ++total) ++want[idx[k]];
        INFO(n, " ", a, " ", b);
        CHECK(split_sizes(n, {a / 100.0, b / 100.0, (100 - a - b) / 100.0}) == want);
    }
}

TEST_CASE("splits are disjoint, exhaustive, deterministic and stratified") {
    std::vector<SplitItem> items;
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) items.push_back({"CVE-2020-" + std::to_string(10000 + i), {static_cast<int>(rng() % 7) * 10}});
    const DatasetSplit a = split_dataset(items, {0.7, 0.1, 0.2}, 42);
    const DatasetSplit b = split_dataset(items, {0.7, 0.1, 0.2}, 42);
    CHECK(a.train == b.train);
    CHECK(a.validation == b.validation);
    CHECK(a.test == b.test);
    CHECK(a.train.size() == 700);
    CHECK(a.validation.size() == 100);
    CHECK(a.test.size() == 200);
    std::set<std::string> all;
    for (const auto* part : {&a.train, &a.validation, &a.test}) all.insert(part->begin(), part->end());
    CHECK(all.size() == 1000);

    std::map<std::string, int> label_of;
    std::map<int, int> group_size;
    for (const auto& it : items) {
        label_of[it.id] = it.labels[0];
        ++group_size[it.labels[0]];
    }
    const std::array<double, 3> ratios{0.7, 0.1, 0.2};
    const std::array<const std::vector<std::string>*, 3> parts{&a.train, &a.validation, &a.test};
    for (int p = 0; p < 3; ++p) {
        std::map<int, int> counts;
        for (const auto& id : *parts[static_cast<std::size_t>(p)]) ++counts[label_of[id]];
        for (const auto& [label, size] : group_size) CHECK(std::abs(counts[label] - size * ratios[static_cast<std::size_t>(p)]) <= 2.0);
    }

    const DatasetSplit c = split_dataset(items, {0.7, 0.1, 0.2}, 43);
    CHECK(c.test != a.test);
    std::vector<SplitItem> shuffled = items;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(split_dataset(shuffled, {0.7, 0.1, 0.2}, 42).test == a.test);
}

TEST_CASE("split errors") {
    CHECK_THROWS_AS(split_dataset({{"a", {}}, {"a", {}}}, {0.7, 0.1, 0.2}, 1), InputError);
    CHECK_THROWS_AS(split_dataset({{"a", {}}}, {0.5, 0.1, 0.2}, 1), InputError);
    const DatasetSplit s = split_dataset({{"a", {}}, {"b", {1}}, {"c", {2}}}, {0.7, 0.1, 0.2}, 1);
    CHECK(s.train.size() == 2);
    CHECK(s.validation.empty());
    CHECK(s.test.size() == 1);
}

TEST_CASE("perfect predictions score 1") {
    const LabelSets t = {{"c1", {"A", "B"}}, {"c2", {"C"}}};
    const ScoreReport r = micro_macro_scores(t, t);
    CHECK(r.micro_f == 1.0);
    CHECK(r.macro_f == 1.0);
    CHECK(r.evaluated == 2);
}

TEST_CASE("hand-computed two-label example gives 2/3 both ways") {
    // A: TP 1, FP 1, FN 0.  B: TP 1, FP 0, FN 1.
    const LabelSets pred = {{"c1", {"A", "B"}}, {"c2", {"A"}}, {"c3", {}}};
    const LabelSets act = {{"c1", {"A", "B"}}, {"c2", {}}, {"c3", {"B"}}};
    const ScoreReport r = micro_macro_scores(pred, act);
    CHECK(r.per_label.at("A").tp == 1);
    CHECK(r.per_label.at("A").fp == 1);
    CHECK(r.per_label.at("B").fn == 1);
    CHECK(r.micro_f == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(r.macro_f == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("key mismatch lists the offending CVEs") {
    try {
        micro_macro_scores({{"c1", {}}, {"c2", {}}}, {{"c1", {}}, {"c3", {}}});
        FAIL("expected InputError");
    } catch (const InputError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("c2") != std::string::npos);
        CHECK(msg.find("c3") != std::string::npos);
    }
}

TEST_CASE("scores equal the brute-force oracle on 500 random instances") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        LabelSets pred, act;
        const std::size_t n = 1 + rng() % 20;
        const int alphabet = 1 + static_cast<int>(rng() % 10);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string cve = "c" + std::to_string(i);
            pred[cve] = random_labels(rng, alphabet, 4);
            act[cve] = random_labels(rng, alphabet, 4);
        }
        const ScoreReport r = micro_macro_scores(pred, act);
        const OracleScores o = oracle_scores(pred, act);
        check_close(r.micro_precision, o.micro_p);
        check_close(r.micro_recall, o.micro_r);
        check_close(r.micro_f, o.micro_f);
        check_close(r.macro_precision, o.macro_p);
        check_close(r.macro_recall, o.macro_r);
        check_close(r.macro_f, o.macro_f);
        CHECK(r.per_label.size() == o.labels);
        std::size_t tp = 0, fp = 0, fn = 0;
        for (const auto& [_, s] : r.per_label) {
            tp += s.tp;
            fp += s.fp;
            fn += s.fn;
            for (double v : {s.precision, s.recall, s.f}) CHECK((v >= 0 && v <= 1));
        }
        CHECK(tp == r.tp);
        check_close(r.micro_precision, tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0);
        check_close(r.micro_recall, tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0);
    }
}

TEST_CASE("reciprocal rank examples") {
    CHECK(reciprocal_rank({"a", "b"}, {"a"}) == 1.0);
    CHECK(reciprocal_rank({"x", "a"}, {"a", "b"}) == 0.5);
    CHECK(reciprocal_rank({"x", "y"}, {"a"}) == 0.0);
    CHECK(reciprocal_rank({}, {"a"}) == 0.0);
    CHECK_THROWS_AS(reciprocal_rank({"a", "a"}, {"a"}), InputError);
}

TEST_CASE("mean reciprocal rank examples") {
    const LabelSets truth = {{"c1", {"a"}}, {"c2", {"a"}}, {"c3", {"a"}}};
    CHECK(mean_reciprocal_rank({{"c1", {"a"}}, {"c2", {"x", "a"}}, {"c3", {"x"}}}, truth) == doctest::Approx(0.5));
    CHECK(mean_reciprocal_rank({{"c1", {"a"}}, {"c2", {"x", "a"}}}, truth) == doctest::Approx(0.5));
    CHECK(mean_reciprocal_rank({{"c1", {"a"}}, {"c2", {"a"}}, {"c3", {"a"}}}, truth) == 1.0);
    CHECK_THROWS_AS(mean_reciprocal_rank({}, {}), InputError);
}

TEST_CASE("reciprocal-rank measures equal brute force and MRR is monotone") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 20;
        LabelSets truth;
        std::map<std::string, std::vector<std::string>> ranked;
        double sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::string cve = "c" + std::to_string(i);
            truth[cve] = random_labels(rng, 10, 3);
            if (truth[cve].empty()) truth[cve] = {"L0"};
            std::vector<std::string> perm;
            for (int l = 0; l < 10; ++l) perm.push_back("L" + std::to_string(l));
            std::shuffle(perm.begin(), perm.end(), rng);
            perm.resize(rng() % 11);
            double rr = 0;
            for (std::size_t k = perm.size(); k-- > 0;)
                if (truth[cve].count(perm[k])) rr = 1.0 / static_cast<double>(k + 1);
            CHECK(std::abs(reciprocal_rank(perm, truth[cve]) - rr) <= 1e-12);
            if (rng() % 10) {
                ranked[cve] = perm;
                sum += rr;
            }
        }
        const double mrr = mean_reciprocal_rank(ranked, truth);
        CHECK(std::abs(mrr - sum / static_cast<double>(n)) <= 1e-12);

        // Move one CVE's first hit to the front: MRR never drops.
        for (auto& [cve, list] : ranked) {
            auto hit = std::find_if(list.begin(), list.end(), [&](const std::string& l) { return truth[cve].count(l); });
            if (hit == list.end() || hit == list.begin()) continue;
            std::rotate(list.begin(), hit, hit + 1);
            CHECK(mean_reciprocal_rank(ranked, truth) >= mrr);
            break;
        }
    }
}

TEST_CASE("combined MRR arithmetic for 70% lookup coverage") {
    CHECK(std::abs(combined_mrr(0.7, 0.823) - 0.9469) <= 0.0005);
    CHECK(combined_mrr(1.0, 0.3) == 1.0);
    CHECK(combined_mrr(0.0, 0.42) == 0.42);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 500; ++i) {
        const double c = static_cast<double>(rng() % 1001) / 1000.0, m = static_cast<double>(rng() % 1001) / 1000.0;
        CHECK(std::abs(combined_mrr(c, m) - (c + (1 - c) * m)) <= 1e-12);
    }
    CHECK_THROWS_AS(combined_mrr(1.5, 0.5), InputError);
    CHECK_THROWS_AS(combined_mrr(0.5, -0.1), InputError);
}

TEST_CASE("sweep with an unreachable cutoff is degenerate") {
    SweepInput in;
    in.sample_counts = {{1, 10}};
    in.actual = {{"c1", {1}}};
    in.predicted = {{"c1", {1}}};
    const auto r = threshold_sweep(in, {1000, 5});
    REQUIRE(r.size() == 2);
    CHECK(r[0].degenerate);
    CHECK(r[0].label_count == 0);
    CHECK(*r[0].sample_threshold == 1000);
    CHECK(!r[1].degenerate);
    CHECK(r[1].micro_f == 1.0);
    CHECK(*r[1].coverage == 1.0);
}

TEST_CASE("sweep equals a brute-force restriction and is monotone") {
    std::mt19937_64 rng(12);
    const std::vector<int> cutoffs = {500, 200, 100, 50, 10};
    for (int trial = 0; trial < 300; ++trial) {
        SweepInput in;
        for (int l = 1; l <= 10; ++l) in.sample_counts[l] = static_cast<int>(rng() % 700);
        const std::size_t n = 1 + rng() % 20;
        for (std::size_t i = 0; i < n; ++i) {
            const std::string cve = "c" + std::to_string(i);
            std::set<int> t, p;
            for (std::size_t k = 0, m = 1 + rng() % 3; k < m; ++k) t.insert(1 + static_cast<int>(rng() % 10));
            for (std::size_t k = 0, m = rng() % 4; k < m; ++k) p.insert(1 + static_cast<int>(rng() % 10));
            in.actual[cve] = {t.begin(), t.end()};
            in.predicted[cve] = {p.begin(), p.end()};
        }
        const auto reports = threshold_sweep(in, cutoffs);
        REQUIRE(reports.size() == cutoffs.size());
        for (std::size_t c = 0; c < cutoffs.size(); ++c) {
            std::set<int> universe;
            for (const auto& [l, cnt] : in.sample_counts)
                if (cnt >= cutoffs[c]) universe.insert(l);
            CHECK(reports[c].label_count == universe.size());
            if (universe.empty()) {
                CHECK(reports[c].degenerate);
                continue;
            }
            LabelSets pred, act;
            for (const auto& [cve, t] : in.actual) {
                if (!std::all_of(t.begin(), t.end(), [&](int l) { return universe.count(l); })) continue;
                for (int l : t) act[cve].insert(cwe_label(l));
                pred[cve];
                for (int l : in.predicted[cve])
                    if (universe.count(l)) pred[cve].insert(cwe_label(l));
            }
            CHECK(std::abs(*reports[c].coverage - static_cast<double>(act.size()) / static_cast<double>(n)) <= 1e-12);
            const OracleScores o = oracle_scores(pred, act);
            check_close(reports[c].micro_f, o.micro_f);
            check_close(reports[c].macro_f, o.macro_f);
            CHECK(reports[c].evaluated == act.size());
            if (c > 0) {
                CHECK(*reports[c].coverage >= *reports[c - 1].coverage);
                CHECK(reports[c].label_count >= reports[c - 1].label_count);
            }
        }
    }
}

TEST_CASE("sweep applies the truth expansion inside the universe") {
    SweepInput in;
    in.sample_counts = {{1, 100}, {2, 100}, {3, 1}};
    in.actual = {{"c1", {2}}};
    in.predicted = {{"c1", {1, 2}}};
    in.expand_truth = [](const std::vector<int>& v) {
        std::vector<int> out = v;
        out.push_back(1);
        out.push_back(3);
        return out;
    };
    const auto r = threshold_sweep(in, {50});
    CHECK(r[0].micro_f == 1.0);
    CHECK(r[0].per_label.count("CWE-3") == 0);
}

TEST_CASE("any-mode coverage counts partly covered CVEs") {
    SweepInput in;
    in.sample_counts = {{1, 100}, {2, 1}};
    in.actual = {{"c1", {1, 2}}, {"c2", {2}}};
    in.predicted = {{"c1", {1}}, {"c2", {}}};
    CHECK(*threshold_sweep(in, {50}, CoverageMode::all)[0].coverage == 0.0);
    CHECK(*threshold_sweep(in, {50}, CoverageMode::any)[0].coverage == 0.5);
}

TEST_CASE("average of repeated runs") {
    ScoreReport a, b;
    a.micro_f = 0.8;
    b.micro_f = 0.6;
    a.macro_f = 0.5;
    b.macro_f = 0.7;
    const ScoreReport m = average_reports({a, b});
    CHECK(m.micro_f == doctest::Approx(0.7));
    CHECK(m.macro_f == doctest::Approx(0.6));
    CHECK_THROWS_AS(average_reports({}), InputError);
}

TEST_CASE("ground truth file parsing") {
    const GroundTruthSet g = parse_ground_truth("# c\nCVE-2020-0001\tT1059,T1203\tmanual\n\nCVE-2020-0002\tT1190\tprocedure_example\n");
    REQUIRE(g.entries.size() == 2);
    CHECK(g.entries[0].labels == std::set<std::string>{"T1059", "T1203"});
    CHECK(g.count("manual") == 1);
    CHECK_THROWS_AS(parse_ground_truth("CVE-2020-0001\tT1\n"), InputError);
    CHECK_THROWS_AS(parse_ground_truth("nope\tT1\tmanual\n"), InputError);
    CHECK_THROWS_AS(parse_ground_truth("CVE-2020-0001\t\tmanual\n"), InputError);
    CHECK_THROWS_AS(parse_ground_truth("CVE-2020-0001\tT1\tother\n"), InputError);
    CHECK_THROWS_AS(parse_ground_truth("CVE-2020-0001\tT1\tmanual\nCVE-2020-0001\tT2\tmanual\n"), InputError);

    const GroundTruthSet fx = parse_ground_truth(read_file(testing::fixture_path("ground_truth.tsv")));
    CHECK(fx.entries.size() == 56);
    CHECK(fx.count("procedure_example") + fx.count("manual") == 56);
    CHECK(fx.count("procedure_example") > 0);
    CHECK(fx.count("manual") > 0);
}
