#include "test_support.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/hierclf.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

using namespace vulnmap;

namespace {

CweEntry entry(int id, std::vector<int> parents, CweStatus status = CweStatus::active, bool category = false) {
    CweEntry e;
    e.id = id;
    e.name = "W" + std::to_string(id);
    e.parents = std::move(parents);
    e.status = status;
    e.is_category = category;
    return e;
}

// Recursive reference for the descent: enumerate every root-to-node path
// through selected edges, keep the best-scoring one per node.
struct RefResult {
    double sum = -1;
    std::vector<int> path;
};

std::vector<CwePrediction> reference_traverse(const std::vector<int>& roots, const std::map<int, std::vector<int>>& children,
                                              const std::map<int, double>& s, double threshold) {
    auto select = [&](const std::vector<int>& cands) {
        std::vector<int> out;
        for (int c : cands)
            if (s.at(c) >= threshold) out.push_back(c);
        if (out.empty() && !cands.empty()) {
            int best = cands[0];
            for (int c : cands)
                if (s.at(c) > s.at(best) || (s.at(c) == s.at(best) && c < best)) best = c;
            out.push_back(best);
        }
        return out;
    };
    std::map<int, RefResult> best;
    std::function<void(int, std::vector<int>, double)> visit = [&](int node, std::vector<int> path, double sum) {
        RefResult& r = best[node];
        if (sum > r.sum || (sum == r.sum && path < r.path)) r = {sum, path};
        auto it = children.find(node);
        if (it == children.end()) return;
        for (int c : select(it->second)) {
            auto next = path;
            next.push_back(c);
            visit(c, next, sum + s.at(c));
        }
    };
    for (int r : select(roots)) visit(r, {r}, s.at(r));
    std::vector<CwePrediction> out;
    for (const auto& [node, r] : best) out.push_back({node, s.at(node), r.path, s.at(node) < threshold});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.score != b.score ? a.score > b.score : a.cwe < b.cwe;
    });
    return out;
}

struct RandomDag {
    std::vector<int> roots;
    std::map<int, std::vector<int>> children;
    std::vector<int> nodes;
};

RandomDag random_dag(std::mt19937_64& rng, int max_nodes) {
    RandomDag d;
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_nodes));
    std::set<int> ids;
    while (static_cast<int>(ids.size()) < n) ids.insert(1 + static_cast<int>(rng() % 1000));
    d.nodes.assign(ids.begin(), ids.end());
    std::shuffle(d.nodes.begin(), d.nodes.end(), rng);  // topological order is the shuffled order
    std::set<int> has_parent;
    const double p = 0.15 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
    for (int i = 0; i < n; ++i) {
        d.children[d.nodes[static_cast<std::size_t>(i)]];
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() % 1000) / 1000.0 < p) {
                d.children[d.nodes[static_cast<std::size_t>(i)]].push_back(d.nodes[static_cast<std::size_t>(j)]);
                has_parent.insert(d.nodes[static_cast<std::size_t>(j)]);
            }
    }
    for (auto& [_, c] : d.children) std::sort(c.begin(), c.end());
    for (int v : d.nodes)
        if (!has_parent.count(v)) d.roots.push_back(v);
    std::sort(d.roots.begin(), d.roots.end());
    return d;
}

std::map<int, double> random_scores(std::mt19937_64& rng, const std::vector<int>& nodes) {
    std::map<int, double> s;
    const bool coarse = rng() % 2 == 0;  // coarse scores produce ties
    for (int v : nodes) s[v] = coarse ? static_cast<double>(rng() % 11) / 10.0 : static_cast<double>(rng() % 1000001) / 1e6;
    return s;
}

std::vector<FeatureVector> random_vectors(std::mt19937_64& rng, std::size_t count, std::size_t dim) {
    std::vector<FeatureVector> out;
    for (std::size_t i = 0; i < count; ++i) {
        FeatureVector v;
        v.dimension = dim;
        for (std::uint32_t j = 0; j < dim; ++j)
            if (rng() % 3 == 0) {
                v.indices.push_back(j);
                v.values.push_back(0.05 + static_cast<double>(rng() % 1000) / 1000.0);
            }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<const FeatureVector*> ptrs(const std::vector<FeatureVector>& v, std::size_t from, std::size_t to) {
    std::vector<const FeatureVector*> out;
    for (std::size_t i = from; i < to; ++i) out.push_back(&v[i]);
    return out;
}

// Toy corpus: root 1 with children 2 and 3, ten documents per child drawn
// from disjoint word lists.
TrainingInputs toy_inputs() {
    TrainingInputs in;
    in.cwes = {entry(1, {}), entry(2, {1}), entry(3, {1})};
    in.snapshot_id = "toy";
    const std::vector<std::string> a = {"overflow", "buffer", "stack", "heap", "memory", "bounds"};
    const std::vector<std::string> b = {"injection", "query", "database", "sql", "statement", "parameter"};
    std::mt19937_64 rng(1);
    auto text = [&](const std::vector<std::string>& words) {
        std::string t;
        for (int i = 0; i < 6; ++i) t += words[rng() % words.size()] + " ";
        return t;
    };
    for (int i = 0; i < 10; ++i) {
        in.train.push_back({"CVE-2020-" + std::to_string(1000 + i), text(a), {2}});
        in.train.push_back({"CVE-2020-" + std::to_string(2000 + i), text(b), {3}});
    }
    for (int i = 0; i < 4; ++i) {
        in.validation.push_back({"CVE-2021-" + std::to_string(1000 + i), text(a), {2}});
        in.validation.push_back({"CVE-2021-" + std::to_string(2000 + i), text(b), {3}});
    }
    return in;
}

TrainConfig toy_config() {
    TrainConfig c;
    c.min_samples = 5;
    c.min_df = 1;
    c.n_max = 1;
    c.epochs = 200;
    c.threads = 1;
    return c;
}

}  // namespace

TEST_CASE("labels propagate to every ancestor in the training index") {
    WeaknessHierarchy h = build_hierarchy({entry(707, {}), entry(74, {707}), entry(79, {74}), entry(80, {79}), entry(20, {707})});
    CveRecord r{"CVE-2020-0001", "x", {80}, ""};
    index_training_cves(h, {&r});
    for (int n : {80, 79, 74, 707}) CHECK(h.training_index.at(n) == std::vector<std::string>{"CVE-2020-0001"});
    CHECK(h.training_index.at(20).empty());
    CHECK(h.roots == std::vector<int>{707});
    CHECK(h.ancestor_closure({80, 20}) == std::vector<int>{20, 74, 79, 80, 707});
}

TEST_CASE("deprecated entries and categories stay out of the hierarchy") {
    const WeaknessHierarchy h = build_hierarchy({entry(1, {}), entry(2, {1}, CweStatus::deprecated),
                                                 entry(3, {1}, CweStatus::obsolete), entry(4, {}, CweStatus::active, true),
                                                 entry(5, {2})});
    CHECK(h.nodes == std::vector<int>{1, 5});
    CHECK(h.children.at(1).empty());
    CHECK(h.roots == std::vector<int>{1, 5});
}

TEST_CASE("cycles in the structure are integrity errors") {
    CHECK_THROWS_AS(build_hierarchy({entry(1, {3}), entry(2, {1}), entry(3, {2})}), IntegrityError);
}

TEST_CASE("snapshot without assignments gives empty training lists") {
    const auto& fx = testing::fixture_snapshot();
    const KnowledgeSnapshot snap = build_snapshot({CveRecord{"CVE-2020-0001", "text", {}, ""}}, fx.cwes, {}, {}, {});
    const WeaknessHierarchy h = build_hierarchy(snap);
    for (const auto& [node, ids] : h.training_index) CHECK(ids.empty());
}

TEST_CASE("fixture hierarchy has the ten research-view roots and nested indexes") {
    const WeaknessHierarchy h = build_hierarchy(testing::fixture_snapshot());
    CHECK(h.roots == std::vector<int>{284, 435, 664, 682, 691, 693, 697, 703, 707, 710});
    for (const auto& [node, kids] : h.children) {
        const auto& mine = h.training_index.at(node);
        const std::set<std::string> parent_set(mine.begin(), mine.end());
        for (int c : kids)
            for (const auto& id : h.training_index.at(c)) CHECK(parent_set.count(id));
    }
    // Every CVE listed at a node is also listed at each of its ancestors.
    std::size_t checked = 0;
    for (const auto& [node, ids] : h.training_index) {
        if (ids.empty()) continue;
        for (int a : h.ancestors_inclusive(node)) {
            const auto& up = h.training_index.at(a);
            CHECK(std::binary_search(up.begin(), up.end(), ids.front()));
        }
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("gradient matches central finite differences") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 2 + rng() % 8;
        const auto xs = random_vectors(rng, 4 + rng() % 10, dim);
        const std::size_t npos = 1 + rng() % (xs.size() - 1);
        const NodeProblem p = make_node_problem(ptrs(xs, 0, npos), ptrs(xs, npos, xs.size()), dim, trial % 2 == 0);
        std::vector<double> w(dim);
        for (auto& v : w) v = static_cast<double>(static_cast<int>(rng() % 2001) - 1000) / 500.0;
        const double b = static_cast<double>(static_cast<int>(rng() % 2001) - 1000) / 1000.0;
        const double l2 = (rng() % 2) ? 1e-2 : 0.0;
        std::vector<double> gw;
        double gb = 0;
        node_gradient(p, w, b, l2, gw, gb);
        const double h = 1e-6;
        auto rel = [](double a, double e) { return std::abs(a - e) / std::max(1e-8, std::max(std::abs(a), std::abs(e))); };
        for (std::size_t j = 0; j < dim; ++j) {
            auto wp = w, wm = w;
            wp[j] += h;
            wm[j] -= h;
            const double fd = (node_objective(p, wp, b, l2) - node_objective(p, wm, b, l2)) / (2 * h);
            CHECK(rel(gw[j], fd) < 1e-5);
        }
        const double fdb = (node_objective(p, w, b + h, l2) - node_objective(p, w, b - h, l2)) / (2 * h);
        CHECK(rel(gb, fdb) < 1e-5);
    }
}

TEST_CASE("separable toy set is classified on both sides of 0.5") {
    FeatureVector pos{{0}, {1.0}, 2}, neg{{1}, {1.0}, 2};
    TrainConfig c;
    const NodeClassifier clf = train_node(7, {&pos}, {&neg}, 2, c);
    CHECK(clf.score(pos) > 0.5);
    CHECK(clf.score(neg) < 0.5);
}

TEST_CASE("one positive equal to one negative scores one half") {
    FeatureVector x{{0, 1}, {0.6, 0.8}, 2};
    const NodeClassifier clf = train_node(7, {&x}, {&x}, 2, TrainConfig{});
    CHECK(clf.score(x) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("empty classes are errors naming the node") {
    FeatureVector x{{0}, {1.0}, 1};
    try {
        train_node(79, {&x}, {}, 1, TrainConfig{});
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("CWE-79") != std::string::npos);
    }
    CHECK_THROWS_AS(train_node(79, {}, {&x}, 1, TrainConfig{}), InputError);
}

TEST_CASE("node training is deterministic and scores lie in (0,1)") {
    std::mt19937_64 rng(4);
    const auto xs = random_vectors(rng, 40, 12);
    const NodeClassifier a = train_node(1, ptrs(xs, 0, 15), ptrs(xs, 15, 40), 12, TrainConfig{});
    const NodeClassifier b = train_node(1, ptrs(xs, 0, 15), ptrs(xs, 15, 40), 12, TrainConfig{});
    CHECK(a == b);
    for (const auto& x : xs) {
        const double s = a.score(x);
        CHECK((s > 0 && s < 1));
    }
}

TEST_CASE("descent keeps qualifying nodes: worked four-node example") {
    const std::map<int, std::vector<int>> children = {{1, {3, 4}}, {2, {}}, {3, {}}, {4, {}}};
    const std::map<int, double> s = {{1, 0.9}, {2, 0.1}, {3, 0.7}, {4, 0.2}};
    const auto out = traverse({1, 2}, children, [&](int n) { return s.at(n); }, 0.5);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == CwePrediction{1, 0.9, {1}, false});
    CHECK(out[1] == CwePrediction{3, 0.7, {1, 3}, false});
}

TEST_CASE("all scores below the threshold give one fallback chain") {
    const std::map<int, std::vector<int>> children = {{1, {3, 4}}, {2, {5}}, {3, {6, 7}}, {4, {}}, {5, {}}, {6, {}}, {7, {}}};
    const std::map<int, double> s = {{1, 0.3}, {2, 0.2}, {3, 0.1}, {4, 0.4}, {5, 0.45}, {6, 0.05}, {7, 0.01}};
    const auto out = traverse({1, 2}, children, [&](int n) { return s.at(n); }, 0.5);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == CwePrediction{4, 0.4, {1, 4}, true});
    CHECK(out[1] == CwePrediction{1, 0.3, {1}, true});
}

TEST_CASE("descent equals the recursive reference on random DAGs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const RandomDag d = random_dag(rng, 12);
        const auto s = random_scores(rng, d.nodes);
        const double threshold = 0.3 + 0.05 * static_cast<double>(rng() % 9);
        const auto got = traverse(d.roots, d.children, [&](int n) { return s.at(n); }, threshold);
        const auto want = reference_traverse(d.roots, d.children, s, threshold);
        REQUIRE(got == want);
    }
}

TEST_CASE("descent soundness and monotone coverage") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        const RandomDag d = random_dag(rng, 12);
        const auto s = random_scores(rng, d.nodes);
        const auto hi = traverse(d.roots, d.children, [&](int n) { return s.at(n); }, 0.6);
        const auto lo = traverse(d.roots, d.children, [&](int n) { return s.at(n); }, 0.4);
        std::set<int> kept;
        for (const auto& p : hi) kept.insert(p.cwe);
        for (const auto& p : hi) {
            REQUIRE(!p.path.empty());
            CHECK(std::binary_search(d.roots.begin(), d.roots.end(), p.path.front()));
            CHECK(p.path.back() == p.cwe);
            for (std::size_t i = 1; i < p.path.size(); ++i) {
                const auto& kids = d.children.at(p.path[i - 1]);
                CHECK(std::binary_search(kids.begin(), kids.end(), p.path[i]));
                CHECK(kept.count(p.path[i - 1]));
            }
            CHECK((p.score >= 0 && p.score <= 1));
        }
        std::set<int> lo_set;
        for (const auto& p : lo) lo_set.insert(p.cwe);
        for (int c : kept) CHECK(lo_set.count(c));
    }
}

TEST_CASE("toy hierarchy trains three classifiers and separates the children") {
    const TrainingInputs in = toy_inputs();
    std::vector<std::string> warnings;
    const HierarchicalModel m = train_hierarchy(in, toy_config(), &warnings);
    CHECK(m.classifiers.size() == 3);
    CHECK(m.label_nodes == std::vector<int>{2, 3});
    CHECK(m.sample_counts == std::map<int, int>{{2, 10}, {3, 10}});
    CHECK(m.trained_on == "toy");
    CHECK((m.threshold >= 0.3 && m.threshold <= 0.7));
    CHECK(predicted_labels(predict_cwes("heap buffer overflow in memory bounds", m)) == std::vector<int>{1, 2});
    CHECK(predicted_labels(predict_cwes("sql injection in database query", m)) == std::vector<int>{1, 3});
}

TEST_CASE("nodes below min_samples get no classifier and are never predicted") {
    TrainingInputs in = toy_inputs();
    in.cwes.push_back(entry(4, {1}));
    in.train.push_back({"CVE-2020-9999", "rare words only here", {4}});
    const HierarchicalModel m = train_hierarchy(in, toy_config());
    CHECK(!m.classifiers.count(4));
    for (const char* t : {"rare words only here", "buffer", "sql"})
        for (const auto& p : predict_cwes(t, m)) CHECK(p.cwe != 4);
}

TEST_CASE("no trainable root is an error") {
    TrainConfig c = toy_config();
    c.min_samples = 1000;
    CHECK_THROWS_AS(train_hierarchy(toy_inputs(), c), InputError);
}

TEST_CASE("empty description still yields a well-defined descent") {
    const HierarchicalModel m = train_hierarchy(toy_inputs(), toy_config());
    const auto preds = predict_cwes("", m);
    REQUIRE(!preds.empty());
    CHECK(preds.back().path.front() == 1);
    CHECK(predict_cwes("", m) == predict_cwes("the of and", m));
}

TEST_CASE("unigram scores are unchanged by duplicating the text") {
    const HierarchicalModel m = train_hierarchy(toy_inputs(), toy_config());
    for (const char* t : {"heap buffer overflow", "sql injection statement parameter", "memory query"}) {
        const std::string twice = std::string(t) + " " + t;
        const auto a = m.score_all(m.vectorize(t));
        const auto b = m.score_all(m.vectorize(twice));
        for (const auto& [n, s] : a) CHECK(b.at(n) == doctest::Approx(s).epsilon(1e-12));
    }
}

TEST_CASE("training is deterministic and independent of the thread count") {
    TrainConfig c1 = toy_config();
    TrainConfig c3 = toy_config();
    c3.threads = 3;
    const std::string a = save_model(train_hierarchy(toy_inputs(), c1));
    const std::string b = save_model(train_hierarchy(toy_inputs(), c1));
    CHECK(a == b);
    // The thread count is part of the stored config; compare the weights.
    const auto m1 = train_hierarchy(toy_inputs(), c1);
    const auto m3 = train_hierarchy(toy_inputs(), c3);
    CHECK(m1.classifiers == m3.classifiers);
    CHECK(m1.threshold == m3.threshold);
}

TEST_CASE("model save and load round trip") {
    const HierarchicalModel m = train_hierarchy(toy_inputs(), toy_config());
    const std::string bytes = save_model(m);
    const HierarchicalModel back = load_model(bytes);
    CHECK(back.classifiers == m.classifiers);
    CHECK(back.vocabulary == m.vocabulary);
    CHECK(back.codebook == m.codebook);
    CHECK(back.hierarchy == m.hierarchy);
    CHECK(back.threshold == m.threshold);
    CHECK(back.trained_on == m.trained_on);
    CHECK(back.sample_counts == m.sample_counts);
    CHECK(back.label_nodes == m.label_nodes);
    CHECK(save_model(back) == bytes);
    CHECK(model_id(bytes).size() == 16);
    const auto& fx = testing::fixture_snapshot();
    for (std::size_t i = 0; i < 100; ++i) {
        const auto& text = fx.cves[i * 997 % fx.cves.size()].description;
        CHECK(predict_cwes(text, back) == predict_cwes(text, m));
    }
}

TEST_CASE("damaged model files are rejected") {
    const std::string bytes = save_model(train_hierarchy(toy_inputs(), toy_config()));
    CHECK_THROWS_AS(load_model(bytes.substr(0, bytes.size() - 5)), ParseError);
    CHECK_THROWS_AS(load_model(bytes.substr(0, 10)), ParseError);
    CHECK_THROWS_AS(load_model(bytes + "x"), ParseError);
    std::string other = bytes;
    other[8] = static_cast<char>(HierarchicalModel::kFormatVersion + 1);
    CHECK_THROWS_AS(load_model(other), IncompatibleModelError);
    std::string magic = bytes;
    magic[0] = 'X';
    CHECK_THROWS_AS(load_model(magic), InputError);
}

TEST_CASE("predicting with an untrained model is an error") {
    CHECK_THROWS_AS(predict_cwes("text", HierarchicalModel{}), InputError);
}
