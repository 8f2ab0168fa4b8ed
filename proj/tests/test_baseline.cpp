#include "test_support.hpp"

#include "vulnmap/baseline.hpp"
#include "vulnmap/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace vulnmap;

namespace {

double plain_cosine(const DenseVector& a, const DenseVector& b) {
    double ab = 0, aa = 0, bb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += a[i] * b[i];
        aa += a[i] * a[i];
        bb += b[i] * b[i];
    }
    return ab / std::sqrt(aa * bb);
}

// Components are multiples of 1/100, so scaled copies are integers and the
// cosine order can be decided exactly: compare sign, then ab^2 / |b|^2.
using Wide = __int128;

std::vector<Wide> scaled(const DenseVector& v) {
    std::vector<Wide> out;
    for (double x : v) out.push_back(static_cast<Wide>(std::llround(x * 100)));
    return out;
}

// Negative, zero or positive as cos(q, a) is below, equal to or above cos(q, b).
int exact_cosine_order(const DenseVector& q, const DenseVector& a, const DenseVector& b) {
    const auto qi = scaled(q), ai = scaled(a), bi = scaled(b);
    Wide qa = 0, qb = 0, aa = 0, bb = 0;
    for (std::size_t i = 0; i < qi.size(); ++i) {
        qa += qi[i] * ai[i];
        qb += qi[i] * bi[i];
        aa += ai[i] * ai[i];
        bb += bi[i] * bi[i];
    }
    auto sign = [](Wide x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
    if (sign(qa) != sign(qb)) return sign(qa) - sign(qb);
    const Wide lhs = qa * qa * bb, rhs = qb * qb * aa;
    const int mag = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return sign(qa) >= 0 ? mag : -mag;
}

DenseVector random_dense(std::mt19937_64& rng, std::size_t dim, bool coarse) {
    DenseVector v(dim);
    do {
        for (auto& x : v)
            x = coarse ? static_cast<double>(static_cast<int>(rng() % 3) - 1)
                       : static_cast<double>(static_cast<int>(rng() % 2001) - 1000) / 100.0;
    } while (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; }));
    return v;
}

FeatureVector sparse(std::vector<std::uint32_t> idx, std::vector<double> val, std::size_t dim) {
    return FeatureVector{std::move(idx), std::move(val), dim};
}

}  // namespace

TEST_CASE("cosine of identical, orthogonal and 45-degree vectors") {
    CHECK(cosine_similarity(DenseVector{1, 2, 3}, DenseVector{1, 2, 3}) == doctest::Approx(1.0));
    CHECK(cosine_similarity(DenseVector{1, 0}, DenseVector{0, 1}) == 0.0);
    CHECK(cosine_similarity(DenseVector{1, 1, 0}, DenseVector{1, 0, 0}) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(cosine_similarity(sparse({0, 1}, {1, 1}, 3), sparse({0}, {1}, 3)) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(cosine_similarity(DenseVector{1, 0}, DenseVector{-1, 0}) == doctest::Approx(-1.0));
}

TEST_CASE("cosine of a zero vector or mismatched dimensions is an error") {
    CHECK_THROWS_AS(cosine_similarity(DenseVector{0, 0}, DenseVector{1, 0}), InputError);
    CHECK_THROWS_AS(cosine_similarity(sparse({}, {}, 2), sparse({0}, {1}, 2)), InputError);
    CHECK_THROWS_AS(cosine_similarity(DenseVector{1}, DenseVector{1, 0}), InputError);
    CHECK_THROWS_AS(cosine_similarity(sparse({0}, {1}, 2), sparse({0}, {1}, 3)), InputError);
    const DocumentEmbedding s{"a", sparse({0}, {1}, 1)}, d{"b", DenseVector{1}};
    CHECK_THROWS_AS(cosine_similarity(s, d), InputError);
}

TEST_CASE("cosine is symmetric, bounded and invariant to positive scaling") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t dim = 1 + rng() % 8;
        const DenseVector a = random_dense(rng, dim, false), b = random_dense(rng, dim, false);
        const double c = cosine_similarity(a, b);
        CHECK(c == doctest::Approx(plain_cosine(a, b)).epsilon(1e-12));
        CHECK(c == doctest::Approx(cosine_similarity(b, a)).epsilon(1e-15));
        CHECK((c >= -1.0 && c <= 1.0));
        const double s = 0.01 + static_cast<double>(rng() % 10000) / 100.0;
        DenseVector as = a;
        for (auto& x : as) x *= s;
        CHECK(cosine_similarity(as, b) == doctest::Approx(c).epsilon(1e-12));
    }
}

TEST_CASE("exact query text ranks its own technique first with score 1") {
    const TechniqueIndex idx({{"T1", "sql injection through query strings"},
                              {"T2", "heap memory corruption via overflow"},
                              {"T3", "phishing emails with attachments"}});
    const auto r = rank_techniques("heap memory corruption via overflow", idx, 3);
    REQUIRE(r.size() == 3);
    CHECK(r[0].first == "T2");
    CHECK(r[0].second == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("k larger than the index returns the whole index") {
    const TechniqueIndex idx({{"T1", "alpha beta"}, {"T2", "beta gamma"}});
    CHECK(rank_techniques("beta", idx, 50).size() == 2);
    CHECK(rank_techniques("beta", idx, 1).size() == 1);
    CHECK_THROWS_AS(rank_techniques("beta", idx, 0), InputError);
}

TEST_CASE("query with no known term scores every technique zero, ordered by id") {
    const TechniqueIndex idx({{"T2", "alpha"}, {"T1", "beta"}});
    const auto r = rank_techniques("zzz qqq", idx, 5);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == std::pair<std::string, double>{"T1", 0.0});
    CHECK(r[1] == std::pair<std::string, double>{"T2", 0.0});
}

TEST_CASE("five hand-built vectors rank as an exhaustive sort") {
    const std::vector<DocumentEmbedding> index = {
        {"T5", DenseVector{1, 0, 0}}, {"T4", DenseVector{1, 1, 0}}, {"T3", DenseVector{0, 1, 0}},
        {"T2", DenseVector{2, 0, 0}}, {"T1", DenseVector{0, 0, 1}}};
    const auto r = rank_by_vector({"q", DenseVector{1, 0.5, 0}}, index, 5);
    std::vector<std::string> ids;
    for (const auto& p : r) ids.push_back(p.first);
    // T2 and T5 are parallel and tie; the smaller id goes first.
    CHECK(ids == std::vector<std::string>{"T4", "T2", "T5", "T3", "T1"});
    // Parallel vectors whose cosines round differently still tie.
    const std::vector<DocumentEmbedding> par = {{"B", DenseVector{1, 1}}, {"A", DenseVector{3, 3}}};
    const auto p = rank_by_vector({"q", DenseVector{0.1, 0.1}}, par, 2);
    CHECK(p[0].first == "A");
    CHECK(p[1].first == "B");
}

TEST_CASE("ranking equals a brute-force argsort on random indices") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t dim = 1 + rng() % 5;
        const bool coarse = trial % 2 == 0;
        std::vector<DocumentEmbedding> index;
        const std::size_t n = 1 + rng() % 12;
        for (std::size_t i = 0; i < n; ++i) index.push_back({"T" + std::to_string(1000 + rng() % 9000) + "." + std::to_string(i),
                                                             random_dense(rng, dim, coarse)});
        const DenseVector q = random_dense(rng, dim, coarse);
        std::vector<const DocumentEmbedding*> order;
        for (const auto& e : index) order.push_back(&e);
        std::sort(order.begin(), order.end(), [&](const DocumentEmbedding* a, const DocumentEmbedding* b) {
            const int c = exact_cosine_order(q, std::get<DenseVector>(a->vector), std::get<DenseVector>(b->vector));
            return c != 0 ? c > 0 : a->doc_id < b->doc_id;
        });
        std::vector<std::pair<std::string, double>> expected;
        for (const auto* e : order) expected.push_back({e->doc_id, plain_cosine(q, std::get<DenseVector>(e->vector))});
        const std::size_t k = 1 + rng() % (n + 2);
        expected.resize(std::min(k, n));
        const auto got = rank_by_vector({"q", q}, index, k);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].first == expected[i].first);
            CHECK(got[i].second == doctest::Approx(expected[i].second).epsilon(1e-12));
        }
    }
}

TEST_CASE("dense-vector files load with checks on shape") {
    const auto v = load_dense_vectors("# header\nT1 1 0 0.5\n\nT2\t-1e-1 2 3\n");
    REQUIRE(v.size() == 2);
    CHECK(v[0].doc_id == "T1");
    CHECK(std::get<DenseVector>(v[1].vector) == DenseVector{-0.1, 2, 3});
    CHECK_THROWS_AS(load_dense_vectors("T1 1 2\nT2 1\n"), InputError);
    CHECK_THROWS_AS(load_dense_vectors("T1 1 x\n"), InputError);
    CHECK_THROWS_AS(load_dense_vectors("T1\n"), InputError);
    CHECK_THROWS_AS(load_dense_vectors("T1 1\nT1 2\n"), InputError);
    const TechniqueIndex idx(v);
    const auto r = rank_by_vector({"q", DenseVector{1, 0, 0.5}}, idx.entries(), 2);
    CHECK(r[0].first == "T1");
}

TEST_CASE("fixture technique index covers every technique with a description") {
    const auto& snap = testing::fixture_snapshot();
    const TechniqueIndex idx = build_technique_index(snap);
    CHECK(!idx.entries().empty());
    CHECK(idx.entries().size() <= snap.techniques.size());
    const auto* t = snap.find_technique("T1499");
    REQUIRE(t != nullptr);
    const auto r = rank_techniques(t->name + " " + t->description, idx, 5);
    CHECK(r[0].first == "T1499");
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i - 1].second >= r[i].second);
}
