#include "vulnmap/baseline.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace vulnmap {

double cosine_similarity(const FeatureVector& a, const FeatureVector& b) {
    if (a.dimension != b.dimension) throw InputError("cosine: dimension mismatch");
    const double na = l2_norm(a), nb = l2_norm(b);
    if (na == 0.0 || nb == 0.0) throw InputError("cosine: similarity is undefined for a zero vector");
    return dot(a, b) / (na * nb);
}

double cosine_similarity(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) throw InputError("cosine: dimension mismatch");
    double ab = 0, aa = 0, bb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += a[i] * b[i];
        aa += a[i] * a[i];
        bb += b[i] * b[i];
    }
    if (aa == 0.0 || bb == 0.0) throw InputError("cosine: similarity is undefined for a zero vector");
    return ab / (std::sqrt(aa) * std::sqrt(bb));
}

double cosine_similarity(const DocumentEmbedding& a, const DocumentEmbedding& b) {
    if (a.vector.index() != b.vector.index()) throw InputError("cosine: sparse and dense vectors cannot be compared");
    return std::visit(
        [&](const auto& va) {
            using T = std::decay_t<decltype(va)>;
            return cosine_similarity(va, std::get<T>(b.vector));
        },
        a.vector);
}

TechniqueIndex::TechniqueIndex(const std::vector<std::pair<std::string, std::string>>& docs, int n_max, int min_df) {
    if (docs.empty()) throw InputError("technique index: no documents");
    std::vector<TokenStream> streams;
    for (const auto& [_, text] : docs) streams.push_back(normalize(text));
    vocab_ = fit_vocabulary(streams, n_max, min_df);
    for (std::size_t i = 0; i < docs.size(); ++i)
        entries_.push_back(DocumentEmbedding{docs[i].first, transform(streams[i], vocab_)});
}

TechniqueIndex::TechniqueIndex(std::vector<DocumentEmbedding> embeddings) : entries_(std::move(embeddings)) {
    if (entries_.empty()) throw InputError("technique index: no documents");
}

FeatureVector TechniqueIndex::embed(std::string_view text) const { return transform(normalize(text), vocab_); }

TechniqueIndex build_technique_index(const KnowledgeSnapshot& snap, int n_max, int min_df) {
    std::vector<std::pair<std::string, std::string>> docs;
    for (const auto& t : snap.techniques) docs.emplace_back(t.id, t.name + ". " + t.description);
    return TechniqueIndex(docs, n_max, min_df);
}

namespace {

double safe_cosine(const DocumentEmbedding& a, const DocumentEmbedding& b) {
    const bool zero_a = std::visit([](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FeatureVector>) return v.empty();
        else return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
    }, a.vector);
    const bool zero_b = std::visit([](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FeatureVector>) return v.empty();
        else return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
    }, b.vector);
    if (zero_a || zero_b) return 0.0;
    return cosine_similarity(a, b);
}

}  // namespace

std::vector<std::pair<std::string, double>> rank_by_vector(const DocumentEmbedding& query,
                                                           const std::vector<DocumentEmbedding>& index, std::size_t k) {
    if (index.empty()) throw InputError("rank: empty index");
    if (k < 1) throw InputError("rank: k must be at least 1");
    std::vector<std::pair<std::string, double>> scored;
    scored.reserve(index.size());
    for (const auto& e : index) scored.emplace_back(e.doc_id, safe_cosine(query, e));
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    // Equal cosines computed along different paths can differ in the last
    // bits.  Runs of scores within kTieTolerance of their neighbour count as
    // one tie and are ordered by id.
    constexpr double kTieTolerance = 1e-12;
    for (std::size_t begin = 0; begin < scored.size();) {
        std::size_t end = begin + 1;
        while (end < scored.size() && scored[end - 1].second - scored[end].second <= kTieTolerance) ++end;
        std::sort(scored.begin() + static_cast<std::ptrdiff_t>(begin), scored.begin() + static_cast<std::ptrdiff_t>(end),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        begin = end;
    }
    if (scored.size() > k) scored.resize(k);
    return scored;
}

std::vector<std::pair<std::string, double>> rank_techniques(std::string_view cve_text, const TechniqueIndex& index,
                                                            std::size_t k) {
    return rank_by_vector(DocumentEmbedding{"query", index.embed(cve_text)}, index.entries(), k);
}

std::vector<DocumentEmbedding> load_dense_vectors(std::string_view text) {
    std::vector<DocumentEmbedding> out;
    std::set<std::string> ids;
    std::size_t width = 0, line_no = 0;
    for (const auto& raw : split(text, '\n')) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream in(line);
        std::string id, tok;
        in >> id;
        DenseVector v;
        while (in >> tok) {
            double x = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
            if (ec != std::errc() || p != tok.data() + tok.size() || !std::isfinite(x))
                throw InputError("dense vectors line " + std::to_string(line_no) + ": bad component '" + tok + "'");
            v.push_back(x);
        }
        if (v.empty()) throw InputError("dense vectors line " + std::to_string(line_no) + ": no components");
        if (width == 0) width = v.size();
        if (v.size() != width)
            throw InputError("dense vectors line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                             " components, found " + std::to_string(v.size()));
        if (!ids.insert(id).second) throw InputError("dense vectors line " + std::to_string(line_no) + ": duplicate id " + id);
        out.push_back(DocumentEmbedding{id, std::move(v)});
    }
    return out;
}

}  // namespace vulnmap
