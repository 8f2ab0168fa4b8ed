#include "vulnmap/features.hpp"

#include "vulnmap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

namespace vulnmap {

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::uint32_t> doc_frequency,
                       std::size_t corpus_size, int n_max)
    : terms_(std::move(terms)), df_(std::move(doc_frequency)), corpus_size_(corpus_size), n_max_(n_max) {
    if (terms_.size() != df_.size()) throw InputError("vocabulary: term and frequency counts differ");
    idf_.resize(terms_.size());
    index_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0 && !(terms_[i - 1] < terms_[i])) throw InputError("vocabulary: terms not strictly sorted");
        if (df_[i] < 1 || df_[i] > corpus_size_) throw InputError("vocabulary: document frequency out of range");
        idf_[i] = std::log((1.0 + static_cast<double>(corpus_size_)) / (1.0 + static_cast<double>(df_[i]))) + 1.0;
        index_.emplace(terms_[i], static_cast<std::uint32_t>(i));
    }
}

std::optional<std::uint32_t> Vocabulary::find(const std::string& ngram) const {
    auto it = index_.find(ngram);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> ngrams(const TokenStream& stream, int n_max) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        std::string g;
        for (int n = 1; n <= n_max && i + static_cast<std::size_t>(n) <= stream.size(); ++n) {
            if (n > 1) g.push_back(' ');
            g += stream[i + static_cast<std::size_t>(n) - 1];
            out.push_back(g);
        }
    }
    return out;
}

Vocabulary fit_vocabulary(const std::vector<TokenStream>& corpus, int n_max, int min_df) {
    if (corpus.empty()) throw InputError("fit_vocabulary: empty corpus");
    if (n_max < 1 || min_df < 1) throw InputError("fit_vocabulary: n_max and min_df must be at least 1");
    std::unordered_map<std::string, std::uint32_t> df;
    std::unordered_set<std::string> seen;
    for (const auto& doc : corpus) {
        seen.clear();
        for (auto& g : ngrams(doc, n_max))
            if (seen.insert(g).second) ++df[g];
    }
    std::vector<std::pair<std::string, std::uint32_t>> kept;
    for (auto& [g, c] : df)
        if (c >= static_cast<std::uint32_t>(min_df)) kept.emplace_back(g, c);
    std::sort(kept.begin(), kept.end());
    std::vector<std::string> terms;
    std::vector<std::uint32_t> freq;
    terms.reserve(kept.size());
    freq.reserve(kept.size());
    for (auto& [g, c] : kept) {
        terms.push_back(std::move(g));
        freq.push_back(c);
    }
    return Vocabulary(std::move(terms), std::move(freq), corpus.size(), n_max);
}

FeatureVector transform(const TokenStream& stream, const Vocabulary& vocab) {
    std::map<std::uint32_t, double> tf;
    for (const auto& g : ngrams(stream, vocab.n_max()))
        if (auto idx = vocab.find(g)) tf[*idx] += 1.0;
    FeatureVector v;
    v.dimension = vocab.size();
    double norm2 = 0.0;
    for (auto& [idx, count] : tf) {
        const double w = count * vocab.idf(idx);
        v.indices.push_back(idx);
        v.values.push_back(w);
        norm2 += w * w;
    }
    if (norm2 > 0.0) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& x : v.values) x *= inv;
    }
    return v;
}

double dot(const FeatureVector& a, const FeatureVector& b) {
    double s = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.indices.size() && j < b.indices.size()) {
        if (a.indices[i] < b.indices[j]) {
            ++i;
        } else if (a.indices[i] > b.indices[j]) {
            ++j;
        } else {
            s += a.values[i++] * b.values[j++];
        }
    }
    return s;
}

double l2_norm(const FeatureVector& v) {
    double s = 0.0;
    for (double x : v.values) s += x * x;
    return std::sqrt(s);
}

}  // namespace vulnmap
