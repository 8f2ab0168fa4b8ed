#pragma once

#include "vulnmap/textprep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vulnmap {

/// Sparse vector with strictly increasing indices and positive values.
struct FeatureVector {
    std::vector<std::uint32_t> indices;
    std::vector<double> values;
    std::size_t dimension = 0;

    bool empty() const { return indices.empty(); }
    bool operator==(const FeatureVector&) const = default;
};

/// N-gram vocabulary.  An n-gram is stored as its tokens joined by a single
/// space; since every token character sorts after the space, string order
/// equals token-sequence order and indices follow lexicographic n-gram order.
class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<std::string> terms, std::vector<std::uint32_t> doc_frequency, std::size_t corpus_size,
               int n_max);

    std::size_t size() const { return terms_.size(); }
    std::size_t corpus_size() const { return corpus_size_; }
    int n_max() const { return n_max_; }
    const std::vector<std::string>& terms() const { return terms_; }
    const std::vector<std::uint32_t>& doc_frequency() const { return df_; }
    std::optional<std::uint32_t> find(const std::string& ngram) const;
    /// ln((1 + N) / (1 + df)) + 1
    double idf(std::uint32_t index) const { return idf_[index]; }

    bool operator==(const Vocabulary& o) const {
        return terms_ == o.terms_ && df_ == o.df_ && corpus_size_ == o.corpus_size_ && n_max_ == o.n_max_;
    }

private:
    std::vector<std::string> terms_;
    std::vector<std::uint32_t> df_;
    std::vector<double> idf_;
    std::size_t corpus_size_ = 0;
    int n_max_ = 1;
    std::unordered_map<std::string, std::uint32_t> index_;
};

/// Every n-gram of the stream for n in [1, n_max], in stream order.
std::vector<std::string> ngrams(const TokenStream& stream, int n_max);

Vocabulary fit_vocabulary(const std::vector<TokenStream>& corpus, int n_max = 2, int min_df = 3);

/// tf * idf per in-vocabulary n-gram, then L2-normalized.
FeatureVector transform(const TokenStream& stream, const Vocabulary& vocab);

double dot(const FeatureVector& a, const FeatureVector& b);
double l2_norm(const FeatureVector& v);

}  // namespace vulnmap
