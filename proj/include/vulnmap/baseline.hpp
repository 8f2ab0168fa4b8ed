#pragma once

#include "vulnmap/datafeeds.hpp"
#include "vulnmap/features.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vulnmap {

using DenseVector = std::vector<double>;

struct DocumentEmbedding {
    std::string doc_id;
    std::variant<FeatureVector, DenseVector> vector;
};

/// Standard cosine.  Throws when either vector is all zeros or the
/// dimensions differ.
double cosine_similarity(const FeatureVector& a, const FeatureVector& b);
double cosine_similarity(const DenseVector& a, const DenseVector& b);
double cosine_similarity(const DocumentEmbedding& a, const DocumentEmbedding& b);

/// TF-IDF index over technique descriptions.  Queries are transformed with
/// the same vocabulary.
class TechniqueIndex {
public:
    TechniqueIndex() = default;
    /// Fits on the given (id, text) pairs only.
    TechniqueIndex(const std::vector<std::pair<std::string, std::string>>& docs, int n_max = 1, int min_df = 1);
    explicit TechniqueIndex(std::vector<DocumentEmbedding> embeddings);

    const std::vector<DocumentEmbedding>& entries() const { return entries_; }
    const Vocabulary& vocabulary() const { return vocab_; }
    FeatureVector embed(std::string_view text) const;

private:
    Vocabulary vocab_;
    std::vector<DocumentEmbedding> entries_;
};

TechniqueIndex build_technique_index(const KnowledgeSnapshot& snap, int n_max = 1, int min_df = 1);

/// Top-k by cosine, descending, ties broken by id.  Scores within 1e-12 of a
/// neighbour count as tied.  Entries whose vector is all zeros, and queries
/// with no in-vocabulary term, score 0.
std::vector<std::pair<std::string, double>> rank_techniques(std::string_view cve_text, const TechniqueIndex& index,
                                                            std::size_t k);
std::vector<std::pair<std::string, double>> rank_by_vector(const DocumentEmbedding& query,
                                                           const std::vector<DocumentEmbedding>& index, std::size_t k);

/// Dense-vector file: one record per line, an id followed by whitespace
/// separated decimal components, every row with the same count.  Blank lines
/// and '#' comments are skipped.
std::vector<DocumentEmbedding> load_dense_vectors(std::string_view text);

}  // namespace vulnmap
