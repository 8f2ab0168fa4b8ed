#pragma once

#include "vulnmap/datafeeds.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace vulnmap {

using TokenStream = std::vector<std::string>;

/// Porter stemmer, following the behaviour of the reference C implementation
/// (including its "bli" and "logi" rules).  Input must be lowercase ASCII.
std::string porter_stem(std::string_view word);

/// Lowercases, splits on anything that is not an ASCII letter or digit,
/// drops stop words, and stems the rest.
class TextNormalizer {
public:
    /// Uses the built-in English stop-word list.
    TextNormalizer();
    explicit TextNormalizer(std::unordered_set<std::string> stopwords);

    TokenStream normalize(std::string_view text) const;
    const std::unordered_set<std::string>& stopwords() const { return stopwords_; }

private:
    std::unordered_set<std::string> stopwords_;
};

/// Convenience wrapper using the default normalizer.
TokenStream normalize(std::string_view text);

/// The raw text of the built-in stop-word file (one word per line, '#' comments).
std::string_view default_stopword_file();
std::unordered_set<std::string> parse_stopword_file(std::string_view text);

enum class SynonymSource { alternative_terms, glossary, manual };
std::string_view to_string(SynonymSource s);
SynonymSource synonym_source_from_string(std::string_view s);

struct SynonymGroup {
    std::string code;
    std::vector<TokenStream> phrases;  // longest first, then lexicographic
    SynonymSource source = SynonymSource::alternative_terms;
    std::string origin;                // "CWE-119", "glossary:3", "manual:1+glossary:2"

    bool operator==(const SynonymGroup&) const = default;
};

/// Raw synonym groups as read from a glossary or manual override file.
using PhraseGroups = std::vector<std::vector<std::string>>;

/// Reads the glossary text format: one group per line, phrases separated by
/// '|', blank lines and '#' comments ignored.
PhraseGroups parse_glossary(std::string_view text);

class SynonymCodebook {
public:
    SynonymCodebook() = default;
    explicit SynonymCodebook(std::vector<SynonymGroup> groups);

    const std::vector<SynonymGroup>& groups() const { return groups_; }
    bool empty() const { return groups_.empty(); }

    /// Longest-match-first, left-to-right replacement of phrase occurrences
    /// by the owning group's code word, repeated until nothing changes.
    TokenStream apply(const TokenStream& stream) const;

    /// Tab-separated export: group_id, code, source, origin, phrase.
    std::string export_tsv() const;
    static SynonymCodebook import_tsv(std::string_view text);

    bool operator==(const SynonymCodebook& o) const { return groups_ == o.groups_; }

private:
    // Single pass of longest-match replacement; returns true if anything changed.
    bool apply_once(const TokenStream& in, TokenStream& out) const;

    std::vector<SynonymGroup> groups_;
    // first token -> (phrase length, group index, phrase index), longest first
    std::unordered_map<std::string, std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>> by_first_;
};

/// Builds the codebook from CWE alternative terms, glossary groups and
/// optional manual groups.  Alternative terms are split on ',' and '/'.
/// A phrase claimed by two CWEs goes to the lower CWE id; a glossary phrase
/// already owned elsewhere is an error naming the phrase.  A manual group
/// merges every existing group that shares a phrase with it.
SynonymCodebook build_codebook(const std::vector<CweEntry>& cwes, const PhraseGroups& glossary,
                               const PhraseGroups& manual = {},
                               const TextNormalizer& normalizer = TextNormalizer());

TokenStream apply_synonym_coding(const TokenStream& stream, const SynonymCodebook& codebook);

}  // namespace vulnmap
