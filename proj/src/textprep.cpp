#include "vulnmap/textprep.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace vulnmap {

namespace detail {
extern const char* const kStopwordFileText;
}

namespace {

bool is_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool all_alpha(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

// Porter is not idempotent on every word, so stemming repeats until the
// token stops changing.  That is what makes normalize() a fixed point.
std::string stem_fixpoint(std::string tok) {
    if (!all_alpha(tok)) return tok;
    for (int i = 0; i < 10; ++i) {
        std::string next = porter_stem(tok);
        if (next == tok) break;
        tok = std::move(next);
    }
    return tok;
}

}  // namespace

std::string_view default_stopword_file() { return detail::kStopwordFileText; }

std::unordered_set<std::string> parse_stopword_file(std::string_view text) {
    std::unordered_set<std::string> out;
    for (const auto& line : split(text, '\n')) {
        const std::string w = to_lower(trim(line));
        if (w.empty() || w[0] == '#') continue;
        out.insert(w);
    }
    return out;
}

TextNormalizer::TextNormalizer() : stopwords_(parse_stopword_file(default_stopword_file())) {}

TextNormalizer::TextNormalizer(std::unordered_set<std::string> stopwords) : stopwords_(std::move(stopwords)) {}

TokenStream TextNormalizer::normalize(std::string_view text) const {
    TokenStream out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        if (!stopwords_.count(cur)) {
            std::string s = stem_fixpoint(std::move(cur));
            if (!s.empty() && !stopwords_.count(s)) out.push_back(std::move(s));
        }
        cur.clear();
    };
    for (char c : text) {
        if (is_alnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else {
            flush();
        }
    }
    flush();
    return out;
}

TokenStream normalize(std::string_view text) {
    static const TextNormalizer normalizer;
    return normalizer.normalize(text);
}

std::string_view to_string(SynonymSource s) {
    switch (s) {
        case SynonymSource::alternative_terms: return "alternative_terms";
        case SynonymSource::glossary: return "glossary";
        case SynonymSource::manual: return "manual";
    }
    return "manual";
}

SynonymSource synonym_source_from_string(std::string_view s) {
    if (s == "alternative_terms") return SynonymSource::alternative_terms;
    if (s == "glossary") return SynonymSource::glossary;
    if (s == "manual") return SynonymSource::manual;
    throw InputError("unknown synonym source '" + std::string(s) + "'");
}

PhraseGroups parse_glossary(std::string_view text) {
    PhraseGroups out;
    for (const auto& line : split(text, '\n')) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> group;
        for (const auto& p : split(t, '|')) {
            std::string phrase = trim(p);
            if (!phrase.empty()) group.push_back(std::move(phrase));
        }
        if (!group.empty()) out.push_back(std::move(group));
    }
    return out;
}

SynonymCodebook::SynonymCodebook(std::vector<SynonymGroup> groups) : groups_(std::move(groups)) {
    for (std::size_t g = 0; g < groups_.size(); ++g)
        for (std::size_t p = 0; p < groups_[g].phrases.size(); ++p) {
            const auto& phrase = groups_[g].phrases[p];
            if (phrase.empty()) continue;
            by_first_[phrase.front()].emplace_back(phrase.size(), g, p);
        }
    for (auto& [_, v] : by_first_)
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
            return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
        });
}

bool SynonymCodebook::apply_once(const TokenStream& in, TokenStream& out) const {
    out.clear();
    bool changed = false;
    std::size_t i = 0;
    while (i < in.size()) {
        bool matched = false;
        auto it = by_first_.find(in[i]);
        if (it != by_first_.end()) {
            for (const auto& [len, g, p] : it->second) {
                if (i + len > in.size()) continue;
                const auto& phrase = groups_[g].phrases[p];
                if (!std::equal(phrase.begin(), phrase.end(), in.begin() + static_cast<std::ptrdiff_t>(i))) continue;
                const std::string& code = groups_[g].code;
                if (len != 1 || code != in[i]) changed = true;
                out.push_back(code);
                i += len;
                matched = true;
                break;
            }
        }
        if (!matched) out.push_back(in[i++]);
    }
    return changed;
}

TokenStream SynonymCodebook::apply(const TokenStream& stream) const {
    if (groups_.empty()) return stream;
    TokenStream cur = stream, next;
    // Each changing pass either shortens the stream or rewrites a single
    // token into a code word, which then maps to itself, so this terminates.
    for (std::size_t pass = 0; pass <= 2 * stream.size() + 2; ++pass) {
        if (!apply_once(cur, next)) break;
        cur.swap(next);
    }
    return cur;
}

std::string SynonymCodebook::export_tsv() const {
    std::ostringstream out;
    out << "# group_id\tcode\tsource\torigin\tphrase\n";
    for (std::size_t g = 0; g < groups_.size(); ++g)
        for (const auto& phrase : groups_[g].phrases)
            out << g << '\t' << groups_[g].code << '\t' << to_string(groups_[g].source) << '\t' << groups_[g].origin
                << '\t' << join(phrase, " ") << '\n';
    return out.str();
}

SynonymCodebook SynonymCodebook::import_tsv(std::string_view text) {
    std::map<std::size_t, SynonymGroup> groups;
    std::size_t line_no = 0;
    for (const auto& line : split(text, '\n')) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 5) throw InputError("codebook line " + std::to_string(line_no) + ": expected 5 columns");
        const std::size_t gid = std::stoul(cols[0]);
        auto& g = groups[gid];
        g.code = cols[1];
        g.source = synonym_source_from_string(cols[2]);
        g.origin = cols[3];
        TokenStream phrase;
        for (const auto& t : split(cols[4], ' '))
            if (!t.empty()) phrase.push_back(t);
        g.phrases.push_back(std::move(phrase));
    }
    std::vector<SynonymGroup> out;
    for (auto& [_, g] : groups) out.push_back(std::move(g));
    return SynonymCodebook(std::move(out));
}

namespace {

struct DraftGroup {
    std::set<TokenStream> phrases;
    SynonymSource source;
    std::string origin;
    bool alive = true;
};

std::vector<std::string> split_alternative_term(const std::string& term) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : term) {
        if (c == ',' || c == '/') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool phrase_order(const TokenStream& a, const TokenStream& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

}  // namespace

SynonymCodebook build_codebook(const std::vector<CweEntry>& cwes, const PhraseGroups& glossary,
                               const PhraseGroups& manual, const TextNormalizer& normalizer) {
    std::vector<DraftGroup> drafts;
    std::map<TokenStream, std::size_t> owner;  // phrase -> draft index

    std::vector<const CweEntry*> sorted;
    for (const auto& c : cwes) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id < b->id; });

    // Alternative terms: walking CWEs in ascending id order means the first
    // claim on a phrase is the lowest id, which is the tie-break rule.
    for (const CweEntry* c : sorted) {
        if (c->alternative_terms.empty()) continue;
        DraftGroup g{{}, SynonymSource::alternative_terms, cwe_label(c->id)};
        for (const auto& term : c->alternative_terms)
            for (const auto& piece : split_alternative_term(term)) {
                TokenStream phrase = normalizer.normalize(piece);
                if (phrase.empty() || owner.count(phrase)) continue;
                g.phrases.insert(phrase);
            }
        if (g.phrases.empty()) continue;
        for (const auto& p : g.phrases) owner[p] = drafts.size();
        drafts.push_back(std::move(g));
    }

    for (std::size_t i = 0; i < glossary.size(); ++i) {
        DraftGroup g{{}, SynonymSource::glossary, "glossary:" + std::to_string(i + 1)};
        for (const auto& raw : glossary[i]) {
            TokenStream phrase = normalizer.normalize(raw);
            if (phrase.empty()) continue;
            if (owner.count(phrase))
                throw InputError("codebook: glossary phrase '" + raw + "' already belongs to " +
                                 drafts[owner[phrase]].origin);
            g.phrases.insert(phrase);
        }
        if (g.phrases.empty()) continue;
        for (const auto& p : g.phrases) owner[p] = drafts.size();
        drafts.push_back(std::move(g));
    }

    for (std::size_t i = 0; i < manual.size(); ++i) {
        DraftGroup g{{}, SynonymSource::manual, "manual:" + std::to_string(i + 1)};
        std::set<std::size_t> absorbed;
        for (const auto& raw : manual[i]) {
            TokenStream phrase = normalizer.normalize(raw);
            if (phrase.empty()) continue;
            if (auto it = owner.find(phrase); it != owner.end()) absorbed.insert(it->second);
            g.phrases.insert(phrase);
        }
        for (std::size_t d : absorbed) {
            g.phrases.insert(drafts[d].phrases.begin(), drafts[d].phrases.end());
            g.origin += "+" + drafts[d].origin;
            drafts[d].alive = false;
        }
        if (g.phrases.empty()) continue;
        for (const auto& p : g.phrases) owner[p] = drafts.size();
        drafts.push_back(std::move(g));
    }

    std::vector<SynonymGroup> groups;
    for (auto& d : drafts) {
        if (!d.alive) continue;
        SynonymGroup g;
        g.phrases.assign(d.phrases.begin(), d.phrases.end());
        std::sort(g.phrases.begin(), g.phrases.end(), phrase_order);
        g.source = d.source;
        g.origin = d.origin;
        groups.push_back(std::move(g));
    }

    // Code words.  A candidate is rejected when another group already uses it
    // as a code or owns it as a single-token phrase, since replacing into it
    // would make two groups indistinguishable.
    std::map<std::string, std::size_t> single_owner;
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (const auto& p : groups[g].phrases)
            if (p.size() == 1) single_owner[p[0]] = g;
    std::set<std::string> used;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::vector<std::string> candidates;
        std::vector<std::string> singles;
        for (const auto& p : groups[g].phrases)
            if (p.size() == 1) singles.push_back(p[0]);
        std::sort(singles.begin(), singles.end());
        candidates.insert(candidates.end(), singles.begin(), singles.end());
        for (const auto& p : groups[g].phrases) candidates.push_back(p.front());  // already longest-first, lex
        for (const auto& p : groups[g].phrases) candidates.push_back(join(p, "_"));
        for (const auto& c : candidates) {
            if (used.count(c)) continue;
            auto so = single_owner.find(c);
            if (so != single_owner.end() && so->second != g) continue;
            groups[g].code = c;
            used.insert(c);
            break;
        }
        if (groups[g].code.empty())
            throw Error("codebook: no code word available for group " + groups[g].origin);
    }
    return SynonymCodebook(std::move(groups));
}

TokenStream apply_synonym_coding(const TokenStream& stream, const SynonymCodebook& codebook) {
    return codebook.apply(stream);
}

}  // namespace vulnmap
