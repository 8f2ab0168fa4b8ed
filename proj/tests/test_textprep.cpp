#include "test_support.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/textprep.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace vulnmap;

namespace {

CweEntry cwe_with_terms(int id, std::vector<std::string> terms) {
    CweEntry e;
    e.id = id;
    e.name = "W" + std::to_string(id);
    e.alternative_terms = std::move(terms);
    return e;
}

// Longest match at each position over every phrase of every group; equal
// lengths go to the lower group index then lower phrase index.  Repeated to a
// fixed point.
TokenStream brute_force_coding(const TokenStream& in, const SynonymCodebook& book) {
    TokenStream cur = in;
    for (;;) {
        TokenStream out;
        std::size_t i = 0;
        while (i < cur.size()) {
            std::size_t best_len = 0;
            std::string best_code;
            for (const auto& g : book.groups())
                for (const auto& p : g.phrases) {
                    if (p.size() <= best_len || i + p.size() > cur.size()) continue;
                    bool eq = true;
                    for (std::size_t k = 0; k < p.size() && eq; ++k) eq = cur[i + k] == p[k];
                    if (eq) {
                        best_len = p.size();
                        best_code = g.code;
                    }
                }
            if (best_len == 0) {
                out.push_back(cur[i++]);
            } else {
                out.push_back(best_code);
                i += best_len;
            }
        }
        if (out == cur) return out;
        cur = out;
    }
}

}  // namespace

TEST_CASE("Porter stemmer reference vectors") {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"caresses", "caress"},   {"ponies", "poni"},        {"ties", "ti"},           {"caress", "caress"},
        {"cats", "cat"},          {"feed", "feed"},          {"agreed", "agre"},       {"plastered", "plaster"},
        {"bled", "bled"},         {"motoring", "motor"},     {"sing", "sing"},         {"conflated", "conflat"},
        {"troubled", "troubl"},   {"sized", "size"},         {"hopping", "hop"},       {"tanned", "tan"},
        {"falling", "fall"},      {"hissing", "hiss"},       {"fizzed", "fizz"},       {"failing", "fail"},
        {"filing", "file"},       {"happy", "happi"},        {"sky", "sky"},           {"relational", "relat"},
        {"conditional", "condit"}, {"rational", "ration"},    {"valenci", "valenc"},    {"hesitanci", "hesit"},
        {"digitizer", "digit"},   {"conformabli", "conform"}, {"radicalli", "radic"},  {"differentli", "differ"},
        {"vileli", "vile"},       {"analogousli", "analog"}, {"vietnamization", "vietnam"},
        {"predication", "predic"}, {"operator", "oper"},     {"feudalism", "feudal"}, {"decisiveness", "decis"},
        {"hopefulness", "hope"},  {"callousness", "callous"}, {"formaliti", "formal"}, {"sensitiviti", "sensit"},
        {"sensibiliti", "sensibl"}, {"triplicate", "triplic"}, {"formative", "form"}, {"formalize", "formal"},
        {"electriciti", "electr"}, {"electrical", "electr"}, {"hopeful", "hope"},     {"goodness", "good"},
        {"revival", "reviv"},     {"allowance", "allow"},    {"inference", "infer"},   {"airliner", "airlin"},
        {"gyroscopic", "gyroscop"}, {"adjustable", "adjust"}, {"defensible", "defens"}, {"irritant", "irrit"},
        {"replacement", "replac"}, {"adjustment", "adjust"}, {"dependent", "depend"}, {"adoption", "adopt"},
        {"homologou", "homolog"}, {"communism", "commun"},   {"activate", "activ"},    {"angulariti", "angular"},
        {"homologous", "homolog"}, {"effective", "effect"},  {"bowdlerize", "bowdler"}, {"probate", "probat"},
        {"rate", "rate"},         {"cease", "ceas"},         {"controll", "control"},  {"roll", "roll"},
        {"generalizations", "gener"}, {"oscillators", "oscil"}, {"authenticated", "authent"},
        {"archaeology", "archaeolog"}, {"a", "a"},           {"is", "is"},
    };
    for (const auto& [word, stem] : cases) {
        INFO(word);
        CHECK(porter_stem(word) == stem);
    }
}

TEST_CASE("built-in stop-word list is pinned by checksum") {
    CHECK(sha256_hex(default_stopword_file()) == "b0d860d16015be4df874b4121735ea0d91963dcb2290cf7177c2c5fb37e7ae9a");
    const auto words = parse_stopword_file(default_stopword_file());
    CHECK(words.size() > 150);
    CHECK(words.count("a"));
    CHECK(words.count("the"));
}

TEST_CASE("normalize drops stop words and stems the rest") {
    CHECK(normalize("A remote, authenticated DB2 user") == TokenStream{"remot", "authent", "db2", "user"});
}

TEST_CASE("normalize of empty text is empty") {
    CHECK(normalize("").empty());
    CHECK(normalize("  ,;!  ").empty());
}

TEST_CASE("normalize is a fixed point on its own output") {
    for (const char* text : {"A remote, authenticated DB2 user", "Buffer overflows in the parsing routines",
                             "SQL injection via the 'id' parameter allows remote attackers to execute commands"}) {
        const TokenStream once = normalize(text);
        CHECK(normalize(join(once, " ")) == once);
    }
}

TEST_CASE("normalize ignores case and punctuation differences") {
    CHECK(normalize("Cross-Site Scripting (XSS) in login.php!") == normalize("cross site scripting xss in login php"));
}

TEST_CASE("tokens contain only lowercase letters and digits") {
    const auto toks = normalize("Héllo, wörld! <script>alert(1)</script> x86_64 \t\n 0xFF");
    for (const auto& t : toks) {
        CHECK(!t.empty());
        for (char c : t) CHECK(((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')));
    }
}

TEST_CASE("custom stop-word lists override the default") {
    const TextNormalizer n(std::unordered_set<std::string>{"remote"});
    CHECK(n.normalize("a remote user") == TokenStream{"a", "user"});
}

TEST_CASE("CWE-119 terms form one group sharing a code") {
    const auto book = build_codebook({cwe_with_terms(119, {"buffer overflow", "buffer overrun"})}, {});
    REQUIRE(book.groups().size() == 1);
    const auto& g = book.groups()[0];
    CHECK(g.origin == "CWE-119");
    CHECK(g.source == SynonymSource::alternative_terms);
    const std::set<TokenStream> phrases(g.phrases.begin(), g.phrases.end());
    CHECK(phrases == std::set<TokenStream>{{"buffer", "overflow"}, {"buffer", "overrun"}});
    CHECK(g.code == "buffer");
    CHECK(apply_synonym_coding(normalize("buffer overrun detected"), book) == TokenStream{"buffer", "detect"});
    CHECK(apply_synonym_coding(normalize("buffer overflow"), book) == apply_synonym_coding(normalize("buffer overrun"), book));
}

TEST_CASE("empty inputs give an empty codebook") {
    const auto book = build_codebook({}, {});
    CHECK(book.empty());
    const TokenStream s{"remot", "user"};
    CHECK(apply_synonym_coding(s, book) == s);
}

TEST_CASE("code words come from the group's own phrases") {
    const auto book = build_codebook({cwe_with_terms(79, {"XSS", "cross site scripting"}),
                                      cwe_with_terms(89, {"SQL injection", "SQLi"})},
                                     {{"denial of service", "DoS"}});
    for (const auto& g : book.groups()) {
        bool ok = false;
        for (const auto& p : g.phrases) ok = ok || p.front() == g.code || join(p, "_") == g.code;
        CHECK(ok);
        for (std::size_t i = 1; i < g.phrases.size(); ++i) CHECK(g.phrases[i - 1].size() >= g.phrases[i].size());
    }
}

TEST_CASE("no phrase belongs to two groups") {
    const auto book = build_codebook({cwe_with_terms(120, {"buffer overflow"}), cwe_with_terms(119, {"buffer overflow", "overrun"})},
                                     {{"memory corruption", "heap smashing"}});
    std::set<TokenStream> seen;
    for (const auto& g : book.groups())
        for (const auto& p : g.phrases) CHECK(seen.insert(p).second);
    // The lower CWE id claims a shared phrase.
    CHECK(book.groups()[0].origin == "CWE-119");
}

TEST_CASE("a glossary phrase already owned elsewhere is an error naming the phrase") {
    try {
        build_codebook({cwe_with_terms(119, {"buffer overflow"})}, {{"buffer overflow", "smash"}});
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("buffer overflow") != std::string::npos);
    }
}

TEST_CASE("a manual group merges the glossary groups it touches") {
    const auto book = build_codebook({}, {{"denial of service", "ddos"}, {"resource exhaustion", "starvation"}},
                                     {{"ddos", "starvation"}});
    REQUIRE(book.groups().size() == 1);
    CHECK(book.groups()[0].source == SynonymSource::manual);
    CHECK(book.groups()[0].phrases.size() == 4);
}

TEST_CASE("the longer overlapping phrase wins") {
    const auto book = build_codebook({cwe_with_terms(119, {"buffer overflow"}), cwe_with_terms(121, {"stack buffer overflow"})}, {});
    const TokenStream in = normalize("stack buffer overflow detected");
    const TokenStream out = apply_synonym_coding(in, book);
    const auto g121 = std::find_if(book.groups().begin(), book.groups().end(), [](const auto& g) { return g.origin == "CWE-121"; });
    REQUIRE(g121 != book.groups().end());
    CHECK(out == TokenStream{g121->code, "detect"});
    CHECK(out == brute_force_coding(in, book));
}

TEST_CASE("synonym coding matches the brute-force oracle and its invariants on random streams") {
    const auto book = build_codebook({cwe_with_terms(119, {"buffer overflow", "buffer overrun", "memory safety"}),
                                      cwe_with_terms(121, {"stack buffer overflow", "stack smashing"}),
                                      cwe_with_terms(79, {"XSS", "cross site scripting"})},
                                     {{"remote code execution", "RCE", "arbitrary code execution"}});
    std::set<std::string> codes;
    for (const auto& g : book.groups()) codes.insert(g.code);
    const std::vector<std::string> vocab = {"buffer", "overflow", "overrun", "stack", "smash", "memori", "safeti",
                                            "xss", "cross", "site", "script", "remot", "code", "execut", "rce",
                                            "arbitrari", "user", "allow"};
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        TokenStream in;
        const int n = static_cast<int>(rng() % 12);
        for (int i = 0; i < n; ++i) in.push_back(vocab[rng() % vocab.size()]);
        const TokenStream out = apply_synonym_coding(in, book);
        INFO(join(in, " "));
        CHECK(out == brute_force_coding(in, book));
        CHECK(apply_synonym_coding(out, book) == out);
        CHECK(out.size() <= in.size());
        const std::set<std::string> inputs(in.begin(), in.end());
        for (const auto& t : out) CHECK((codes.count(t) || inputs.count(t)));
    }
}

TEST_CASE("codebook export and import round trip") {
    const auto book = build_codebook({cwe_with_terms(119, {"buffer overflow", "buffer overrun"})},
                                     {{"denial of service", "dos"}}, {{"dos", "resource exhaustion"}});
    const auto back = SynonymCodebook::import_tsv(book.export_tsv());
    CHECK(back == book);
    CHECK(back.apply(normalize("buffer overrun and resource exhaustion")) ==
          book.apply(normalize("buffer overrun and resource exhaustion")));
}

TEST_CASE("fixture glossary builds a codebook over the fixture catalog") {
    const auto& snap = testing::fixture_snapshot();
    const auto glossary = parse_glossary(read_file(testing::fixture_path("cwe_glossary.txt")));
    CHECK(!glossary.empty());
    const auto book = build_codebook(snap.cwes, glossary);
    CHECK(book.groups().size() >= glossary.size());
}
