#include "vulnmap/datafeeds.hpp"
#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"
#include "xml_sax.hpp"

#include <algorithm>
#include <cctype>

namespace vulnmap {

namespace {

// CAPEC writes ATT&CK ids without the leading "T" ("1059" or "1059.001").
// Anything else is treated as a malformed mapping.
std::optional<std::string> normalize_attack_entry(std::string_view raw) {
    std::string s = trim(raw);
    if (!s.empty() && (s[0] == 'T' || s[0] == 't')) s = s.substr(1);
    const std::string id = "T" + s;
    if (!is_technique_id(id)) return std::nullopt;
    return id;
}

class CapecHandler : public detail::SaxHandler {
public:
    std::vector<CapecPattern> patterns;
    std::vector<std::string> warnings;
    std::string version, date;

    void on_start(std::string_view name, const detail::XmlAttrs& a) override {
        if (name == "Attack_Pattern_Catalog") {
            version = attr(a, "Version");
            date = attr(a, "Date");
        } else if (name == "Attack_Pattern") {
            const std::string raw_id = attr(a, "ID");
            auto id = parse_cwe_id(raw_id);  // plain positive integer
            if (!id || *id <= 0) throw InputError("CAPEC catalog: pattern with invalid ID '" + raw_id + "'");
            current_ = CapecPattern{};
            current_.id = *id;
            in_pattern_ = true;
        } else if (!in_pattern_) {
            return;
        } else if (name == "Related_Weakness") {
            const std::string raw = attr(a, "CWE_ID");
            if (auto cwe = parse_cwe_id(raw)) {
                current_.related_cwes.push_back(*cwe);
            } else {
                warnings.push_back("CAPEC-" + std::to_string(current_.id) + ": invalid CWE_ID '" + raw +
                                   "' skipped");
            }
        } else if (name == "Taxonomy_Mapping") {
            in_attack_mapping_ = attr(a, "Taxonomy_Name") == "ATTACK";
            entry_id_.reset();
        }
    }

    void on_end(std::string_view name, const std::string& text) override {
        if (!in_pattern_) return;
        if (name == "Attack_Pattern") {
            auto dedup = [](auto& v) {
                std::sort(v.begin(), v.end());
                v.erase(std::unique(v.begin(), v.end()), v.end());
            };
            dedup(current_.related_cwes);
            dedup(current_.related_techniques);
            patterns.push_back(std::move(current_));
            in_pattern_ = false;
        } else if (name == "Entry_ID" && in_attack_mapping_) {
            entry_id_ = text;
        } else if (name == "Taxonomy_Mapping" && in_attack_mapping_) {
            const std::string raw = entry_id_.value_or("");
            if (auto tid = normalize_attack_entry(raw)) {
                current_.related_techniques.push_back(*tid);
            } else {
                warnings.push_back("CAPEC-" + std::to_string(current_.id) + ": malformed ATT&CK mapping '" +
                                   raw + "' skipped");
            }
            in_attack_mapping_ = false;
        }
    }

private:
    static std::string attr(const detail::XmlAttrs& a, std::string_view key) {
        auto it = a.find(key);
        return it == a.end() ? std::string{} : it->second;
    }

    CapecPattern current_;
    bool in_pattern_ = false;
    bool in_attack_mapping_ = false;
    std::optional<std::string> entry_id_;
};

}  // namespace

std::vector<CapecPattern> parse_capec_catalog(std::string_view raw, ParseReport* report) {
    CapecHandler h;
    h.parse(raw, "CAPEC catalog");
    std::sort(h.patterns.begin(), h.patterns.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < h.patterns.size(); ++i)
        if (h.patterns[i].id == h.patterns[i - 1].id)
            throw InputError("CAPEC catalog: duplicate pattern CAPEC-" + std::to_string(h.patterns[i].id));
    if (report) {
        report->version = h.version;
        report->date = h.date;
        report->warnings.insert(report->warnings.end(), h.warnings.begin(), h.warnings.end());
    }
    return std::move(h.patterns);
}

}  // namespace vulnmap
