#include "vulnmap/datafeeds.hpp"
#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"
#include "xml_sax.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace vulnmap {

std::string_view to_string(CweStatus s) {
    switch (s) {
        case CweStatus::active: return "active";
        case CweStatus::deprecated: return "deprecated";
        case CweStatus::obsolete: return "obsolete";
    }
    return "active";
}

CweStatus cwe_status_from_string(std::string_view s) {
    const std::string l = to_lower(s);
    if (l == "deprecated") return CweStatus::deprecated;
    if (l == "obsolete") return CweStatus::obsolete;
    return CweStatus::active;
}

namespace {

constexpr const char* kResearchView = "1000";

class CweHandler : public detail::SaxHandler {
public:
    std::vector<CweEntry> entries;
    bool saw_research_view = false;
    std::string version, date;
    std::vector<std::string> warnings;

    void on_start(std::string_view name, const detail::XmlAttrs& a) override {
        if (name == "Weakness_Catalog") {
            version = attr(a, "Version");
            date = attr(a, "Date");
        } else if ((name == "Weakness" || name == "Category") && parent() != "Related_Weaknesses") {
            CweEntry e;
            const auto id = parse_cwe_id(attr(a, "ID"));
            if (!id) throw InputError("CWE catalog: entry with invalid ID '" + attr(a, "ID") + "'");
            e.id = *id;
            e.name = attr(a, "Name");
            e.status = cwe_status_from_string(attr(a, "Status"));
            e.is_category = name == "Category";
            current_ = std::move(e);
            in_entry_ = true;
        } else if (name == "Related_Weakness" && in_entry_) {
            if (attr(a, "Nature") == "ChildOf" && attr(a, "View_ID") == kResearchView) {
                if (auto pid = parse_cwe_id(attr(a, "CWE_ID"))) current_.parents.push_back(*pid);
            }
        } else if (name == "View" && attr(a, "ID") == kResearchView) {
            saw_research_view = true;
        }
    }

    void on_end(std::string_view name, const std::string& text) override {
        if (!in_entry_) return;
        if ((name == "Weakness" || name == "Category") && parent() != "Related_Weaknesses") {
            std::sort(current_.parents.begin(), current_.parents.end());
            current_.parents.erase(std::unique(current_.parents.begin(), current_.parents.end()),
                                   current_.parents.end());
            entries.push_back(std::move(current_));
            current_ = CweEntry{};
            in_entry_ = false;
        } else if ((name == "Description" || name == "Summary") && (parent() == "Weakness" || parent() == "Category")) {
            current_.description = trim(text);
        } else if (name == "Term" && parent() == "Alternate_Term") {
            const std::string term = to_lower(trim(text));
            if (!term.empty()) current_.alternative_terms.push_back(term);
        }
    }

private:
    static std::string attr(const detail::XmlAttrs& a, std::string_view key) {
        auto it = a.find(key);
        return it == a.end() ? std::string{} : it->second;
    }

    CweEntry current_;
    bool in_entry_ = false;
};

// Reports the first cycle found among parent links, as "CWE-a -> CWE-b -> CWE-a".
void check_acyclic(const std::vector<CweEntry>& entries) {
    std::map<int, const CweEntry*> by_id;
    for (const auto& e : entries) by_id[e.id] = &e;
    std::map<int, int> state;  // 0 unseen, 1 on stack, 2 done
    std::vector<int> path;

    std::function<void(int)> visit = [&](int id) {
        state[id] = 1;
        path.push_back(id);
        for (int p : by_id.at(id)->parents) {
            if (!by_id.count(p)) continue;
            if (state[p] == 1) {
                auto it = std::find(path.begin(), path.end(), p);
                std::vector<std::string> names;
                for (; it != path.end(); ++it) names.push_back(cwe_label(*it));
                names.push_back(cwe_label(p));
                throw IntegrityError("CWE catalog: cyclic parent relation " + join(names, " -> "));
            }
            if (state[p] == 0) visit(p);
        }
        path.pop_back();
        state[id] = 2;
    };
    for (const auto& [id, _] : by_id)
        if (state[id] == 0) visit(id);
}

}  // namespace

std::vector<CweEntry> parse_cwe_catalog(std::string_view raw, ParseReport* report) {
    CweHandler h;
    h.parse(raw, "CWE catalog");
    if (!h.saw_research_view)
        throw ConfigError("CWE catalog: Research Concepts view (CWE-1000) not present");

    std::set<int> seen;
    for (const auto& e : h.entries)
        if (!seen.insert(e.id).second) throw InputError("CWE catalog: duplicate entry " + cwe_label(e.id));

    for (auto& e : h.entries) {
        std::vector<int> kept;
        for (int p : e.parents) {
            if (seen.count(p)) {
                kept.push_back(p);
            } else {
                h.warnings.push_back(cwe_label(e.id) + ": parent " + cwe_label(p) + " not in catalog, dropped");
            }
        }
        e.parents = std::move(kept);
    }
    check_acyclic(h.entries);

    std::sort(h.entries.begin(), h.entries.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    if (report) {
        report->version = h.version;
        report->date = h.date;
        report->warnings.insert(report->warnings.end(), h.warnings.begin(), h.warnings.end());
    }
    return std::move(h.entries);
}

}  // namespace vulnmap
