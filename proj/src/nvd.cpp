#include "vulnmap/datafeeds.hpp"
#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <json.hpp>

#include <algorithm>

namespace vulnmap {

using nlohmann::json;

namespace {

enum class NvdSchema { v11, v20 };

const json& field(const json& obj, const char* key) {
    static const json null_value;
    if (!obj.is_object()) return null_value;
    auto it = obj.find(key);
    return it == obj.end() ? null_value : *it;
}

NvdSchema detect_schema(const json& doc) {
    if (!doc.is_object()) throw UnsupportedVersionError("NVD feed: top-level value is not an object");
    if (doc.contains("CVE_Items")) {
        const auto v = doc.value("CVE_data_version", std::string{});
        if (v != "4.0") throw UnsupportedVersionError("NVD feed: unsupported CVE_data_version '" + v + "'");
        return NvdSchema::v11;
    }
    if (doc.contains("vulnerabilities")) {
        const auto fmt = doc.value("format", std::string{});
        const auto v = doc.value("version", std::string{});
        if (fmt != "NVD_CVE" || v != "2.0")
            throw UnsupportedVersionError("NVD feed: unsupported format '" + fmt + "' version '" + v + "'");
        return NvdSchema::v20;
    }
    throw UnsupportedVersionError("NVD feed: neither CVE_Items nor vulnerabilities present");
}

const std::string* english_text(const json& arr) {
    if (!arr.is_array()) return nullptr;
    const std::string* fallback = nullptr;
    for (const auto& d : arr) {
        if (!d.is_object() || !d.contains("value") || !d["value"].is_string()) continue;
        const auto& val = d["value"].get_ref<const std::string&>();
        if (d.value("lang", std::string{}) == "en") return &val;
        if (!fallback) fallback = &val;
    }
    return fallback;
}

// Adds CWE ids from a list of {"lang","value"} objects.  The two NVD
// placeholder values mean "no usable assignment" and are dropped.
void collect_cwes(const json& arr, std::vector<int>& out, const std::string& cve, ParseReport* report) {
    if (!arr.is_array()) return;
    for (const auto& d : arr) {
        if (!d.is_object() || !d.contains("value") || !d["value"].is_string()) continue;
        const auto& val = d["value"].get_ref<const std::string&>();
        if (val == "NVD-CWE-noinfo" || val == "NVD-CWE-Other") continue;
        if (auto id = parse_cwe_id(val); id && starts_with(val, "CWE-")) {
            out.push_back(*id);
        } else if (report) {
            report->warnings.push_back(cve + ": unrecognised weakness value '" + val + "'");
        }
    }
}

std::string date_part(const std::string& ts) { return ts.size() >= 10 ? ts.substr(0, 10) : ts; }

void finish_record(CveRecord& rec, std::vector<CveRecord>& out, ParseReport* report) {
    std::sort(rec.assigned_cwes.begin(), rec.assigned_cwes.end());
    rec.assigned_cwes.erase(std::unique(rec.assigned_cwes.begin(), rec.assigned_cwes.end()),
                            rec.assigned_cwes.end());
    if (!is_cve_id(rec.id)) {
        if (report) report->warnings.push_back("skipping entry with invalid id '" + rec.id + "'");
        return;
    }
    if (rec.description.empty()) {
        if (report) report->warnings.push_back(rec.id + ": no description, skipped");
        return;
    }
    out.push_back(std::move(rec));
}

std::vector<CveRecord> parse_document(const json& doc, ParseReport* report) {
    const NvdSchema schema = detect_schema(doc);
    std::vector<CveRecord> out;
    std::string latest;

    if (schema == NvdSchema::v11) {
        if (report) report->version = "1.1";
        latest = date_part(doc.value("CVE_data_timestamp", std::string{}));
        const auto& items = doc["CVE_Items"];
        if (!items.is_array()) throw InputError("NVD feed: CVE_Items is not an array");
        out.reserve(items.size());
        for (const auto& item : items) {
            const json& cve = field(item, "cve");
            CveRecord rec;
            rec.id = field(field(cve, "CVE_data_meta"), "ID").is_string()
                         ? field(field(cve, "CVE_data_meta"), "ID").get<std::string>()
                         : std::string{};
            if (auto* d = english_text(field(field(cve, "description"), "description_data")))
                rec.description = trim(*d);
            const json& pts = field(field(cve, "problemtype"), "problemtype_data");
            if (pts.is_array())
                for (const auto& pt : pts) collect_cwes(field(pt, "description"), rec.assigned_cwes, rec.id, report);
            if (field(item, "publishedDate").is_string())
                rec.published = date_part(field(item, "publishedDate").get<std::string>());
            finish_record(rec, out, report);
        }
    } else {
        if (report) report->version = "2.0";
        latest = date_part(doc.value("timestamp", std::string{}));
        const auto& items = doc["vulnerabilities"];
        if (!items.is_array()) throw InputError("NVD feed: vulnerabilities is not an array");
        out.reserve(items.size());
        for (const auto& item : items) {
            const json& cve = field(item, "cve");
            CveRecord rec;
            if (field(cve, "id").is_string()) rec.id = field(cve, "id").get<std::string>();
            if (auto* d = english_text(field(cve, "descriptions"))) rec.description = trim(*d);
            const json& ws = field(cve, "weaknesses");
            if (ws.is_array())
                for (const auto& w : ws) collect_cwes(field(w, "description"), rec.assigned_cwes, rec.id, report);
            if (field(cve, "published").is_string())
                rec.published = date_part(field(cve, "published").get<std::string>());
            finish_record(rec, out, report);
        }
    }
    if (report) report->date = latest;
    return out;
}

}  // namespace

std::vector<CveRecord> parse_nvd_feed(std::string_view raw, ParseReport* report) {
    if (trim(raw).empty()) return {};
    json doc;
    try {
        doc = json::parse(raw.begin(), raw.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("NVD feed: malformed JSON: ") + e.what(), e.byte);
    }
    try {
        return parse_document(doc, report);
    } catch (const json::exception& e) {
        throw InputError(std::string("NVD feed: unexpected structure: ") + e.what());
    }
}

}  // namespace vulnmap
