#include "vulnmap/datafeeds.hpp"
#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace vulnmap {

using nlohmann::json;

namespace {

std::string str(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it != obj.end() && it->is_string() ? it->get<std::string>() : std::string{};
}

bool flag(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it != obj.end() && it->is_boolean() && it->get<bool>();
}

std::string mitre_external_id(const json& obj) {
    auto it = obj.find("external_references");
    if (it == obj.end() || !it->is_array()) return {};
    for (const auto& ref : *it)
        if (ref.is_object() && str(ref, "source_name") == "mitre-attack") return str(ref, "external_id");
    return {};
}

bool in_enterprise_domain(const json& obj) {
    auto it = obj.find("x_mitre_domains");
    if (it == obj.end() || !it->is_array()) return true;  // relationships and older objects omit it
    for (const auto& d : *it)
        if (d.is_string() && d.get<std::string>() == "enterprise-attack") return true;
    return false;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct SourceObject {
    std::string external_id;
    std::string name;
    bool is_group = false;
};

AttackBundle parse_objects(const json& doc, ParseReport* report) {
    if (!doc.is_object() || str(doc, "type") != "bundle" || !doc.contains("objects") || !doc["objects"].is_array())
        throw InputError("ATT&CK bundle: not a STIX bundle with an objects array");

    ParseReport local;
    ParseReport& rep = report ? *report : local;
    std::set<std::string> dropped_refs;  // STIX ids of revoked/deprecated objects
    std::map<std::string, std::size_t> technique_by_ref;
    std::map<std::string, std::size_t> actor_by_ref;
    std::map<std::string, SourceObject> software_by_ref;
    AttackBundle out;
    std::string latest;

    auto note_date = [&](const json& o) {
        const std::string m = str(o, "modified").substr(0, std::min<std::size_t>(10, str(o, "modified").size()));
        if (m > latest) latest = m;
    };

    const auto& objects = doc["objects"];
    for (const auto& o : objects) {
        if (!o.is_object()) continue;
        const std::string type = str(o, "type");
        if (type == "x-mitre-collection") {
            rep.version = str(o, "x_mitre_version");
            continue;
        }
        if (type != "attack-pattern" && type != "intrusion-set" && type != "malware" && type != "tool") continue;
        const std::string ref = str(o, "id");
        if (flag(o, "revoked")) {
            ++rep.revoked;
            dropped_refs.insert(ref);
            continue;
        }
        if (flag(o, "x_mitre_deprecated")) {
            ++rep.deprecated;
            dropped_refs.insert(ref);
            continue;
        }
        if (!in_enterprise_domain(o)) {
            rep.warnings.push_back("ATT&CK bundle: non-enterprise object " + ref + " ignored");
            dropped_refs.insert(ref);
            continue;
        }
        note_date(o);
        const std::string ext = mitre_external_id(o);
        if (type == "attack-pattern") {
            if (!is_technique_id(ext)) {
                rep.warnings.push_back("ATT&CK bundle: attack-pattern " + ref + " has no technique id, ignored");
                continue;
            }
            AttackTechnique t;
            t.id = ext;
            t.name = str(o, "name");
            t.description = str(o, "description");
            t.parent_technique = parent_technique(ext);
            technique_by_ref[ref] = out.techniques.size();
            out.techniques.push_back(std::move(t));
        } else if (type == "intrusion-set") {
            ThreatActor a;
            a.id = ext;
            a.name = str(o, "name");
            if (auto it = o.find("aliases"); it != o.end() && it->is_array())
                for (const auto& al : *it)
                    if (al.is_string() && al.get<std::string>() != a.name) a.aliases.push_back(al.get<std::string>());
            actor_by_ref[ref] = out.actors.size();
            out.actors.push_back(std::move(a));
        } else {
            software_by_ref[ref] = SourceObject{ext, str(o, "name"), false};
        }
    }

    for (const auto& o : objects) {
        if (!o.is_object() || str(o, "type") != "relationship") continue;
        if (flag(o, "revoked") || flag(o, "x_mitre_deprecated")) {
            ++(flag(o, "revoked") ? rep.revoked : rep.deprecated);
            continue;
        }
        const std::string kind = str(o, "relationship_type");
        const std::string src = str(o, "source_ref");
        const std::string dst = str(o, "target_ref");
        if (dropped_refs.count(src) || dropped_refs.count(dst)) {
            rep.warnings.push_back("ATT&CK bundle: relationship " + str(o, "id") +
                                   " points at a revoked or deprecated object, ignored");
            continue;
        }
        if (kind == "subtechnique-of") {
            auto s = technique_by_ref.find(src);
            auto d = technique_by_ref.find(dst);
            if (s != technique_by_ref.end() && d != technique_by_ref.end())
                out.techniques[s->second].parent_technique = out.techniques[d->second].id;
            continue;
        }
        if (kind != "uses") continue;
        auto tech = technique_by_ref.find(dst);
        if (tech == technique_by_ref.end()) continue;  // group uses software, etc.
        AttackTechnique& t = out.techniques[tech->second];
        SourceObject source;
        if (auto a = actor_by_ref.find(src); a != actor_by_ref.end()) {
            ThreatActor& actor = out.actors[a->second];
            actor.used_techniques.push_back(t.id);
            source = SourceObject{actor.id, actor.name, true};
        } else if (auto sw = software_by_ref.find(src); sw != software_by_ref.end()) {
            source = sw->second;
        } else {
            continue;
        }
        const std::string text = str(o, "description");
        if (!text.empty()) t.procedures.push_back(ProcedureExample{source.external_id, source.name, text});
    }

    for (auto& t : out.techniques) {
        std::vector<std::string> cves = extract_cve_ids(t.description);
        for (const auto& p : t.procedures) {
            auto found = extract_cve_ids(p.text);
            cves.insert(cves.end(), found.begin(), found.end());
        }
        sort_unique(cves);
        t.referenced_cves = std::move(cves);
        std::sort(t.procedures.begin(), t.procedures.end(), [](const auto& a, const auto& b) {
            return std::tie(a.source_id, a.text) < std::tie(b.source_id, b.text);
        });
    }
    for (auto& a : out.actors) sort_unique(a.used_techniques);
    std::sort(out.techniques.begin(), out.techniques.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    std::sort(out.actors.begin(), out.actors.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    rep.date = latest;
    return out;
}

}  // namespace

AttackBundle parse_attack_bundle(std::string_view raw, ParseReport* report) {
    json doc;
    try {
        doc = json::parse(raw.begin(), raw.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("ATT&CK bundle: malformed JSON: ") + e.what(), e.byte);
    }
    try {
        return parse_objects(doc, report);
    } catch (const json::exception& e) {
        throw InputError(std::string("ATT&CK bundle: unexpected structure: ") + e.what());
    }
}

}  // namespace vulnmap
