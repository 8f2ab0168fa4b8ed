#include "vulnmap/datafeeds.hpp"
#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace vulnmap {

using nlohmann::json;

namespace {

constexpr int kSnapshotFormat = 1;

json to_json(const CveRecord& r) {
    return {{"id", r.id}, {"description", r.description}, {"assigned_cwes", r.assigned_cwes},
            {"published", r.published}};
}

json to_json(const CweEntry& e) {
    return {{"id", e.id},
            {"name", e.name},
            {"description", e.description},
            {"parents", e.parents},
            {"alternative_terms", e.alternative_terms},
            {"status", std::string(to_string(e.status))},
            {"is_category", e.is_category}};
}

json to_json(const CapecPattern& p) {
    return {{"id", p.id}, {"related_cwes", p.related_cwes}, {"related_techniques", p.related_techniques}};
}

json to_json(const AttackTechnique& t) {
    json procs = json::array();
    for (const auto& p : t.procedures)
        procs.push_back({{"source_id", p.source_id}, {"source_name", p.source_name}, {"text", p.text}});
    return {{"id", t.id},
            {"name", t.name},
            {"description", t.description},
            {"parent_technique", t.parent_technique ? json(*t.parent_technique) : json(nullptr)},
            {"referenced_cves", t.referenced_cves},
            {"procedures", procs}};
}

json to_json(const ThreatActor& a) {
    return {{"id", a.id}, {"name", a.name}, {"aliases", a.aliases}, {"used_techniques", a.used_techniques}};
}

CveRecord cve_from(const json& j) {
    return CveRecord{j.at("id"), j.at("description"), j.at("assigned_cwes").get<std::vector<int>>(),
                     j.at("published")};
}

CweEntry cwe_from(const json& j) {
    CweEntry e;
    e.id = j.at("id");
    e.name = j.at("name");
    e.description = j.at("description");
    e.parents = j.at("parents").get<std::vector<int>>();
    e.alternative_terms = j.at("alternative_terms").get<std::vector<std::string>>();
    e.status = cwe_status_from_string(j.at("status").get<std::string>());
    e.is_category = j.at("is_category");
    return e;
}

CapecPattern capec_from(const json& j) {
    return CapecPattern{j.at("id"), j.at("related_cwes").get<std::vector<int>>(),
                        j.at("related_techniques").get<std::vector<std::string>>()};
}

AttackTechnique technique_from(const json& j) {
    AttackTechnique t;
    t.id = j.at("id");
    t.name = j.at("name");
    t.description = j.at("description");
    if (!j.at("parent_technique").is_null()) t.parent_technique = j.at("parent_technique").get<std::string>();
    t.referenced_cves = j.at("referenced_cves").get<std::vector<std::string>>();
    for (const auto& p : j.at("procedures")) t.procedures.push_back({p.at("source_id"), p.at("source_name"), p.at("text")});
    return t;
}

ThreatActor actor_from(const json& j) {
    return ThreatActor{j.at("id"), j.at("name"), j.at("aliases").get<std::vector<std::string>>(),
                       j.at("used_techniques").get<std::vector<std::string>>()};
}

template <typename T>
std::string ndjson(const std::vector<T>& items) {
    std::string out;
    for (const auto& it : items) {
        out += to_json(it).dump();
        out += '\n';
    }
    return out;
}

template <typename T, typename F>
std::vector<T> read_ndjson(const std::string& text, F from, const std::string& file) {
    std::vector<T> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        if (nl > pos) {
            try {
                out.push_back(from(json::parse(text.begin() + static_cast<std::ptrdiff_t>(pos),
                                               text.begin() + static_cast<std::ptrdiff_t>(nl))));
            } catch (const json::parse_error& e) {
                throw ParseError("snapshot file " + file + ": malformed record", pos + e.byte);
            } catch (const json::exception& e) {
                throw InputError("snapshot file " + file + ": bad record: " + e.what());
            }
        }
        pos = nl + 1;
    }
    return out;
}

template <typename T, typename K>
void sort_by(std::vector<T>& v, K key) {
    std::sort(v.begin(), v.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
}

void sort_collections(KnowledgeSnapshot& s) {
    sort_by(s.cves, [](const CveRecord& r) { return r.id; });
    sort_by(s.cwes, [](const CweEntry& r) { return r.id; });
    sort_by(s.capecs, [](const CapecPattern& r) { return r.id; });
    sort_by(s.techniques, [](const AttackTechnique& r) { return r.id; });
    sort_by(s.actors, [](const ThreatActor& r) { return r.id; });
}

std::vector<UnresolvedRef> find_unresolved(const KnowledgeSnapshot& s) {
    std::vector<UnresolvedRef> out;
    for (const auto& c : s.cves)
        for (int w : c.assigned_cwes)
            if (!s.find_cwe(w)) out.push_back({"cve->cwe", c.id, cwe_label(w)});
    for (const auto& w : s.cwes)
        for (int p : w.parents)
            if (!s.find_cwe(p)) out.push_back({"cwe->parent", cwe_label(w.id), cwe_label(p)});
    for (const auto& p : s.capecs) {
        const std::string from = "CAPEC-" + std::to_string(p.id);
        for (int w : p.related_cwes)
            if (!s.find_cwe(w)) out.push_back({"capec->cwe", from, cwe_label(w)});
        for (const auto& t : p.related_techniques)
            if (!s.find_technique(t)) out.push_back({"capec->technique", from, t});
    }
    for (const auto& t : s.techniques) {
        if (t.parent_technique && !s.find_technique(*t.parent_technique))
            out.push_back({"technique->parent", t.id, *t.parent_technique});
        for (const auto& c : t.referenced_cves)
            if (!s.find_cve(c)) out.push_back({"technique->cve", t.id, c});
    }
    for (const auto& a : s.actors)
        for (const auto& t : a.used_techniques)
            if (!s.find_technique(t)) out.push_back({"actor->technique", a.id, t});
    return out;
}

const char* const kFiles[] = {"cves.ndjson", "cwes.ndjson", "capecs.ndjson", "techniques.ndjson", "actors.ndjson"};

}  // namespace

void KnowledgeSnapshot::reindex() {
    cve_index_.clear();
    cwe_index_.clear();
    technique_index_.clear();
    actor_index_.clear();
    for (std::size_t i = 0; i < cves.size(); ++i) cve_index_[cves[i].id] = i;
    for (std::size_t i = 0; i < cwes.size(); ++i) cwe_index_[cwes[i].id] = i;
    for (std::size_t i = 0; i < techniques.size(); ++i) technique_index_[techniques[i].id] = i;
    for (std::size_t i = 0; i < actors.size(); ++i) actor_index_[actors[i].id] = i;
}

const CveRecord* KnowledgeSnapshot::find_cve(std::string_view id) const {
    auto it = cve_index_.find(std::string(id));
    return it == cve_index_.end() ? nullptr : &cves[it->second];
}

const CweEntry* KnowledgeSnapshot::find_cwe(int id) const {
    auto it = cwe_index_.find(id);
    return it == cwe_index_.end() ? nullptr : &cwes[it->second];
}

const AttackTechnique* KnowledgeSnapshot::find_technique(std::string_view id) const {
    auto it = technique_index_.find(std::string(id));
    return it == technique_index_.end() ? nullptr : &techniques[it->second];
}

const ThreatActor* KnowledgeSnapshot::find_actor(std::string_view id) const {
    auto it = actor_index_.find(std::string(id));
    return it == actor_index_.end() ? nullptr : &actors[it->second];
}

std::string compute_snapshot_id(const KnowledgeSnapshot& snap) {
    Sha256 h;
    auto feed = [&](const char* name, const std::string& body) {
        h.update(name);
        h.update("\n");
        h.update(body);
    };
    feed("cves", ndjson(snap.cves));
    feed("cwes", ndjson(snap.cwes));
    feed("capecs", ndjson(snap.capecs));
    feed("techniques", ndjson(snap.techniques));
    feed("actors", ndjson(snap.actors));
    return h.hex_digest();
}

KnowledgeSnapshot build_snapshot(std::vector<CveRecord> cves, std::vector<CweEntry> cwes,
                                 std::vector<CapecPattern> capecs, std::vector<AttackTechnique> techniques,
                                 std::vector<ThreatActor> actors, std::vector<SourceInfo> sources,
                                 std::string created) {
    KnowledgeSnapshot s;
    s.cves = std::move(cves);
    s.cwes = std::move(cwes);
    s.capecs = std::move(capecs);
    s.techniques = std::move(techniques);
    s.actors = std::move(actors);
    sort_collections(s);
    s.reindex();
    s.source_manifest = std::move(sources);
    s.created = std::move(created);
    s.unresolved = find_unresolved(s);
    s.snapshot_id = compute_snapshot_id(s);
    return s;
}

void save_snapshot(const KnowledgeSnapshot& snap, const std::string& dir) {
    fs::create_directories(dir);
    const std::string bodies[] = {ndjson(snap.cves), ndjson(snap.cwes), ndjson(snap.capecs),
                                  ndjson(snap.techniques), ndjson(snap.actors)};
    json files = json::object();
    for (std::size_t i = 0; i < 5; ++i) {
        write_file_atomic((fs::path(dir) / kFiles[i]).string(), bodies[i]);
        files[kFiles[i]] = sha256_hex(bodies[i]);
    }
    json sources = json::array();
    for (const auto& s : snap.source_manifest)
        sources.push_back({{"name", s.name}, {"version", s.version}, {"checksum", s.checksum}});
    json unresolved = json::array();
    for (const auto& u : snap.unresolved) unresolved.push_back({{"kind", u.kind}, {"from", u.from}, {"to", u.to}});
    json manifest = {{"format_version", kSnapshotFormat},
                     {"snapshot_id", snap.snapshot_id},
                     {"created", snap.created},
                     {"sources", sources},
                     {"files", files},
                     {"counts",
                      {{"cves", snap.cves.size()},
                       {"cwes", snap.cwes.size()},
                       {"capecs", snap.capecs.size()},
                       {"techniques", snap.techniques.size()},
                       {"actors", snap.actors.size()}}},
                     {"unresolved", unresolved}};
    write_file_atomic((fs::path(dir) / "manifest.json").string(), manifest.dump(2) + "\n");
}

KnowledgeSnapshot load_snapshot(const std::string& dir) {
    const fs::path root(dir);
    if (!fs::exists(root / "manifest.json")) throw InputError("snapshot: no manifest.json in " + dir);
    json manifest;
    try {
        manifest = json::parse(read_file((root / "manifest.json").string()));
    } catch (const json::parse_error& e) {
        throw ParseError("snapshot manifest: malformed JSON", e.byte);
    }
    if (manifest.value("format_version", 0) != kSnapshotFormat)
        throw UnsupportedVersionError("snapshot: unsupported format_version");

    std::string bodies[5];
    for (std::size_t i = 0; i < 5; ++i) {
        bodies[i] = read_file((root / kFiles[i]).string());
        const std::string want = manifest.at("files").value(kFiles[i], std::string{});
        if (sha256_hex(bodies[i]) != want) throw IntegrityError(std::string("snapshot: checksum mismatch for ") + kFiles[i]);
    }
    KnowledgeSnapshot s;
    s.cves = read_ndjson<CveRecord>(bodies[0], cve_from, kFiles[0]);
    s.cwes = read_ndjson<CweEntry>(bodies[1], cwe_from, kFiles[1]);
    s.capecs = read_ndjson<CapecPattern>(bodies[2], capec_from, kFiles[2]);
    s.techniques = read_ndjson<AttackTechnique>(bodies[3], technique_from, kFiles[3]);
    s.actors = read_ndjson<ThreatActor>(bodies[4], actor_from, kFiles[4]);
    sort_collections(s);
    s.reindex();
    s.created = manifest.value("created", std::string{});
    for (const auto& src : manifest.at("sources"))
        s.source_manifest.push_back({src.at("name"), src.at("version"), src.at("checksum")});
    for (const auto& u : manifest.at("unresolved")) s.unresolved.push_back({u.at("kind"), u.at("from"), u.at("to")});
    s.snapshot_id = compute_snapshot_id(s);
    if (s.snapshot_id != manifest.value("snapshot_id", std::string{}))
        throw IntegrityError("snapshot: recomputed snapshot_id does not match manifest");
    return s;
}

SourcePaths discover_sources(const std::string& dir) {
    SourcePaths p;
    const fs::path root(dir);
    auto first_match = [&](const std::string& prefix, const std::string& suffix) -> std::string {
        std::vector<std::string> hits;
        if (!fs::exists(root)) return {};
        for (const auto& e : fs::directory_iterator(root)) {
            const std::string n = e.path().filename().string();
            if (starts_with(n, prefix) && n.size() >= suffix.size() && n.substr(n.size() - suffix.size()) == suffix)
                hits.push_back(e.path().string());
        }
        std::sort(hits.begin(), hits.end());
        return hits.empty() ? std::string{} : hits.back();
    };
    p.cwe_xml = first_match("cwec_", ".xml");
    p.capec_xml = first_match("capec_", ".xml");
    p.attack_json = first_match("enterprise-attack", ".json");
    const fs::path nvd = root / "nvd";
    if (fs::is_directory(nvd)) {
        for (const auto& e : fs::directory_iterator(nvd)) {
            const std::string n = e.path().filename().string();
            if (n.find(".json") != std::string::npos) p.nvd_feeds.push_back(e.path().string());
        }
        std::sort(p.nvd_feeds.begin(), p.nvd_feeds.end());
    }
    return p;
}

namespace {

std::string read_source(const std::string& label, const std::string& path) {
    if (path.empty()) throw InputError(label + " source: no file given");
    if (!fs::exists(path)) throw InputError(label + " source: file not found: " + path);
    return read_file(path);
}

template <typename F>
auto with_source(const std::string& label, F fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        const std::string msg = e.what();
        if (starts_with(msg, label + " source")) throw;
        throw Error(label + " source: " + msg, e.code());
    }
}

}  // namespace

KnowledgeSnapshot ingest_sources(const SourcePaths& paths, std::vector<std::string>* warnings) {
    std::vector<SourceInfo> manifest;
    std::string created;
    auto track = [&](const std::string& date) {
        if (date > created) created = date;
    };
    auto keep_warnings = [&](const ParseReport& r) {
        if (warnings) warnings->insert(warnings->end(), r.warnings.begin(), r.warnings.end());
    };

    std::vector<CveRecord> cves = with_source("NVD", [&] {
        if (paths.nvd_feeds.empty()) throw InputError("NVD source: no feed files given");
        std::vector<CveRecord> all;
        std::set<std::string> versions;
        std::string nvd_date, checksums;
        for (const auto& f : paths.nvd_feeds) {
            const std::string raw = read_source("NVD", f);
            const std::string bytes = maybe_gunzip(raw);
            ParseReport rep;
            auto recs = parse_nvd_feed(bytes, &rep);
            keep_warnings(rep);
            if (!rep.version.empty()) versions.insert(rep.version);
            if (rep.date > nvd_date) nvd_date = rep.date;
            checksums += fs::path(f).filename().string() + ":" + sha256_hex(raw) + "\n";
            for (auto& r : recs) all.push_back(std::move(r));
        }
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        for (std::size_t i = 1; i < all.size(); ++i)
            if (all[i].id == all[i - 1].id) throw InputError("NVD source: " + all[i].id + " appears in two feeds");
        std::vector<std::string> vs(versions.begin(), versions.end());
        manifest.push_back({"nvd", "schema " + join(vs, "+") + " as of " + nvd_date, sha256_hex(checksums)});
        track(nvd_date);
        return all;
    });

    std::vector<CweEntry> cwes = with_source("CWE", [&] {
        const std::string raw = read_source("CWE", paths.cwe_xml);
        ParseReport rep;
        auto out = parse_cwe_catalog(raw, &rep);
        keep_warnings(rep);
        manifest.push_back({"cwe", rep.version + " (" + rep.date + ")", sha256_hex(raw)});
        track(rep.date);
        return out;
    });

    std::vector<CapecPattern> capecs = with_source("CAPEC", [&] {
        const std::string raw = read_source("CAPEC", paths.capec_xml);
        ParseReport rep;
        auto out = parse_capec_catalog(raw, &rep);
        keep_warnings(rep);
        manifest.push_back({"capec", rep.version + " (" + rep.date + ")", sha256_hex(raw)});
        track(rep.date);
        return out;
    });

    AttackBundle bundle = with_source("ATT&CK", [&] {
        const std::string raw = read_source("ATT&CK", paths.attack_json);
        ParseReport rep;
        auto out = parse_attack_bundle(raw, &rep);
        keep_warnings(rep);
        if (warnings) {
            std::ostringstream ss;
            ss << "ATT&CK bundle: dropped " << rep.revoked << " revoked and " << rep.deprecated
               << " deprecated objects";
            warnings->push_back(ss.str());
        }
        manifest.push_back({"attack", rep.version + " (" + rep.date + ")", sha256_hex(raw)});
        track(rep.date);
        return out;
    });

    return build_snapshot(std::move(cves), std::move(cwes), std::move(capecs), std::move(bundle.techniques),
                          std::move(bundle.actors), std::move(manifest), created);
}

}  // namespace vulnmap
