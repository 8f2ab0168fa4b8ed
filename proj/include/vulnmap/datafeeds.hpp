#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vulnmap {

struct CveRecord {
    std::string id;
    std::string description;
    std::vector<int> assigned_cwes;  // sorted, unique; empty for noinfo/Other
    std::string published;           // YYYY-MM-DD

    bool operator==(const CveRecord&) const = default;
};

enum class CweStatus { active, deprecated, obsolete };

std::string_view to_string(CweStatus s);
CweStatus cwe_status_from_string(std::string_view s);

struct CweEntry {
    int id = 0;
    std::string name;
    std::string description;
    std::vector<int> parents;  // ChildOf targets in view 1000, sorted
    std::vector<std::string> alternative_terms;
    CweStatus status = CweStatus::active;
    // Categories share the id space with weaknesses but never take part in
    // the research hierarchy.
    bool is_category = false;

    bool operator==(const CweEntry&) const = default;
};

struct CapecPattern {
    int id = 0;
    std::vector<int> related_cwes;
    std::vector<std::string> related_techniques;

    bool operator==(const CapecPattern&) const = default;
};

/// A narrative sentence attached to a "uses" relationship between a group or
/// software object and a technique.
struct ProcedureExample {
    std::string source_id;  // G#### or S####
    std::string source_name;
    std::string text;

    bool operator==(const ProcedureExample&) const = default;
};

struct AttackTechnique {
    std::string id;
    std::string name;
    std::string description;
    std::optional<std::string> parent_technique;
    std::vector<std::string> referenced_cves;  // sorted, unique
    std::vector<ProcedureExample> procedures;  // sorted by (source_id, text)

    bool operator==(const AttackTechnique&) const = default;
};

struct ThreatActor {
    std::string id;
    std::string name;
    std::vector<std::string> aliases;
    std::vector<std::string> used_techniques;  // sorted, unique

    bool operator==(const ThreatActor&) const = default;
};

/// Parser diagnostics that are reported rather than raised.
struct ParseReport {
    std::vector<std::string> warnings;
    std::size_t revoked = 0;
    std::size_t deprecated = 0;
    std::string version;  // catalog version as declared by the source
    std::string date;     // latest date found in the source, YYYY-MM-DD
};

std::vector<CveRecord> parse_nvd_feed(std::string_view raw, ParseReport* report = nullptr);
std::vector<CweEntry> parse_cwe_catalog(std::string_view raw, ParseReport* report = nullptr);
std::vector<CapecPattern> parse_capec_catalog(std::string_view raw, ParseReport* report = nullptr);

struct AttackBundle {
    std::vector<AttackTechnique> techniques;
    std::vector<ThreatActor> actors;
};
AttackBundle parse_attack_bundle(std::string_view raw, ParseReport* report = nullptr);

struct SourceInfo {
    std::string name;
    std::string version;
    std::string checksum;

    bool operator==(const SourceInfo&) const = default;
};

struct UnresolvedRef {
    std::string kind;  // e.g. "cve->cwe", "capec->technique"
    std::string from;
    std::string to;

    bool operator==(const UnresolvedRef&) const = default;
};

/// Immutable bundle of the five record collections.  Collections are kept
/// sorted by id so the snapshot hash and serialization are order independent.
class KnowledgeSnapshot {
public:
    std::string snapshot_id;
    std::string created;
    std::vector<CveRecord> cves;
    std::vector<CweEntry> cwes;
    std::vector<CapecPattern> capecs;
    std::vector<AttackTechnique> techniques;
    std::vector<ThreatActor> actors;
    std::vector<SourceInfo> source_manifest;
    std::vector<UnresolvedRef> unresolved;

    const CveRecord* find_cve(std::string_view id) const;
    const CweEntry* find_cwe(int id) const;
    const AttackTechnique* find_technique(std::string_view id) const;
    const ThreatActor* find_actor(std::string_view id) const;

    /// Rebuilds the lookup indexes; called by build_snapshot and load_snapshot.
    void reindex();

private:
    std::unordered_map<std::string, std::size_t> cve_index_;
    std::unordered_map<int, std::size_t> cwe_index_;
    std::unordered_map<std::string, std::size_t> technique_index_;
    std::unordered_map<std::string, std::size_t> actor_index_;
};

KnowledgeSnapshot build_snapshot(std::vector<CveRecord> cves, std::vector<CweEntry> cwes,
                                 std::vector<CapecPattern> capecs,
                                 std::vector<AttackTechnique> techniques,
                                 std::vector<ThreatActor> actors,
                                 std::vector<SourceInfo> sources = {}, std::string created = {});

/// Content hash over the sorted records.  Independent of manifest and date.
std::string compute_snapshot_id(const KnowledgeSnapshot& snap);

void save_snapshot(const KnowledgeSnapshot& snap, const std::string& dir);
KnowledgeSnapshot load_snapshot(const std::string& dir);

/// Paths of the four catalog sources consumed by ingest.
struct SourcePaths {
    std::vector<std::string> nvd_feeds;
    std::string cwe_xml;
    std::string capec_xml;
    std::string attack_json;
};

/// Locates the standard file names under a fixture-style directory.
SourcePaths discover_sources(const std::string& dir);

/// Reads and parses all sources.  Errors name the failing source.
KnowledgeSnapshot ingest_sources(const SourcePaths& paths, std::vector<std::string>* warnings = nullptr);

}  // namespace vulnmap
