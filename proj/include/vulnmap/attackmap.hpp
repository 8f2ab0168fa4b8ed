#pragma once

#include "vulnmap/datafeeds.hpp"
#include "vulnmap/hierclf.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vulnmap {

enum class EdgeSource { capec_chain, procedure_example, curated_map };
std::string_view to_string(EdgeSource s);
EdgeSource edge_source_from_string(std::string_view s);

/// One provenance-tagged mapping edge.  from/to are catalog ids such as
/// "CWE-79", "T1059" or "G0007".
struct MappingEdge {
    std::string from_id;
    std::string to_id;
    EdgeSource source = EdgeSource::capec_chain;
    std::string evidence;

    bool operator==(const MappingEdge&) const = default;
};

struct MappingTable {
    std::multimap<int, MappingEdge> cwe_to_technique;
    std::multimap<std::string, MappingEdge> technique_to_actor;
    std::string built_from;

    /// Distinct technique ids reachable from a CWE, sorted.
    std::vector<std::string> techniques_for(int cwe) const;
    /// Distinct actor ids using a technique, sorted.
    std::vector<std::string> actors_for(const std::string& technique) const;
};

struct CuratedRow {
    int cwe = 0;
    std::string technique;
    std::string note;
    std::size_t line = 0;
};

/// Tab-separated rows: CWE id ("79" or "CWE-79"), technique id, free note.
/// Blank lines and '#' comments are skipped.  Malformed rows are reported and skipped.
std::vector<CuratedRow> parse_curated_map(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Edges from CWE -> CAPEC -> technique chains only.
std::vector<MappingEdge> capec_chain_edges(const KnowledgeSnapshot& snap);
/// Edges induced by CVE references in technique descriptions and procedure examples.
std::vector<MappingEdge> procedure_edges(const KnowledgeSnapshot& snap);

/// Union of the three sources.  Curated rows naming ids absent from the
/// snapshot produce a warning and are skipped.
std::multimap<int, MappingEdge> build_cwe_to_technique(const KnowledgeSnapshot& snap,
                                                       const std::vector<CuratedRow>& curated = {},
                                                       std::vector<std::string>* warnings = nullptr);

/// One edge per (technique, actor) usage.  Sub-technique usage is also
/// credited to the parent technique with evidence saying so.
std::multimap<std::string, MappingEdge> build_technique_to_actor(const KnowledgeSnapshot& snap);

MappingTable build_mapping_table(const KnowledgeSnapshot& snap, const std::vector<CuratedRow>& curated = {},
                                 std::vector<std::string>* warnings = nullptr);

struct CapecChainStats {
    std::size_t cwes = 0;
    std::size_t techniques = 0;
};
CapecChainStats capec_chain_stats(const KnowledgeSnapshot& snap);

enum class CweOrigin { nvd_assigned, model_predicted };
std::string_view to_string(CweOrigin o);

struct CweLink {
    int cwe = 0;
    CweOrigin origin = CweOrigin::nvd_assigned;
    std::optional<double> score;
    bool fallback = false;

    bool operator==(const CweLink&) const = default;
};

struct ActorLink {
    std::string actor_id;
    std::string name;
    std::vector<MappingEdge> edges;  // one per supporting technique
    std::size_t supporting_techniques = 0;

    bool operator==(const ActorLink&) const = default;
};

struct ExplanationChain {
    std::string cve;  // empty for description-only queries
    std::string description;
    std::vector<CweLink> cwe_links;
    std::vector<MappingEdge> technique_links;  // every edge, all sources
    std::vector<std::string> techniques;       // distinct, ranked
    std::vector<ActorLink> actors;             // ranked by support count, then name
    std::vector<MappingEdge> actor_links;      // every technique -> actor edge used
    std::vector<std::string> warnings;
};

struct AnalyzeRequest {
    std::optional<std::string> cve;
    std::optional<std::string> description;
};

/// NVD-assigned CWEs when the CVE has any that are active weaknesses,
/// otherwise the model's predictions for the description.
ExplanationChain analyze_cve(const AnalyzeRequest& request, const HierarchicalModel* model, const MappingTable& table,
                             const KnowledgeSnapshot& snap);
ExplanationChain analyze_cve(const std::string& cve, const HierarchicalModel* model, const MappingTable& table,
                             const KnowledgeSnapshot& snap);

/// Orders model predictions for technique lookup: threshold-kept nodes
/// before fallback picks, nodes without a kept descendant before their
/// ancestors, then score descending and id.
std::vector<CweLink> rank_predicted_cwes(const std::vector<CwePrediction>& preds);

/// Technique ranking used for reciprocal-rank evaluation: techniques reachable
/// from the ranked CWE list, ordered by the best rank of a supporting CWE, then
/// the number of distinct supporting sources, then id.
std::vector<std::string> rank_techniques_from_cwes(const std::vector<int>& ranked_cwes, const MappingTable& table);

}  // namespace vulnmap
