#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vulnmap {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, std::string_view bytes);

/// Inflates gzip data; input without the gzip magic is returned unchanged.
std::string maybe_gunzip(std::string_view bytes);

std::string sha256_hex(std::string_view bytes);

/// Incremental SHA-256 for hashing large record sets without concatenating them.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;
    void update(std::string_view bytes);
    std::string hex_digest();

private:
    void* ctx_;
};

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
bool starts_with(std::string_view s, std::string_view prefix);

/// "CVE-YYYY-NNNN" with four or more trailing digits.
bool is_cve_id(std::string_view s);
/// "T####" or "T####.###".
bool is_technique_id(std::string_view s);
/// Parent id of a sub-technique, or nullopt for a top-level technique.
std::optional<std::string> parent_technique(std::string_view id);
/// All CVE identifiers appearing in free text, in order of appearance.
std::vector<std::string> extract_cve_ids(std::string_view text);

/// Parses "CWE-79" or "79".  Returns nullopt for anything else.
std::optional<int> parse_cwe_id(std::string_view s);
std::string cwe_label(int id);

std::string hex_encode(std::string_view bytes);
std::optional<std::string> hex_decode(std::string_view hex);

/// Deterministic 64-bit seed mixing (splitmix64).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

std::string utc_timestamp();

/// Formats a double with enough digits to round-trip.
std::string format_double(double v);

}  // namespace vulnmap
