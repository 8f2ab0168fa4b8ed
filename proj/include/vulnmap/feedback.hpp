#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace vulnmap {

enum class Verdict { accept, reject, replace };
std::string_view to_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view s);

struct FeedbackRecord {
    std::uint64_t record_id = 0;
    std::string cve_id;
    int proposed_cwe = 0;
    Verdict verdict = Verdict::accept;
    std::optional<int> replacement_cwe;
    std::string reviewer;
    std::string timestamp;
    std::string model_id;  // generation the verdict was given under

    bool operator==(const FeedbackRecord&) const = default;
};

nlohmann::json feedback_to_json(const FeedbackRecord& r);
FeedbackRecord feedback_from_json(const nlohmann::json& j);

/// Append-only NDJSON log.  Each line holds one record and the SHA-256 of its
/// canonical serialisation; record ids increase by one per line.
class FeedbackStore {
public:
    explicit FeedbackStore(std::string path);

    /// Assigns the next record id and appends.  The caller supplies every
    /// other field.
    FeedbackRecord append(FeedbackRecord record);
    std::vector<FeedbackRecord> records() const;
    std::optional<FeedbackRecord> find(std::uint64_t id) const;
    const std::string& path() const { return path_; }

private:
    std::string path_;
    mutable std::mutex mutex_;
    std::vector<FeedbackRecord> records_;
};

/// Re-reads a log and verifies checksums and id sequence.  Returns the
/// records; throws IntegrityError on the first bad line.
std::vector<FeedbackRecord> audit_feedback_log(const std::string& path);

}  // namespace vulnmap
