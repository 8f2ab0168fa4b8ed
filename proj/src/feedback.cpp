#include "vulnmap/feedback.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

namespace vulnmap {

using nlohmann::json;

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::accept: return "accept";
        case Verdict::reject: return "reject";
        case Verdict::replace: return "replace";
    }
    return "accept";
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
    if (s == "accept") return Verdict::accept;
    if (s == "reject") return Verdict::reject;
    if (s == "replace") return Verdict::replace;
    return std::nullopt;
}

json feedback_to_json(const FeedbackRecord& r) {
    json j = {{"record_id", r.record_id},
              {"cve_id", r.cve_id},
              {"proposed_cwe", cwe_label(r.proposed_cwe)},
              {"verdict", std::string(to_string(r.verdict))},
              {"reviewer", r.reviewer},
              {"timestamp", r.timestamp},
              {"model_id", r.model_id}};
    j["replacement_cwe"] = r.replacement_cwe ? json(cwe_label(*r.replacement_cwe)) : json(nullptr);
    return j;
}

FeedbackRecord feedback_from_json(const json& j) {
    FeedbackRecord r;
    r.record_id = j.at("record_id").get<std::uint64_t>();
    r.cve_id = j.at("cve_id").get<std::string>();
    auto cwe = parse_cwe_id(j.at("proposed_cwe").get<std::string>());
    if (!cwe) throw InputError("feedback record: bad proposed_cwe");
    r.proposed_cwe = *cwe;
    auto v = verdict_from_string(j.at("verdict").get<std::string>());
    if (!v) throw InputError("feedback record: bad verdict");
    r.verdict = *v;
    if (!j.at("replacement_cwe").is_null()) {
        auto rep = parse_cwe_id(j.at("replacement_cwe").get<std::string>());
        if (!rep) throw InputError("feedback record: bad replacement_cwe");
        r.replacement_cwe = *rep;
    }
    r.reviewer = j.at("reviewer").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.model_id = j.at("model_id").get<std::string>();
    return r;
}

namespace {

std::string line_for(const FeedbackRecord& r) {
    const std::string body = feedback_to_json(r).dump();
    json line = json::parse(body);
    line["sha256"] = sha256_hex(body);
    return line.dump() + "\n";
}

}  // namespace

std::vector<FeedbackRecord> audit_feedback_log(const std::string& path) {
    std::vector<FeedbackRecord> out;
    if (!std::filesystem::exists(path)) return out;
    const std::string text = read_file(path);
    if (!text.empty() && text.back() != '\n') throw IntegrityError("feedback log " + path + ": last line is incomplete");
    std::size_t line_no = 0;
    for (const auto& line : split(text, '\n')) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = "feedback log " + path + " line " + std::to_string(line_no);
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw IntegrityError(where + ": " + e.what());
        }
        if (!j.contains("sha256")) throw IntegrityError(where + ": missing checksum");
        const std::string sum = j["sha256"].get<std::string>();
        j.erase("sha256");
        FeedbackRecord r;
        try {
            r = feedback_from_json(j);
        } catch (const std::exception& e) {
            throw IntegrityError(where + ": " + e.what());
        }
        if (sha256_hex(feedback_to_json(r).dump()) != sum) throw IntegrityError(where + ": checksum mismatch");
        if (r.record_id != out.size() + 1) throw IntegrityError(where + ": record id out of sequence");
        out.push_back(std::move(r));
    }
    return out;
}

FeedbackStore::FeedbackStore(std::string path) : path_(std::move(path)) {
    if (path_.empty()) throw ConfigError("feedback log path is not configured");
    const auto parent = std::filesystem::path(path_).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    records_ = audit_feedback_log(path_);
}

FeedbackRecord FeedbackStore::append(FeedbackRecord record) {
    std::lock_guard<std::mutex> lock(mutex_);
    record.record_id = records_.size() + 1;
    const std::string line = line_for(record);
    std::FILE* f = std::fopen(path_.c_str(), "ab");
    if (!f) throw InputError("cannot open feedback log " + path_);
    const bool ok = std::fwrite(line.data(), 1, line.size(), f) == line.size() && std::fflush(f) == 0 &&
                    ::fsync(fileno(f)) == 0;
    std::fclose(f);
    if (!ok) throw InputError("cannot append to feedback log " + path_);
    records_.push_back(record);
    return record;
}

std::vector<FeedbackRecord> FeedbackStore::records() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return records_;
}

std::optional<FeedbackRecord> FeedbackStore::find(std::uint64_t id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (id == 0 || id > records_.size()) return std::nullopt;
    return records_[id - 1];
}

}  // namespace vulnmap
