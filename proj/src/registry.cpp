#include "vulnmap/registry.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/hierclf.hpp"
#include "vulnmap/util.hpp"

#include <algorithm>
#include <filesystem>

namespace fs = std::filesystem;

namespace vulnmap {

using nlohmann::json;

std::string_view to_string(ModelState s) {
    switch (s) {
        case ModelState::staged: return "staged";
        case ModelState::active: return "active";
        case ModelState::retired: return "retired";
    }
    return "staged";
}

namespace {

bool valid_model_id(std::string_view id) {
    return id.size() == 16 && std::all_of(id.begin(), id.end(), [](char c) {
               return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
           });
}

}  // namespace

ModelRegistry::ModelRegistry(std::string root) : root_(std::move(root)) {
    if (root_.empty()) throw ConfigError("model registry path is not configured");
    fs::create_directories(root_);
}

std::optional<RegistryEntry> ModelRegistry::read_entry(const std::string& model_id) const {
    if (!valid_model_id(model_id)) return std::nullopt;
    const fs::path p = fs::path(root_) / model_id / "entry.json";
    if (!fs::exists(p)) return std::nullopt;
    try {
        const json j = json::parse(read_file(p.string()));
        RegistryEntry e;
        e.model_id = j.at("model_id").get<std::string>();
        e.snapshot_id = j.at("snapshot_id").get<std::string>();
        e.created = j.at("created").get<std::string>();
        e.metrics = j.at("metrics");
        e.state = j.at("state").get<std::string>() == "retired" ? ModelState::retired : ModelState::staged;
        return e;
    } catch (const json::exception& ex) {
        throw IntegrityError("registry entry " + model_id + ": " + ex.what());
    }
}

void ModelRegistry::write_entry(const RegistryEntry& e) const {
    json j = {{"model_id", e.model_id},
              {"snapshot_id", e.snapshot_id},
              {"created", e.created},
              {"metrics", e.metrics},
              {"state", e.state == ModelState::retired ? "retired" : "staged"}};
    write_file_atomic((fs::path(root_) / e.model_id / "entry.json").string(), j.dump(2) + "\n");
}

std::optional<std::string> ModelRegistry::read_active() const {
    const fs::path p = fs::path(root_) / "ACTIVE";
    if (!fs::exists(p)) return std::nullopt;
    const std::string id = trim(read_file(p.string()));
    if (id.empty()) return std::nullopt;
    return id;
}

RegistryEntry ModelRegistry::stage(const std::string& model_bytes, const std::string& snapshot_id,
                                   const json& metrics, const std::string& created) {
    std::lock_guard<std::mutex> lock(mutex_);
    RegistryEntry e;
    e.model_id = model_id(model_bytes);
    if (auto existing = read_entry(e.model_id)) {
        if (read_active() == e.model_id) existing->state = ModelState::active;
        return *existing;
    }
    e.snapshot_id = snapshot_id;
    e.created = created;
    e.metrics = metrics;
    e.state = ModelState::staged;
    fs::create_directories(fs::path(root_) / e.model_id);
    write_file_atomic((fs::path(root_) / e.model_id / "model.bin").string(), model_bytes);
    write_entry(e);
    return e;
}

std::vector<RegistryEntry> ModelRegistry::list() const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto active = read_active();
    std::vector<RegistryEntry> out;
    for (const auto& d : fs::directory_iterator(root_)) {
        if (!d.is_directory()) continue;
        if (auto e = read_entry(d.path().filename().string())) {
            if (active == e->model_id) e->state = ModelState::active;
            out.push_back(std::move(*e));
        }
    }
    std::sort(out.begin(), out.end(), [](const RegistryEntry& a, const RegistryEntry& b) {
        if (a.created != b.created) return a.created < b.created;
        return a.model_id < b.model_id;
    });
    return out;
}

std::optional<RegistryEntry> ModelRegistry::find(const std::string& id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto e = read_entry(id);
    if (e && read_active() == id) e->state = ModelState::active;
    return e;
}

std::string ModelRegistry::model_bytes(const std::string& id) const {
    if (!valid_model_id(id)) throw NotFoundError("no model " + id);
    const fs::path p = fs::path(root_) / id / "model.bin";
    if (!fs::exists(p)) throw NotFoundError("no model " + id);
    std::string bytes = read_file(p.string());
    if (model_id(bytes) != id) throw IntegrityError("registry model " + id + " does not match its content hash");
    return bytes;
}

void ModelRegistry::activate(const std::string& id) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto e = read_entry(id);
    if (!e) throw NotFoundError("no model " + id);
    const auto previous = read_active();
    if (previous == id) return;
    if (e->state == ModelState::retired) {
        e->state = ModelState::staged;
        write_entry(*e);
    }
    write_file_atomic((fs::path(root_) / "ACTIVE").string(), id + "\n");
    if (previous) {
        if (auto old = read_entry(*previous)) {
            old->state = ModelState::retired;
            write_entry(*old);
        }
    }
}

std::optional<std::string> ModelRegistry::active_id() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return read_active();
}

}  // namespace vulnmap
