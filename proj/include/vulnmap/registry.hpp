#pragma once

#include <json.hpp>

#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace vulnmap {

enum class ModelState { staged, active, retired };
std::string_view to_string(ModelState s);

struct RegistryEntry {
    std::string model_id;
    std::string snapshot_id;
    std::string created;
    nlohmann::json metrics = nlohmann::json::object();
    ModelState state = ModelState::staged;
};

/// Directory-per-model registry:
///   <root>/<model_id>/model.bin   the model file
///   <root>/<model_id>/entry.json  snapshot id, metrics, staged/retired state
///   <root>/ACTIVE                 id of the single active model
/// The active state is read from ACTIVE alone, so at most one model is active.
class ModelRegistry {
public:
    explicit ModelRegistry(std::string root);

    /// Stores a model and returns its entry.  Staging the same bytes twice
    /// returns the existing entry.
    RegistryEntry stage(const std::string& model_bytes, const std::string& snapshot_id, const nlohmann::json& metrics,
                        const std::string& created);
    std::vector<RegistryEntry> list() const;
    std::optional<RegistryEntry> find(const std::string& model_id) const;
    std::string model_bytes(const std::string& model_id) const;
    /// Makes the model active and retires the previous active one.
    void activate(const std::string& model_id);
    std::optional<std::string> active_id() const;
    const std::string& root() const { return root_; }

private:
    std::optional<RegistryEntry> read_entry(const std::string& model_id) const;
    void write_entry(const RegistryEntry& e) const;
    std::optional<std::string> read_active() const;

    std::string root_;
    mutable std::mutex mutex_;
};

}  // namespace vulnmap
