#pragma once

#include "vulnmap/hierclf.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace vulnmap {

nlohmann::json train_config_to_json(const TrainConfig& c);
/// Overlays the keys present in `j` onto `c`.  Unknown keys and values of the
/// wrong type raise a ConfigError.
void apply_train_config(const nlohmann::json& j, TrainConfig& c);

/// Operator configuration shared by the CLI and the service.
struct AppConfig {
    std::string snapshot;         // snapshot directory
    std::string registry;         // model registry directory
    std::string feedback_log;     // append-only feedback file
    std::string listen_host = "127.0.0.1";
    int listen_port = 8080;
    std::string token;            // empty disables the token check
    std::string glossary;         // optional synonym glossary
    std::string manual_synonyms;  // optional manual synonym groups
    std::string curated_map;      // optional CWE -> technique rows
    std::size_t review_pool = 200;
    TrainConfig train;
};

/// Reads a JSON config file.  Relative paths are resolved against the file's
/// directory.  An empty path yields the defaults.
AppConfig load_app_config(const std::string& path);
AppConfig app_config_from_json(const nlohmann::json& j, const std::string& base_dir = {});

/// VULNMAP_SNAPSHOT, VULNMAP_REGISTRY, VULNMAP_FEEDBACK_LOG, VULNMAP_LISTEN
/// (host:port) and VULNMAP_TOKEN override the matching fields.
void apply_env_overrides(AppConfig& cfg, const std::map<std::string, std::string>& env);
std::map<std::string, std::string> process_env();

}  // namespace vulnmap
