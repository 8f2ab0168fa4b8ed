#include "vulnmap/config.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <cstdlib>
#include <filesystem>
#include <set>

extern char** environ;

namespace vulnmap {

using nlohmann::json;

json train_config_to_json(const TrainConfig& c) {
    json j = {{"min_samples", c.min_samples},
              {"learning_rate", c.learning_rate},
              {"momentum", c.momentum},
              {"epochs", c.epochs},
              {"l2", c.l2},
              {"negative_ratio", c.negative_ratio},
              {"max_positives", c.max_positives},
              {"class_balance", c.class_balance},
              {"seed", c.seed},
              {"n_max", c.n_max},
              {"min_df", c.min_df},
              {"threshold_grid", c.threshold_grid},
              {"default_threshold", c.default_threshold},
              {"threads", c.threads},
              {"split", c.split}};
    j["label_universe"] = c.label_universe ? json(*c.label_universe) : json(nullptr);
    return j;
}

void apply_train_config(const json& j, TrainConfig& c) {
    if (!j.is_object()) throw ConfigError("train config must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const json& v = it.value();
        try {
            if (k == "min_samples") c.min_samples = v.get<int>();
            else if (k == "learning_rate") c.learning_rate = v.get<double>();
            else if (k == "momentum") c.momentum = v.get<double>();
            else if (k == "epochs") c.epochs = v.get<int>();
            else if (k == "l2") c.l2 = v.get<double>();
            else if (k == "negative_ratio") c.negative_ratio = v.get<double>();
            else if (k == "max_positives") c.max_positives = v.get<std::size_t>();
            else if (k == "class_balance") c.class_balance = v.get<bool>();
            else if (k == "seed") c.seed = v.get<std::uint64_t>();
            else if (k == "n_max") c.n_max = v.get<int>();
            else if (k == "min_df") c.min_df = v.get<int>();
            else if (k == "threshold_grid") c.threshold_grid = v.get<std::vector<double>>();
            else if (k == "default_threshold") c.default_threshold = v.get<double>();
            else if (k == "threads") c.threads = v.get<unsigned>();
            else if (k == "split") c.split = v.get<std::array<double, 3>>();
            else if (k == "label_universe") {
                if (v.is_null()) c.label_universe.reset();
                else c.label_universe = v.get<std::vector<int>>();
            } else {
                throw ConfigError("unknown train config key '" + k + "'");
            }
        } catch (const json::exception& e) {
            throw ConfigError("train config key '" + k + "': " + e.what());
        }
    }
}

AppConfig app_config_from_json(const json& j, const std::string& base_dir) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    AppConfig cfg;
    auto path = [&](const json& v) {
        std::string p = v.get<std::string>();
        if (!p.empty() && !base_dir.empty() && std::filesystem::path(p).is_relative())
            p = (std::filesystem::path(base_dir) / p).lexically_normal().string();
        return p;
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const json& v = it.value();
        try {
            if (k == "snapshot") cfg.snapshot = path(v);
            else if (k == "registry") cfg.registry = path(v);
            else if (k == "feedback_log") cfg.feedback_log = path(v);
            else if (k == "glossary") cfg.glossary = path(v);
            else if (k == "manual_synonyms") cfg.manual_synonyms = path(v);
            else if (k == "curated_map") cfg.curated_map = path(v);
            else if (k == "listen_host") cfg.listen_host = v.get<std::string>();
            else if (k == "listen_port") cfg.listen_port = v.get<int>();
            else if (k == "token") cfg.token = v.get<std::string>();
            else if (k == "review_pool") cfg.review_pool = v.get<std::size_t>();
            else if (k == "train") apply_train_config(v, cfg.train);
            else throw ConfigError("unknown config key '" + k + "'");
        } catch (const json::exception& e) {
            throw ConfigError("config key '" + k + "': " + e.what());
        }
    }
    if (cfg.listen_port < 0 || cfg.listen_port > 65535) throw ConfigError("listen_port out of range");
    return cfg;
}

AppConfig load_app_config(const std::string& path) {
    if (path.empty()) return AppConfig{};
    std::string text;
    try {
        text = read_file(path);
    } catch (const Error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError("config " + path + ": " + e.what());
    }
    return app_config_from_json(j, std::filesystem::path(path).parent_path().string());
}

void apply_env_overrides(AppConfig& cfg, const std::map<std::string, std::string>& env) {
    auto get = [&](const char* k) -> const std::string* {
        auto it = env.find(k);
        return it == env.end() ? nullptr : &it->second;
    };
    if (auto v = get("VULNMAP_SNAPSHOT")) cfg.snapshot = *v;
    if (auto v = get("VULNMAP_REGISTRY")) cfg.registry = *v;
    if (auto v = get("VULNMAP_FEEDBACK_LOG")) cfg.feedback_log = *v;
    if (auto v = get("VULNMAP_TOKEN")) cfg.token = *v;
    if (auto v = get("VULNMAP_LISTEN")) {
        const auto colon = v->rfind(':');
        if (colon == std::string::npos) throw ConfigError("VULNMAP_LISTEN must be host:port");
        cfg.listen_host = v->substr(0, colon);
        try {
            std::size_t used = 0;
            const std::string port = v->substr(colon + 1);
            cfg.listen_port = std::stoi(port, &used);
            if (used != port.size() || cfg.listen_port < 0 || cfg.listen_port > 65535) throw std::out_of_range("port");
        } catch (const std::exception&) {
            throw ConfigError("VULNMAP_LISTEN has an invalid port: " + *v);
        }
    }
}

std::map<std::string, std::string> process_env() {
    std::map<std::string, std::string> env;
    for (char** e = environ; e && *e; ++e) {
        std::string_view kv(*e);
        const auto eq = kv.find('=');
        if (eq == std::string_view::npos) continue;
        if (starts_with(kv, "VULNMAP_")) env.emplace(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
    }
    return env;
}

}  // namespace vulnmap
