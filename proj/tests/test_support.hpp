#pragma once

#include "vulnmap/datafeeds.hpp"
#include "vulnmap/util.hpp"

#include <cstdlib>
#include <filesystem>
#include <memory>
#include <random>
#include <string>

namespace vulnmap::testing {

inline std::string fixture_dir() { return VULNMAP_FIXTURE_DIR; }
inline std::string fixture_path(const std::string& name) { return fixture_dir() + "/" + name; }

/// The pinned fixture, ingested once per test binary.
inline const KnowledgeSnapshot& fixture_snapshot() {
    static const auto snap = std::make_shared<const KnowledgeSnapshot>(ingest_sources(discover_sources(fixture_dir())));
    return *snap;
}

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        std::string pattern = (std::filesystem::temp_directory_path() / "vulnmap-test-XXXXXX").string();
        if (!mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
        path_ = pattern;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::string& path() const { return path_; }
    std::string file(const std::string& name) const { return path_ + "/" + name; }

private:
    std::string path_;
};

}  // namespace vulnmap::testing
