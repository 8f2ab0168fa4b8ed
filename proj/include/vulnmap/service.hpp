#pragma once

#include "vulnmap/attackmap.hpp"
#include "vulnmap/config.hpp"
#include "vulnmap/datafeeds.hpp"
#include "vulnmap/feedback.hpp"
#include "vulnmap/hierclf.hpp"
#include "vulnmap/pipeline.hpp"
#include "vulnmap/registry.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace vulnmap {

struct HttpRequest {
    std::string method;
    std::string path;
    std::map<std::string, std::string> query;
    std::map<std::string, std::string> headers;  // lower-case names
    std::string body;
};

struct HttpResponse {
    int status = 200;
    std::string body;
    std::map<std::string, std::string> headers;
};

/// A pending model-predicted mapping awaiting review.
struct QueueItem {
    std::string cve;
    int cwe = 0;
    double score = 0;
    bool fallback = false;
    std::vector<int> path;
};

/// The /v1 API.  Transport-independent: handle() maps a request to a
/// response and is safe to call from many threads.
class Service {
public:
    /// Loads the snapshot named in the config.
    explicit Service(AppConfig config);
    Service(AppConfig config, std::shared_ptr<const KnowledgeSnapshot> snapshot);

    HttpResponse handle(const HttpRequest& request);

    /// Called by /retrain after it has taken the exclusive retrain lock.
    void set_retrain_hook(std::function<void()> hook);

    std::string active_model_id() const;
    const KnowledgeSnapshot& snapshot() const { return *snapshot_; }
    const std::vector<std::string>& startup_warnings() const { return startup_warnings_; }

private:
    struct Generation {
        std::string model_id;
        std::shared_ptr<const HierarchicalModel> model;
    };
    std::shared_ptr<const Generation> generation() const;
    void install(const std::string& model_id);

    HttpResponse route(const HttpRequest& r, const std::shared_ptr<const Generation>& gen);
    HttpResponse analyze(const HttpRequest& r, const std::shared_ptr<const Generation>& gen);
    HttpResponse post_feedback(const HttpRequest& r, const std::shared_ptr<const Generation>& gen);
    HttpResponse get_feedback(const std::string& id);
    HttpResponse list_feedback(const HttpRequest& r);
    HttpResponse review_queue(const HttpRequest& r, const std::shared_ptr<const Generation>& gen);
    HttpResponse retrain();
    HttpResponse activate(const std::string& id);
    HttpResponse list_models();
    HttpResponse health(const std::shared_ptr<const Generation>& gen);
    HttpResponse search_cwes(const HttpRequest& r);

    std::shared_ptr<const std::vector<QueueItem>> queue_for(const Generation& gen);

    AppConfig config_;
    std::shared_ptr<const KnowledgeSnapshot> snapshot_;
    MappingTable table_;
    SynonymSources synonyms_;
    ModelRegistry registry_;
    FeedbackStore feedback_;
    std::vector<std::string> startup_warnings_;

    mutable std::mutex generation_mutex_;
    std::shared_ptr<const Generation> generation_;
    std::mutex activation_mutex_;
    std::mutex feedback_mutex_;
    std::mutex retrain_mutex_;
    std::function<void()> retrain_hook_;

    std::mutex queue_mutex_;
    std::string queue_model_id_;
    std::shared_ptr<const std::vector<QueueItem>> queue_;
};

}  // namespace vulnmap
