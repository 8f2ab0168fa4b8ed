#include "vulnmap/service.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace vulnmap {

using nlohmann::json;

namespace {

HttpResponse json_response(int status, const json& body) {
    HttpResponse r;
    r.status = status;
    r.body = body.dump();
    r.headers["Content-Type"] = "application/json";
    return r;
}

HttpResponse error_response(int status, std::string_view code, const std::string& message) {
    return json_response(status, {{"error", {{"code", code}, {"message", message}}}});
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

// CWE ids in request bodies may be given as "CWE-79", "79" or 79.
std::optional<int> cwe_field(const json& v) {
    if (v.is_number_integer()) {
        const auto n = v.get<long long>();
        if (n > 0 && n < 1000000) return static_cast<int>(n);
        return std::nullopt;
    }
    if (v.is_string()) return parse_cwe_id(v.get<std::string>());
    return std::nullopt;
}

struct QueueKey {
    double score;
    std::string cve;
    int cwe;
    bool operator<(const QueueKey& o) const { return std::tie(score, cve, cwe) < std::tie(o.score, o.cve, o.cwe); }
};

std::string encode_cursor(const QueueItem& i) {
    return hex_encode(format_double(i.score) + "|" + i.cve + "|" + std::to_string(i.cwe));
}

std::optional<QueueKey> decode_cursor(std::string_view c) {
    auto raw = hex_decode(c);
    if (!raw) return std::nullopt;
    auto parts = split(*raw, '|');
    if (parts.size() != 3) return std::nullopt;
    QueueKey k;
    try {
        std::size_t used = 0;
        k.score = std::stod(parts[0], &used);
        if (used != parts[0].size()) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    k.cve = parts[1];
    auto cwe = parse_uint(parts[2]);
    if (!cwe || !is_cve_id(k.cve)) return std::nullopt;
    k.cwe = static_cast<int>(*cwe);
    return k;
}

std::shared_ptr<const KnowledgeSnapshot> load_snapshot_for(const AppConfig& cfg) {
    if (cfg.snapshot.empty()) throw ConfigError("snapshot path is not configured");
    return std::make_shared<const KnowledgeSnapshot>(load_snapshot(cfg.snapshot));
}

}  // namespace

Service::Service(AppConfig config) : Service(config, load_snapshot_for(config)) {}

Service::Service(AppConfig config, std::shared_ptr<const KnowledgeSnapshot> snapshot)
    : config_(std::move(config)),
      snapshot_(std::move(snapshot)),
      synonyms_(load_synonym_sources(config_)),
      registry_(config_.registry),
      feedback_(config_.feedback_log) {
    std::vector<CuratedRow> curated;
    if (!config_.curated_map.empty()) curated = parse_curated_map(read_file(config_.curated_map), &startup_warnings_);
    table_ = build_mapping_table(*snapshot_, curated, &startup_warnings_);
    generation_ = std::make_shared<const Generation>();
    if (auto id = registry_.active_id()) {
        try {
            install(*id);
        } catch (const Error& e) {
            startup_warnings_.push_back(std::string("active model not loaded: ") + e.what());
        }
    }
}

void Service::set_retrain_hook(std::function<void()> hook) { retrain_hook_ = std::move(hook); }

std::shared_ptr<const Service::Generation> Service::generation() const {
    std::lock_guard<std::mutex> lock(generation_mutex_);
    return generation_;
}

std::string Service::active_model_id() const { return generation()->model_id; }

void Service::install(const std::string& model_id) {
    const std::string bytes = registry_.model_bytes(model_id);
    auto model = std::make_shared<const HierarchicalModel>(load_model(bytes));
    if (model->trained_on != snapshot_->snapshot_id)
        throw IncompatibleModelError("model " + model_id + " was trained on snapshot " + model->trained_on +
                                     ", service runs " + snapshot_->snapshot_id);
    auto gen = std::make_shared<const Generation>(Generation{model_id, std::move(model)});
    std::lock_guard<std::mutex> lock(generation_mutex_);
    generation_ = std::move(gen);
}

HttpResponse Service::handle(const HttpRequest& request) {
    const auto gen = generation();
    bool authorised = true;
    if (!config_.token.empty()) {
        auto it = request.headers.find("authorization");
        authorised = it != request.headers.end() && it->second == "Bearer " + config_.token;
    }
    HttpResponse resp;
    if (!authorised) {
        resp = error_response(401, "unauthorized", "missing or invalid bearer token");
    } else {
        try {
            resp = route(request, gen);
        } catch (const NotFoundError& e) {
            resp = error_response(404, "not_found", e.what());
        } catch (const IncompatibleModelError& e) {
            resp = error_response(409, "incompatible_model", e.what());
        } catch (const IntegrityError& e) {
            resp = error_response(500, "integrity", e.what());
        } catch (const ConfigError& e) {
            resp = error_response(500, "config", e.what());
        } catch (const Error& e) {
            resp = error_response(400, "bad_request", e.what());
        } catch (const std::exception& e) {
            resp = error_response(500, "internal", e.what());
        }
    }
    if (!resp.headers.count("X-Model-Id")) resp.headers["X-Model-Id"] = gen->model_id.empty() ? "none" : gen->model_id;
    resp.headers["X-Snapshot-Id"] = snapshot_->snapshot_id;
    return resp;
}

HttpResponse Service::route(const HttpRequest& request, const std::shared_ptr<const Generation>& gen) {
    // "/v1/x/y" becomes {"v1", "x", "y"}.
    std::vector<std::string> seg;
    for (const auto& p : split(request.path, '/'))
        if (!p.empty()) seg.push_back(p);
    const std::string& m = request.method;
    auto wrong_method = [&] { return error_response(405, "method_not_allowed", m + " " + request.path); };
    if (seg.empty() || seg[0] != "v1") return error_response(404, "not_found", "no route " + request.path);
    const std::string head = seg.size() > 1 ? seg[1] : "";
    if (seg.size() == 2 && head == "analyze") return m == "POST" ? analyze(request, gen) : wrong_method();
    if (seg.size() == 2 && head == "feedback") {
        if (m == "POST") return post_feedback(request, gen);
        return m == "GET" ? list_feedback(request) : wrong_method();
    }
    if (seg.size() == 3 && head == "feedback") return m == "GET" ? get_feedback(seg[2]) : wrong_method();
    if (seg.size() == 2 && head == "review-queue") return m == "GET" ? review_queue(request, gen) : wrong_method();
    if (seg.size() == 2 && head == "retrain") return m == "POST" ? retrain() : wrong_method();
    if (seg.size() == 2 && head == "models") return m == "GET" ? list_models() : wrong_method();
    if (seg.size() == 4 && head == "models" && seg[3] == "activate")
        return m == "POST" ? activate(seg[2]) : wrong_method();
    if (seg.size() == 2 && head == "health") return m == "GET" ? health(gen) : wrong_method();
    if (seg.size() == 2 && head == "cwes") return m == "GET" ? search_cwes(request) : wrong_method();
    return error_response(404, "not_found", "no route " + request.path);
}

HttpResponse Service::analyze(const HttpRequest& r, const std::shared_ptr<const Generation>& gen) {
    json body;
    try {
        body = json::parse(r.body);
    } catch (const json::exception&) {
        return error_response(400, "bad_request", "body is not valid JSON");
    }
    if (!body.is_object()) return error_response(400, "bad_request", "body must be a JSON object");
    const bool has_cve = body.contains("cve_id") && !body["cve_id"].is_null();
    const bool has_desc = body.contains("description") && !body["description"].is_null();
    if (has_cve == has_desc) return error_response(400, "bad_request", "exactly one of cve_id or description is required");
    AnalyzeRequest req;
    if (has_cve) {
        if (!body["cve_id"].is_string() || !is_cve_id(body["cve_id"].get<std::string>()))
            return error_response(400, "bad_request", "cve_id must be a CVE identifier");
        req.cve = body["cve_id"].get<std::string>();
    } else {
        if (!body["description"].is_string() || trim(body["description"].get<std::string>()).empty())
            return error_response(400, "bad_request", "description must be a non-empty string");
        req.description = body["description"].get<std::string>();
    }
    ChainView view;
    if (body.contains("include_actors")) {
        if (!body["include_actors"].is_boolean()) return error_response(400, "bad_request", "include_actors must be boolean");
        view.include_actors = body["include_actors"].get<bool>();
    }
    if (body.contains("max_techniques")) {
        if (!body["max_techniques"].is_number_unsigned() || body["max_techniques"].get<std::size_t>() == 0)
            return error_response(400, "bad_request", "max_techniques must be a positive integer");
        view.max_techniques = body["max_techniques"].get<std::size_t>();
    }
    if (!gen->model) return error_response(409, "no_active_model", "no model is active");
    if (req.cve && !snapshot_->find_cve(*req.cve))
        return error_response(404, "not_found", *req.cve + " is not in the snapshot");
    const ExplanationChain chain = analyze_cve(req, gen->model.get(), table_, *snapshot_);
    json out = chain_to_json(chain, view);
    out["model_id"] = gen->model_id;
    out["snapshot_id"] = snapshot_->snapshot_id;
    return json_response(200, out);
}

HttpResponse Service::post_feedback(const HttpRequest& r, const std::shared_ptr<const Generation>& gen) {
    json body;
    try {
        body = json::parse(r.body);
    } catch (const json::exception&) {
        return error_response(400, "bad_request", "body is not valid JSON");
    }
    if (!body.is_object()) return error_response(400, "bad_request", "body must be a JSON object");
    for (const char* k : {"cve_id", "proposed_cwe", "verdict", "reviewer"})
        if (!body.contains(k) || body[k].is_null()) return error_response(400, "bad_request", std::string("missing field ") + k);
    if (!body["cve_id"].is_string() || !body["verdict"].is_string() || !body["reviewer"].is_string())
        return error_response(400, "bad_request", "cve_id, verdict and reviewer must be strings");
    FeedbackRecord rec;
    rec.cve_id = body["cve_id"].get<std::string>();
    rec.reviewer = trim(body["reviewer"].get<std::string>());
    if (rec.reviewer.empty()) return error_response(400, "bad_request", "reviewer must be non-empty");
    auto verdict = verdict_from_string(body["verdict"].get<std::string>());
    if (!verdict) return error_response(400, "bad_request", "verdict must be accept, reject or replace");
    rec.verdict = *verdict;
    auto proposed = cwe_field(body["proposed_cwe"]);
    if (!proposed) return error_response(422, "unresolvable", "proposed_cwe is not a CWE id");
    rec.proposed_cwe = *proposed;
    const bool has_replacement = body.contains("replacement_cwe") && !body["replacement_cwe"].is_null();
    if (rec.verdict == Verdict::replace && !has_replacement)
        return error_response(422, "unresolvable", "replace requires replacement_cwe");
    if (rec.verdict != Verdict::replace && has_replacement)
        return error_response(422, "unresolvable", "replacement_cwe is only allowed with replace");
    if (has_replacement) {
        auto rep = cwe_field(body["replacement_cwe"]);
        if (!rep) return error_response(422, "unresolvable", "replacement_cwe is not a CWE id");
        rec.replacement_cwe = *rep;
    }
    if (!is_cve_id(rec.cve_id) || !snapshot_->find_cve(rec.cve_id))
        return error_response(422, "unresolvable", rec.cve_id + " is not in the snapshot");
    if (!snapshot_->find_cwe(rec.proposed_cwe))
        return error_response(422, "unresolvable", cwe_label(rec.proposed_cwe) + " is not in the snapshot");
    if (rec.replacement_cwe && !snapshot_->find_cwe(*rec.replacement_cwe))
        return error_response(422, "unresolvable", cwe_label(*rec.replacement_cwe) + " is not in the snapshot");
    rec.model_id = gen->model_id;
    rec.timestamp = utc_timestamp();

    std::lock_guard<std::mutex> lock(feedback_mutex_);
    for (const auto& f : feedback_.records())
        if (f.cve_id == rec.cve_id && f.proposed_cwe == rec.proposed_cwe && f.reviewer == rec.reviewer &&
            f.model_id == rec.model_id)
            return error_response(409, "duplicate",
                                  "reviewer already judged this mapping as record " + std::to_string(f.record_id));
    const FeedbackRecord stored = feedback_.append(rec);
    return json_response(201, feedback_to_json(stored));
}

HttpResponse Service::get_feedback(const std::string& id) {
    auto n = parse_uint(id);
    if (!n) return error_response(400, "bad_request", "record id must be a positive integer");
    auto rec = feedback_.find(*n);
    if (!rec) return error_response(404, "not_found", "no feedback record " + id);
    return json_response(200, feedback_to_json(*rec));
}

HttpResponse Service::list_feedback(const HttpRequest& r) {
    std::uint64_t after = 0;
    if (auto it = r.query.find("after"); it != r.query.end()) {
        auto n = parse_uint(it->second);
        if (!n) return error_response(400, "bad_request", "after must be a non-negative integer");
        after = *n;
    }
    json items = json::array();
    for (const auto& f : feedback_.records())
        if (f.record_id > after) items.push_back(feedback_to_json(f));
    return json_response(200, {{"records", std::move(items)}});
}

std::shared_ptr<const std::vector<QueueItem>> Service::queue_for(const Generation& gen) {
    std::lock_guard<std::mutex> lock(queue_mutex_);
    if (queue_ && queue_model_id_ == gen.model_id) return queue_;
    auto items = std::make_shared<std::vector<QueueItem>>();
    std::size_t taken = 0;
    for (const auto& c : snapshot_->cves) {
        if (taken >= config_.review_pool) break;
        const bool mapped = std::any_of(c.assigned_cwes.begin(), c.assigned_cwes.end(), [&](int l) {
            const CweEntry* e = snapshot_->find_cwe(l);
            return e && !e->is_category && e->status == CweStatus::active;
        });
        if (mapped) continue;
        ++taken;
        for (const auto& p : predict_cwes(c.description, *gen.model))
            items->push_back(QueueItem{c.id, p.cwe, p.score, p.fallback, p.path});
    }
    std::sort(items->begin(), items->end(), [](const QueueItem& a, const QueueItem& b) {
        return QueueKey{a.score, a.cve, a.cwe} < QueueKey{b.score, b.cve, b.cwe};
    });
    queue_ = items;
    queue_model_id_ = gen.model_id;
    return queue_;
}

HttpResponse Service::review_queue(const HttpRequest& r, const std::shared_ptr<const Generation>& gen) {
    std::size_t limit = 20;
    if (auto it = r.query.find("limit"); it != r.query.end()) {
        auto n = parse_uint(it->second);
        if (!n || *n == 0 || *n > 500) return error_response(400, "bad_request", "limit must be between 1 and 500");
        limit = static_cast<std::size_t>(*n);
    }
    std::optional<QueueKey> after;
    if (auto it = r.query.find("cursor"); it != r.query.end() && !it->second.empty()) {
        after = decode_cursor(it->second);
        if (!after) return error_response(400, "bad_request", "invalid cursor");
    }
    if (!gen->model) return error_response(409, "no_active_model", "no model is active");
    const auto queue = queue_for(*gen);
    std::set<std::pair<std::string, int>> reviewed;
    for (const auto& f : feedback_.records())
        if (f.model_id == gen->model_id) reviewed.emplace(f.cve_id, f.proposed_cwe);

    json items = json::array();
    const QueueItem* last = nullptr;
    bool more = false;
    for (const auto& i : *queue) {
        if (after && !(*after < QueueKey{i.score, i.cve, i.cwe})) continue;
        if (reviewed.count({i.cve, i.cwe})) continue;
        if (items.size() == limit) {
            more = true;
            break;
        }
        const CveRecord* cve = snapshot_->find_cve(i.cve);
        const CweEntry* cwe = snapshot_->find_cwe(i.cwe);
        json path = json::array();
        for (int n : i.path) path.push_back(cwe_label(n));
        items.push_back({{"cve_id", i.cve},
                         {"description", cve ? cve->description : ""},
                         {"proposed_cwe", cwe_label(i.cwe)},
                         {"cwe_name", cwe ? cwe->name : ""},
                         {"score", i.score},
                         {"fallback", i.fallback},
                         {"path", std::move(path)}});
        last = &i;
    }
    json out = {{"items", std::move(items)}, {"model_id", gen->model_id}};
    out["next_cursor"] = more && last ? json(encode_cursor(*last)) : json(nullptr);
    return json_response(200, out);
}

HttpResponse Service::retrain() {
    std::unique_lock<std::mutex> lock(retrain_mutex_, std::try_to_lock);
    if (!lock.owns_lock()) return error_response(409, "retrain_running", "a retrain is already running");
    if (retrain_hook_) retrain_hook_();
    TrainResult result = train_pipeline(*snapshot_, config_.train, synonyms_, feedback_.records());
    const std::string bytes = save_model(result.model);
    json metrics = report_summary_json(result.test_report);
    metrics["threshold"] = result.model.threshold;
    metrics["labels"] = result.model.label_nodes.size();
    const RegistryEntry e = registry_.stage(bytes, snapshot_->snapshot_id, metrics, utc_timestamp());
    return json_response(201, {{"model_id", e.model_id},
                               {"snapshot_id", e.snapshot_id},
                               {"state", std::string(to_string(e.state))},
                               {"metrics", e.metrics},
                               {"feedback_records", feedback_.records().size()},
                               {"warnings", result.warnings}});
}

HttpResponse Service::activate(const std::string& id) {
    std::lock_guard<std::mutex> lock(activation_mutex_);
    const auto entry = registry_.find(id);
    if (!entry) return error_response(404, "not_found", "no model " + id);
    if (entry->snapshot_id != snapshot_->snapshot_id)
        return error_response(409, "snapshot_mismatch",
                              "model " + id + " was trained on snapshot " + entry->snapshot_id);
    install(id);
    registry_.activate(id);
    HttpResponse r = json_response(200, {{"model_id", id}, {"state", "active"}});
    r.headers["X-Model-Id"] = id;
    return r;
}

HttpResponse Service::list_models() {
    json models = json::array();
    for (const auto& e : registry_.list())
        models.push_back({{"model_id", e.model_id},
                          {"snapshot_id", e.snapshot_id},
                          {"created", e.created},
                          {"metrics", e.metrics},
                          {"state", std::string(to_string(e.state))}});
    const auto active = registry_.active_id();
    return json_response(200, {{"models", std::move(models)}, {"active", active ? json(*active) : json(nullptr)}});
}

HttpResponse Service::health(const std::shared_ptr<const Generation>& gen) {
    json out = {{"status", "ok"}, {"snapshot_id", snapshot_->snapshot_id}, {"warnings", startup_warnings_}};
    out["model_id"] = gen->model ? json(gen->model_id) : json(nullptr);
    return json_response(200, out);
}

HttpResponse Service::search_cwes(const HttpRequest& r) {
    std::string q;
    if (auto it = r.query.find("q"); it != r.query.end()) q = to_lower(trim(it->second));
    std::size_t limit = 20;
    if (auto it = r.query.find("limit"); it != r.query.end()) {
        auto n = parse_uint(it->second);
        if (!n || *n == 0 || *n > 500) return error_response(400, "bad_request", "limit must be between 1 and 500");
        limit = static_cast<std::size_t>(*n);
    }
    json items = json::array();
    for (const auto& c : snapshot_->cwes) {
        if (items.size() == limit) break;
        if (c.is_category || c.status != CweStatus::active) continue;
        const std::string label = cwe_label(c.id);
        if (!q.empty() && to_lower(label).find(q) == std::string::npos && to_lower(c.name).find(q) == std::string::npos)
            continue;
        items.push_back({{"cwe", label}, {"name", c.name}});
    }
    return json_response(200, {{"items", std::move(items)}});
}

}  // namespace vulnmap
