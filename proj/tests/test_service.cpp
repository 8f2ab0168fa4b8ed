#include "test_support.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/http_server.hpp"
#include "vulnmap/service.hpp"
#include "vulnmap/util.hpp"

#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <thread>

using namespace vulnmap;
using nlohmann::json;

namespace {

const std::vector<std::string> kLog4j = {"CVE-2021-44228", "CVE-2021-44832", "CVE-2021-45046", "CVE-2021-4104",
                                         "CVE-2021-44530", "CVE-2021-45105", "CVE-2022-21704", "CVE-2022-23302",
                                         "CVE-2022-23305", "CVE-2022-23307"};

// The full catalogs with a few hundred CVEs: small enough to retrain in
// seconds.  CVEs named by techniques stay so procedure edges survive; eight
// unlabelled CVEs feed the review queue.
std::shared_ptr<const KnowledgeSnapshot> mini_snapshot() {
    static const auto snap = [] {
        const auto& fx = testing::fixture_snapshot();
        const std::set<int> keep = {79, 89, 22, 787};
        std::map<int, int> taken;
        std::vector<CveRecord> cves;
        std::size_t unlabelled = 0;
        std::set<std::string> referenced(kLog4j.begin(), kLog4j.end());
        for (const auto& t : fx.techniques) referenced.insert(t.referenced_cves.begin(), t.referenced_cves.end());
        for (const auto& c : fx.cves) {
            if (referenced.count(c.id)) {
                cves.push_back(c);
            } else if (c.assigned_cwes.size() == 1 && keep.count(c.assigned_cwes[0]) && taken[c.assigned_cwes[0]] < 120) {
                ++taken[c.assigned_cwes[0]];
                cves.push_back(c);
            } else if (c.assigned_cwes.empty() && unlabelled < 8) {
                ++unlabelled;
                cves.push_back(c);
            }
        }
        return std::make_shared<const KnowledgeSnapshot>(build_snapshot(cves, fx.cwes, fx.capecs, fx.techniques, fx.actors));
    }();
    return snap;
}

TrainConfig small_train_config() {
    TrainConfig c;
    c.min_samples = 40;
    c.epochs = 60;
    c.n_max = 1;
    c.min_df = 2;
    c.threads = 1;
    return c;
}

const std::string& base_model_bytes() {
    static const std::string bytes = save_model(train_pipeline(*mini_snapshot(), small_train_config(), {}).model);
    return bytes;
}

// A second generation: the same weights under a different threshold.
const std::string& other_model_bytes() {
    static const std::string bytes = [] {
        HierarchicalModel m = load_model(base_model_bytes());
        m.threshold = m.threshold == 0.45 ? 0.55 : 0.45;
        return save_model(m);
    }();
    return bytes;
}

struct Harness {
    testing::TempDir dir;
    AppConfig config;
    std::unique_ptr<Service> service;
    std::string base_id, other_id;

    explicit Harness(bool activate = true, std::string token = {}) {
        config.registry = dir.file("registry");
        config.feedback_log = dir.file("feedback.ndjson");
        config.curated_map = testing::fixture_path("cwe_attack_curated.tsv");
        config.review_pool = 8;
        config.token = std::move(token);
        config.train = small_train_config();
        ModelRegistry reg(config.registry);
        const std::string snap_id = mini_snapshot()->snapshot_id;
        base_id = reg.stage(base_model_bytes(), snap_id, json::object(), "2022-06-15T00:00:00Z").model_id;
        other_id = reg.stage(other_model_bytes(), snap_id, json::object(), "2022-06-15T00:00:00Z").model_id;
        if (activate) reg.activate(base_id);
        service = std::make_unique<Service>(config, mini_snapshot());
    }

    HttpResponse call(const std::string& method, const std::string& path, const std::string& body = {},
                      std::map<std::string, std::string> query = {}, std::map<std::string, std::string> headers = {}) {
        HttpRequest r;
        r.method = method;
        r.path = path;
        r.body = body;
        r.query = std::move(query);
        r.headers = std::move(headers);
        return service->handle(r);
    }
    json call_json(const std::string& method, const std::string& path, const std::string& body = {},
                   std::map<std::string, std::string> query = {}) {
        return json::parse(call(method, path, body, std::move(query)).body);
    }
};

std::string feedback_body(const std::string& cve, const std::string& cwe, const std::string& verdict,
                          const std::string& reviewer, std::optional<std::string> replacement = std::nullopt) {
    json j = {{"cve_id", cve}, {"proposed_cwe", cwe}, {"verdict", verdict}, {"reviewer", reviewer}};
    if (replacement) j["replacement_cwe"] = *replacement;
    return j.dump();
}

std::string first_labelled(int cwe) {
    for (const auto& c : mini_snapshot()->cves)
        if (c.assigned_cwes == std::vector<int>{cwe}) return c.id;
    return {};
}

std::vector<json> walk_queue(Harness& h, std::size_t limit) {
    std::vector<json> out;
    std::string cursor;
    for (int guard = 0; guard < 1000; ++guard) {
        std::map<std::string, std::string> q = {{"limit", std::to_string(limit)}};
        if (!cursor.empty()) q["cursor"] = cursor;
        const json page = h.call_json("GET", "/v1/review-queue", "", q);
        for (const auto& i : page["items"]) out.push_back(i);
        if (page["next_cursor"].is_null()) break;
        CHECK(page["items"].size() == limit);
        cursor = page["next_cursor"].get<std::string>();
    }
    return out;
}

std::uintmax_t file_size_or_zero(const std::string& p) {
    std::error_code ec;
    const auto n = std::filesystem::file_size(p, ec);
    return ec ? 0 : n;
}

}  // namespace

TEST_CASE("health reports the snapshot and model, every response carries both headers") {
    Harness h;
    const HttpResponse r = h.call("GET", "/v1/health");
    CHECK(r.status == 200);
    const json j = json::parse(r.body);
    CHECK(j["model_id"] == h.base_id);
    CHECK(j["snapshot_id"] == mini_snapshot()->snapshot_id);
    CHECK(r.headers.at("X-Model-Id") == h.base_id);
    CHECK(r.headers.at("X-Snapshot-Id") == mini_snapshot()->snapshot_id);
    const HttpResponse missing = h.call("GET", "/v1/nothing-here");
    CHECK(missing.status == 404);
    CHECK(missing.headers.at("X-Snapshot-Id") == mini_snapshot()->snapshot_id);
    CHECK(h.call("GET", "/v2/health").status == 404);
    CHECK(h.call("DELETE", "/v1/health").status == 405);
    CHECK(h.call("GET", "/v1/analyze").status == 405);
    CHECK(h.call("POST", "/v1/models").status == 405);
}

TEST_CASE("a configured token is required as a bearer header") {
    Harness h(true, "s3cret");
    CHECK(h.call("GET", "/v1/health").status == 401);
    CHECK(h.call("GET", "/v1/health", "", {}, {{"authorization", "Bearer wrong"}}).status == 401);
    CHECK(h.call("GET", "/v1/health", "", {}, {{"authorization", "Bearer s3cret"}}).status == 200);
}

TEST_CASE("analyze reproduces the log4j chain counts") {
    Harness h;
    const HttpResponse r = h.call("POST", "/v1/analyze", R"({"cve_id":"CVE-2021-44228"})");
    REQUIRE(r.status == 200);
    const json j = json::parse(r.body);
    CHECK(j["counts"] == json({{"cwes", 3}, {"techniques", 15}, {"actors", 50}}));
    CHECK(j["model_id"] == h.base_id);
    for (const auto& t : j["techniques"])
        for (const auto& e : t["edges"]) {
            CHECK(!e["source"].get<std::string>().empty());
            CHECK(!e["evidence"].get<std::string>().empty());
        }
    const json trimmed = h.call_json("POST", "/v1/analyze", R"({"cve_id":"CVE-2021-44228","max_techniques":2,"include_actors":false})");
    CHECK(trimmed["techniques"].size() == 2);
    CHECK(!trimmed.contains("actors"));
    CHECK(trimmed["counts"]["techniques"] == 15);
}

TEST_CASE("analyze error codes") {
    Harness h;
    CHECK(h.call("POST", "/v1/analyze", R"({"description":""})").status == 400);
    CHECK(h.call("POST", "/v1/analyze", R"({"cve_id":"CVE-0000-0000"})").status == 404);
    CHECK(h.call("POST", "/v1/analyze", "not json").status == 400);
    CHECK(h.call("POST", "/v1/analyze", "[]").status == 400);
    CHECK(h.call("POST", "/v1/analyze", R"({})").status == 400);
    CHECK(h.call("POST", "/v1/analyze", R"({"cve_id":"CVE-2021-44228","description":"x"})").status == 400);
    CHECK(h.call("POST", "/v1/analyze", R"({"cve_id":"log4shell"})").status == 400);
    CHECK(h.call("POST", "/v1/analyze", R"({"cve_id":"CVE-2021-44228","max_techniques":0})").status == 400);
    CHECK(h.call("POST", "/v1/analyze", R"({"cve_id":"CVE-2021-44228","include_actors":"yes"})").status == 400);
    const HttpResponse ok = h.call("POST", "/v1/analyze", R"({"description":"SQL injection in the login form"})");
    CHECK(ok.status == 200);
    const json err = json::parse(h.call("POST", "/v1/analyze", R"({"description":""})").body);
    CHECK(err["error"]["code"] == "bad_request");
    CHECK(!err["error"]["message"].get<std::string>().empty());
}

TEST_CASE("analyze without an active model is a conflict") {
    Harness h(false);
    CHECK(h.call("POST", "/v1/analyze", R"({"cve_id":"CVE-2021-44228"})").status == 409);
    CHECK(h.call("GET", "/v1/review-queue").status == 409);
    CHECK(h.call("GET", "/v1/health").headers.at("X-Model-Id") == "none");
}

TEST_CASE("analyze is deterministic and read-only") {
    Harness h;
    h.call("POST", "/v1/feedback", feedback_body(first_labelled(79), "CWE-79", "accept", "r1"));
    const auto log_before = read_file(h.config.feedback_log);
    const auto models_before = h.call("GET", "/v1/models").body;
    const auto queue_before = h.call("GET", "/v1/review-queue", "", {{"limit", "500"}}).body;
    std::string first;
    for (const char* body : {R"({"cve_id":"CVE-2021-44228"})", R"({"description":"heap overflow in parser"})"}) {
        const std::string a = h.call("POST", "/v1/analyze", body).body;
        for (int i = 0; i < 5; ++i) CHECK(h.call("POST", "/v1/analyze", body).body == a);
    }
    CHECK(read_file(h.config.feedback_log) == log_before);
    CHECK(h.call("GET", "/v1/models").body == models_before);
    CHECK(h.call("GET", "/v1/review-queue", "", {{"limit", "500"}}).body == queue_before);
}

TEST_CASE("feedback is stored with increasing ids and read back unchanged") {
    Harness h;
    const std::string cve = first_labelled(79);
    const HttpResponse a = h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-79", "accept", "alice"));
    REQUIRE(a.status == 201);
    const json ja = json::parse(a.body);
    CHECK(ja["record_id"] == 1);
    CHECK(ja["model_id"] == h.base_id);
    const HttpResponse b = h.call("POST", "/v1/feedback", feedback_body(cve, "89", "replace", "alice", "CWE-79"));
    REQUIRE(b.status == 201);
    CHECK(json::parse(b.body)["record_id"] == 2);
    CHECK(json::parse(b.body)["replacement_cwe"] == "CWE-79");
    CHECK(h.call_json("GET", "/v1/feedback/1") == ja);
    CHECK(h.call("GET", "/v1/feedback/3").status == 404);
    CHECK(h.call("GET", "/v1/feedback/abc").status == 400);
    CHECK(h.call_json("GET", "/v1/feedback")["records"].size() == 2);
    CHECK(h.call_json("GET", "/v1/feedback", "", {{"after", "1"}})["records"].size() == 1);
    const auto records = audit_feedback_log(h.config.feedback_log);
    REQUIRE(records.size() == 2);
    CHECK(feedback_to_json(records[0]) == ja);
}

TEST_CASE("feedback validation and duplicate detection") {
    Harness h;
    const std::string cve = first_labelled(89);
    CHECK(h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-89", "replace", "bob")).status == 422);
    CHECK(h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-89", "accept", "bob", "CWE-79")).status == 422);
    CHECK(h.call("POST", "/v1/feedback", feedback_body("CVE-1999-99999", "CWE-89", "accept", "bob")).status == 422);
    CHECK(h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-999999", "accept", "bob")).status == 422);
    CHECK(h.call("POST", "/v1/feedback", feedback_body(cve, "banana", "accept", "bob")).status == 422);
    CHECK(h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-89", "maybe", "bob")).status == 400);
    CHECK(h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-89", "accept", " ")).status == 400);
    CHECK(h.call("POST", "/v1/feedback", R"({"cve_id":"CVE-2021-44228"})").status == 400);
    CHECK(file_size_or_zero(h.config.feedback_log) == 0);

    CHECK(h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-89", "accept", "bob")).status == 201);
    const auto size = file_size_or_zero(h.config.feedback_log);
    const HttpResponse dup = h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-89", "reject", "bob"));
    CHECK(dup.status == 409);
    CHECK(file_size_or_zero(h.config.feedback_log) == size);
    CHECK(h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-89", "accept", "carol")).status == 201);
    // A new generation accepts the same verdict again.
    CHECK(h.call("POST", "/v1/models/" + h.other_id + "/activate").status == 200);
    CHECK(h.call("POST", "/v1/feedback", feedback_body(cve, "CWE-89", "accept", "bob")).status == 201);
}

TEST_CASE("feedback log is append-only and tampering is detected") {
    Harness h;
    std::uintmax_t last = 0;
    int stored = 0;
    for (const auto& c : mini_snapshot()->cves) {
        if (c.assigned_cwes.empty() || stored == 6) continue;
        const auto r = h.call("POST", "/v1/feedback", feedback_body(c.id, cwe_label(c.assigned_cwes[0]), "accept", "r"));
        REQUIRE(r.status == 201);
        ++stored;
        const auto now = file_size_or_zero(h.config.feedback_log);
        CHECK(now > last);
        last = now;
    }
    const auto before = read_file(h.config.feedback_log);
    const auto records = audit_feedback_log(h.config.feedback_log);
    CHECK(records.size() == 6);
    for (std::size_t i = 0; i < records.size(); ++i) CHECK(records[i].record_id == i + 1);

    // A restarted service sees the same records and continues the sequence.
    h.service = std::make_unique<Service>(h.config, mini_snapshot());
    CHECK(read_file(h.config.feedback_log) == before);
    const std::string cve = first_labelled(22);
    CHECK(h.call_json("POST", "/v1/feedback", feedback_body(cve, "CWE-22", "reject", "z"))["record_id"] == 7);
    CHECK(read_file(h.config.feedback_log).substr(0, before.size()) == before);

    std::string text = read_file(h.config.feedback_log);
    const auto pos = text.find("\"reject\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "\"accept\"");
    std::ofstream(h.config.feedback_log, std::ios::binary | std::ios::trunc) << text;
    CHECK_THROWS_AS(audit_feedback_log(h.config.feedback_log), IntegrityError);
}

TEST_CASE("review queue pages lowest confidence first with a stable cursor") {
    Harness h;
    const auto all = walk_queue(h, 500);
    REQUIRE(all.size() >= 3);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1]["score"].get<double>() <= all[i]["score"].get<double>());
    for (const auto& i : all) {
        const CveRecord* c = mini_snapshot()->find_cve(i["cve_id"].get<std::string>());
        REQUIRE(c != nullptr);
        CHECK(c->assigned_cwes.empty());
    }
    for (std::size_t limit : {1u, 2u, 3u, 7u}) {
        const auto paged = walk_queue(h, limit);
        CHECK(paged == all);
    }
    const json first = h.call_json("GET", "/v1/review-queue", "", {{"limit", "2"}});
    CHECK(first["items"].size() == 2);
    CHECK(first["next_cursor"].is_string());
    CHECK(h.call("GET", "/v1/review-queue", "", {{"limit", "0"}}).status == 400);
    CHECK(h.call("GET", "/v1/review-queue", "", {{"limit", "x"}}).status == 400);
    CHECK(h.call("GET", "/v1/review-queue", "", {{"cursor", "zz"}}).status == 400);
}

TEST_CASE("reviewed items leave the queue until it is empty") {
    Harness h;
    auto items = walk_queue(h, 500);
    const std::size_t total = items.size();
    REQUIRE(total > 0);
    std::size_t done = 0;
    for (const auto& i : items) {
        const auto r = h.call("POST", "/v1/feedback",
                              feedback_body(i["cve_id"], i["proposed_cwe"], done % 2 ? "reject" : "accept", "sme"));
        REQUIRE(r.status == 201);
        ++done;
        CHECK(walk_queue(h, 500).size() == total - done);
    }
    const json empty = h.call_json("GET", "/v1/review-queue");
    CHECK(empty["items"].empty());
    CHECK(empty["next_cursor"].is_null());
    // Another generation has its own review state.
    CHECK(h.call("POST", "/v1/models/" + h.other_id + "/activate").status == 200);
    CHECK(!h.call_json("GET", "/v1/review-queue")["items"].empty());
}

TEST_CASE("retrain without feedback stages the byte-identical model") {
    Harness h;
    const HttpResponse r = h.call("POST", "/v1/retrain");
    REQUIRE(r.status == 201);
    const json j = json::parse(r.body);
    CHECK(j["model_id"] == h.base_id);
    // Same bytes, same registry entry: it stays the active one.
    CHECK(j["state"] == "active");
    CHECK(h.service->active_model_id() == h.base_id);
}

TEST_CASE("retrain applies a rejection and stages without activating") {
    Harness h;
    const HierarchicalModel base = load_model(base_model_bytes());
    // A single-label training document whose label has a classifier.
    std::string cve;
    int cwe = 0;
    for (int label : base.label_nodes) {
        for (const auto& id : base.hierarchy.training_index.at(label)) {
            const CveRecord* c = mini_snapshot()->find_cve(id);
            if (c && c->assigned_cwes == std::vector<int>{label}) {
                cve = id;
                cwe = label;
                break;
            }
        }
        if (!cve.empty()) break;
    }
    REQUIRE(!cve.empty());
    REQUIRE(h.call("POST", "/v1/feedback", feedback_body(cve, cwe_label(cwe), "reject", "sme")).status == 201);
    const HttpResponse r = h.call("POST", "/v1/retrain");
    REQUIRE(r.status == 201);
    const json j = json::parse(r.body);
    const std::string id = j["model_id"];
    CHECK(id != h.base_id);
    CHECK(j["state"] == "staged");
    CHECK(j["feedback_records"] == 1);
    for (const char* k : {"micro_f", "macro_f", "threshold", "labels", "coverage"}) CHECK(j["metrics"].contains(k));
    CHECK(h.service->active_model_id() == h.base_id);
    ModelRegistry reg(h.config.registry);
    const HierarchicalModel next = load_model(reg.model_bytes(id));
    const auto& idx = next.hierarchy.training_index.at(cwe);
    CHECK(!std::binary_search(idx.begin(), idx.end(), cve));
    const json models = h.call_json("GET", "/v1/models");
    CHECK(models["active"] == h.base_id);
    CHECK(models["models"].size() == 3);
}

TEST_CASE("a second retrain while one runs is a conflict") {
    Harness h;
    std::mutex m;
    std::condition_variable cv;
    bool entered = false, release = false;
    h.service->set_retrain_hook([&] {
        std::unique_lock<std::mutex> lock(m);
        entered = true;
        cv.notify_all();
        cv.wait(lock, [&] { return release; });
    });
    auto first = std::async(std::launch::async, [&] { return h.call("POST", "/v1/retrain").status; });
    {
        std::unique_lock<std::mutex> lock(m);
        cv.wait(lock, [&] { return entered; });
    }
    const HttpResponse second = h.call("POST", "/v1/retrain");
    CHECK(second.status == 409);
    CHECK(json::parse(second.body)["error"]["code"] == "retrain_running");
    {
        std::lock_guard<std::mutex> lock(m);
        release = true;
    }
    cv.notify_all();
    CHECK(first.get() == 201);
}

TEST_CASE("activation errors") {
    Harness h;
    CHECK(h.call("POST", "/v1/models/ffffffffffffffff/activate").status == 404);
    ModelRegistry reg(h.config.registry);
    HierarchicalModel m = load_model(base_model_bytes());
    m.trained_on = "another-snapshot";
    const auto foreign = reg.stage(save_model(m), "another-snapshot", json::object(), "2022-06-15T00:00:00Z");
    CHECK(h.call("POST", "/v1/models/" + foreign.model_id + "/activate").status == 409);
    CHECK(h.service->active_model_id() == h.base_id);
    const HttpResponse ok = h.call("POST", "/v1/models/" + h.other_id + "/activate");
    CHECK(ok.status == 200);
    CHECK(ok.headers.at("X-Model-Id") == h.other_id);
    CHECK(h.service->active_model_id() == h.other_id);
}

TEST_CASE("100 concurrent activations leave exactly one active model") {
    Harness h;
    std::vector<std::future<int>> calls;
    std::atomic<int> go{0};
    for (int i = 0; i < 100; ++i)
        calls.push_back(std::async(std::launch::async, [&, i] {
            while (!go.load()) std::this_thread::yield();
            return h.call("POST", "/v1/models/" + (i % 2 ? h.base_id : h.other_id) + "/activate").status;
        }));
    go = 1;
    for (auto& c : calls) CHECK(c.get() == 200);
    const json models = h.call_json("GET", "/v1/models");
    int active = 0;
    for (const auto& m : models["models"]) active += m["state"] == "active";
    CHECK(active == 1);
    CHECK(models["active"] == h.service->active_model_id());
    ModelRegistry reg(h.config.registry);
    CHECK(reg.active_id() == h.service->active_model_id());
    // A restart reads back the same single active model.
    Service restarted(h.config, mini_snapshot());
    CHECK(restarted.active_model_id() == h.service->active_model_id());
}

TEST_CASE("analyze responses switch generations atomically") {
    Harness h;
    const std::string body = R"({"description":"improper neutralization of sql query parameters"})";
    std::map<std::string, std::string> expected;
    expected[h.base_id] = h.call("POST", "/v1/analyze", body).body;
    h.call("POST", "/v1/models/" + h.other_id + "/activate");
    expected[h.other_id] = h.call("POST", "/v1/analyze", body).body;
    REQUIRE(expected[h.base_id] != expected[h.other_id]);

    std::atomic<bool> stop{false};
    std::atomic<int> mismatches{0}, seen{0};
    std::vector<std::thread> readers;
    for (int t = 0; t < 4; ++t)
        readers.emplace_back([&] {
            while (!stop) {
                const HttpResponse r = h.call("POST", "/v1/analyze", body);
                const auto it = expected.find(r.headers.at("X-Model-Id"));
                if (r.status != 200 || it == expected.end() || it->second != r.body) ++mismatches;
                ++seen;
            }
        });
    for (int i = 0; i < 60; ++i) h.call("POST", "/v1/models/" + (i % 2 ? h.other_id : h.base_id) + "/activate");
    stop = true;
    for (auto& t : readers) t.join();
    CHECK(seen > 0);
    CHECK(mismatches == 0);
}

TEST_CASE("weakness search") {
    Harness h;
    const json j = h.call_json("GET", "/v1/cwes", "", {{"q", "CWE-79"}});
    REQUIRE(!j["items"].empty());
    CHECK(j["items"][0]["cwe"].get<std::string>().rfind("CWE-79", 0) == 0);
    CHECK(h.call_json("GET", "/v1/cwes", "", {{"limit", "3"}})["items"].size() == 3);
    CHECK(h.call("GET", "/v1/cwes", "", {{"limit", "-1"}}).status == 400);
}

TEST_CASE("the HTTP transport serves the same contract") {
    Harness h;
    HttpServer server(*h.service);
    const int port = server.bind("127.0.0.1", 0);
    std::thread loop([&] { server.listen(); });
    httplib::Client client("127.0.0.1", port);
    for (int i = 0; i < 50 && !client.Get("/v1/health"); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(20));
    const auto health = client.Get("/v1/health");
    REQUIRE(health);
    CHECK(health->status == 200);
    CHECK(health->get_header_value("X-Model-Id") == h.base_id);
    const auto analyze = client.Post("/v1/analyze", R"({"cve_id":"CVE-2022-23305"})", "application/json");
    REQUIRE(analyze);
    CHECK(analyze->status == 200);
    CHECK(json::parse(analyze->body)["counts"] == json({{"cwes", 1}, {"techniques", 4}, {"actors", 14}}));
    const auto missing = client.Post("/v1/analyze", R"({"cve_id":"CVE-0000-0000"})", "application/json");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    const auto page = client.Get("/v1/review-queue?limit=1");
    REQUIRE(page);
    CHECK(json::parse(page->body)["items"].size() == 1);
    server.stop();
    loop.join();
}
