#include "vulnmap/cli.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/http_server.hpp"
#include "vulnmap/pipeline.hpp"
#include "vulnmap/registry.hpp"
#include "vulnmap/service.hpp"
#include "vulnmap/util.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

namespace vulnmap {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Globals {
    std::string config;
    std::string snapshot;
    std::string model;
    std::string registry;
    std::string curated;
    std::string format = "human";
    std::uint64_t seed = 0;
    double threshold = 0;
    int min_samples = 0;
    std::vector<int> cutoffs;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* threshold_opt = nullptr;
    CLI::Option* min_samples_opt = nullptr;
};

std::string fixed(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Everything a command prints goes through here.  Machine format is one JSON
// object per line; the header line is the only one carrying a timestamp.
class Printer {
public:
    Printer(std::ostream& os, bool machine) : os_(os), machine_(machine) {}
    bool machine() const { return machine_; }

    void header(const std::string& command) {
        if (machine_)
            os_ << json{{"type", "header"}, {"command", command}, {"timestamp", utc_timestamp()}}.dump() << '\n';
        else
            os_ << "# vulnmap " << command << ' ' << utc_timestamp() << '\n';
    }
    void record(const std::string& type, json body) {
        json line = {{"type", type}};
        for (auto it = body.begin(); it != body.end(); ++it) line[it.key()] = it.value();
        os_ << line.dump() << '\n';
    }
    std::ostream& text() { return os_; }

private:
    std::ostream& os_;
    bool machine_;
};

AppConfig resolve_config(const Globals& g) {
    AppConfig cfg = load_app_config(g.config);
    apply_env_overrides(cfg, process_env());
    if (!g.snapshot.empty()) cfg.snapshot = g.snapshot;
    if (!g.registry.empty()) cfg.registry = g.registry;
    if (!g.curated.empty()) cfg.curated_map = g.curated;
    if (g.seed_opt && g.seed_opt->count()) cfg.train.seed = g.seed;
    if (g.min_samples_opt && g.min_samples_opt->count()) {
        if (g.min_samples < 1) throw ConfigError("--min-samples must be at least 1");
        cfg.train.min_samples = g.min_samples;
    }
    return cfg;
}

KnowledgeSnapshot require_snapshot(const AppConfig& cfg) {
    if (cfg.snapshot.empty()) throw ConfigError("no snapshot given (use --snapshot or the config file)");
    return load_snapshot(cfg.snapshot);
}

// --model wins; otherwise the registry's active model, if any.
std::optional<HierarchicalModel> optional_model(const Globals& g, const AppConfig& cfg, const KnowledgeSnapshot& snap,
                                                std::ostream& err) {
    std::string bytes;
    if (!g.model.empty()) {
        bytes = read_file(g.model);
    } else if (!cfg.registry.empty()) {
        ModelRegistry reg(cfg.registry);
        if (auto id = reg.active_id()) bytes = reg.model_bytes(*id);
    }
    if (bytes.empty()) return std::nullopt;
    HierarchicalModel m = load_model(bytes);
    if (m.trained_on != snap.snapshot_id)
        err << "warning: model was trained on snapshot " << m.trained_on << " but the snapshot in use is "
            << snap.snapshot_id << '\n';
    if (g.threshold_opt && g.threshold_opt->count()) {
        if (!(g.threshold > 0 && g.threshold < 1)) throw InputError("--threshold must lie strictly between 0 and 1");
        m.threshold = g.threshold;
    }
    return m;
}

HierarchicalModel require_model(const Globals& g, const AppConfig& cfg, const KnowledgeSnapshot& snap,
                                std::ostream& err) {
    auto m = optional_model(g, cfg, snap, err);
    if (!m) throw ConfigError("no model given (use --model or a registry with an active model)");
    return std::move(*m);
}

MappingTable mapping_table(const AppConfig& cfg, const KnowledgeSnapshot& snap, std::ostream& err) {
    std::vector<std::string> warnings;
    std::vector<CuratedRow> curated;
    if (!cfg.curated_map.empty()) curated = parse_curated_map(read_file(cfg.curated_map), &warnings);
    MappingTable t = build_mapping_table(snap, curated, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    return t;
}

std::string cwe_list(const std::vector<CweLink>& links) {
    std::vector<std::string> parts;
    for (const auto& l : links) parts.push_back(cwe_label(l.cwe));
    return parts.empty() ? "-" : join(parts, ", ");
}

// ---- ingest ----------------------------------------------------------------

struct IngestArgs {
    std::string sources;
    std::vector<std::string> nvd;
    std::string cwe, capec, attack, out;
};

int cmd_ingest(const IngestArgs& a, Printer& p, std::ostream& err) {
    SourcePaths paths;
    if (!a.sources.empty()) {
        if (!fs::is_directory(a.sources)) throw InputError("sources directory not found: " + a.sources);
        paths = discover_sources(a.sources);
    }
    if (!a.nvd.empty()) paths.nvd_feeds = a.nvd;
    if (!a.cwe.empty()) paths.cwe_xml = a.cwe;
    if (!a.capec.empty()) paths.capec_xml = a.capec;
    if (!a.attack.empty()) paths.attack_json = a.attack;
    if (paths.nvd_feeds.empty()) throw InputError("NVD source: no feed files given");

    std::vector<std::string> warnings;
    const KnowledgeSnapshot snap = ingest_sources(paths, &warnings);
    save_snapshot(snap, a.out);

    p.header("ingest");
    const json summary = {{"snapshot_id", snap.snapshot_id}, {"out", a.out},
                          {"cves", snap.cves.size()},        {"cwes", snap.cwes.size()},
                          {"capecs", snap.capecs.size()},    {"techniques", snap.techniques.size()},
                          {"actors", snap.actors.size()},    {"unresolved", snap.unresolved.size()},
                          {"warnings", warnings.size()}};
    if (p.machine()) {
        p.record("snapshot", summary);
        for (const auto& s : snap.source_manifest)
            p.record("source", {{"name", s.name}, {"version", s.version}, {"checksum", s.checksum}});
        for (const auto& w : warnings) p.record("warning", {{"message", w}});
        return 0;
    }
    auto& os = p.text();
    for (const char* k : {"snapshot_id", "out", "cves", "cwes", "capecs", "techniques", "actors", "unresolved",
                          "warnings"}) {
        const json& v = summary.at(k);
        os << k << std::string(12 - std::string(k).size(), ' ') << (v.is_string() ? v.get<std::string>() : v.dump())
           << '\n';
    }
    for (const auto& s : snap.source_manifest)
        os << "source      " << s.name << '\t' << s.version << '\t' << s.checksum << '\n';
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < warnings.size() && i < kShown; ++i) err << "warning: " << warnings[i] << '\n';
    if (warnings.size() > kShown)
        err << "warning: " << warnings.size() - kShown << " more (use --format machine for all)\n";
    return 0;
}

// ---- train -----------------------------------------------------------------

struct TrainArgs {
    std::string out;
    std::string feedback;
    std::vector<int> labels;
    int threads = -1;
};

int cmd_train(const TrainArgs& a, const Globals& g, Printer& p, std::ostream& err) {
    AppConfig cfg = resolve_config(g);
    if (a.out.empty() && cfg.registry.empty()) throw ConfigError("train needs --out or a registry");
    if (!a.labels.empty()) cfg.train.label_universe = a.labels;
    if (a.threads >= 0) cfg.train.threads = a.threads;
    const KnowledgeSnapshot snap = require_snapshot(cfg);

    std::vector<FeedbackRecord> feedback;
    const std::string log = a.feedback.empty() ? cfg.feedback_log : a.feedback;
    if (!log.empty() && fs::exists(log)) feedback = audit_feedback_log(log);

    TrainResult r = train_pipeline(snap, cfg.train, load_synonym_sources(cfg), feedback);
    const std::string bytes = save_model(r.model);
    const std::string id = model_id(bytes);
    if (!a.out.empty()) write_file_atomic(a.out, bytes);
    json metrics = report_summary_json(r.test_report);
    metrics["threshold"] = r.model.threshold;
    if (!cfg.registry.empty()) ModelRegistry(cfg.registry).stage(bytes, snap.snapshot_id, metrics, utc_timestamp());

    p.header("train");
    if (p.machine()) {
        p.record("model", {{"model_id", id},
                           {"snapshot_id", snap.snapshot_id},
                           {"out", a.out},
                           {"labels", r.model.label_nodes.size()},
                           {"classifiers", r.model.classifiers.size()},
                           {"threshold", r.model.threshold},
                           {"feedback_records", feedback.size()}});
        p.record("test", metrics);
        for (const auto& w : r.warnings) p.record("warning", {{"message", w}});
        return 0;
    }
    auto& os = p.text();
    os << "model_id     " << id << '\n'
       << "snapshot_id  " << snap.snapshot_id << '\n'
       << "labels       " << r.model.label_nodes.size() << '\n'
       << "classifiers  " << r.model.classifiers.size() << '\n'
       << "threshold    " << fixed(r.model.threshold, 2) << '\n'
       << "feedback     " << feedback.size() << '\n';
    const ScoreReport& t = r.test_report;
    os << "test         micro P/R/F " << fixed(t.micro_precision) << ' ' << fixed(t.micro_recall) << ' '
       << fixed(t.micro_f) << "  macro P/R/F " << fixed(t.macro_precision) << ' ' << fixed(t.macro_recall) << ' '
       << fixed(t.macro_f) << "  n=" << t.evaluated << '\n';
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
    return 0;
}

// ---- predict ---------------------------------------------------------------

struct PredictArgs {
    std::string cve;
    std::string text;
    std::size_t max_techniques = 0;
    bool no_actors = false;
};

void print_chain_human(std::ostream& os, const ExplanationChain& c, const ChainView& view) {
    os << "cve          " << (c.cve.empty() ? "-" : c.cve) << '\n';
    os << "description  " << c.description << '\n';
    os << "cwes        ";
    for (const auto& l : c.cwe_links) {
        os << ' ' << cwe_label(l.cwe) << " (" << to_string(l.origin);
        if (l.score) os << ' ' << fixed(*l.score);
        if (l.fallback) os << " fallback";
        os << ')';
    }
    os << '\n';
    os << "techniques   " << c.techniques.size() << '\n';
    os << "actors       " << c.actors.size() << '\n';
    const std::size_t shown = view.max_techniques ? std::min(*view.max_techniques, c.techniques.size())
                                                  : c.techniques.size();
    for (std::size_t i = 0; i < shown; ++i) {
        os << "  " << i + 1 << ". " << c.techniques[i] << '\n';
        for (const auto& e : c.technique_links)
            if (e.to_id == c.techniques[i])
                os << "       " << e.from_id << "  " << to_string(e.source) << "  " << e.evidence << '\n';
    }
    if (view.include_actors)
        for (const auto& a : c.actors) {
            std::vector<std::string> techs;
            for (const auto& e : a.edges) techs.push_back(e.from_id);
            os << "  " << a.actor_id << "  " << a.name << "  (" << a.supporting_techniques
               << "): " << join(techs, ", ") << '\n';
        }
    for (const auto& w : c.warnings) os << "warning      " << w << '\n';
}

int cmd_predict(const PredictArgs& a, const Globals& g, Printer& p, std::ostream& err) {
    if (a.cve.empty() == a.text.empty()) throw InputError("predict needs exactly one of --cve or --text");
    const AppConfig cfg = resolve_config(g);
    const KnowledgeSnapshot snap = require_snapshot(cfg);
    const auto model = optional_model(g, cfg, snap, err);
    const MappingTable table = mapping_table(cfg, snap, err);
    AnalyzeRequest req;
    if (!a.cve.empty()) req.cve = a.cve;
    else req.description = a.text;
    const ExplanationChain chain = analyze_cve(req, model ? &*model : nullptr, table, snap);
    ChainView view;
    view.include_actors = !a.no_actors;
    if (a.max_techniques > 0) view.max_techniques = a.max_techniques;

    p.header("predict");
    if (p.machine()) p.record("chain", chain_to_json(chain, view));
    else print_chain_human(p.text(), chain, view);
    return 0;
}

// ---- evaluate --------------------------------------------------------------

struct EvaluateArgs {
    std::string ground_truth;
    std::string out;
};

json sweep_row(const ScoreReport& r) { return report_summary_json(r); }

int cmd_evaluate(const EvaluateArgs& a, const Globals& g, Printer& p, std::ostream& err) {
    const AppConfig cfg = resolve_config(g);
    const KnowledgeSnapshot snap = require_snapshot(cfg);
    const HierarchicalModel model = require_model(g, cfg, snap, err);
    const std::vector<int> cutoffs = g.cutoffs.empty() ? std::vector<int>{500, 200, 100, 50} : g.cutoffs;
    for (int c : cutoffs)
        if (c < 1) throw InputError("cutoffs must be positive");

    // The held-out part is recovered from the model's own split settings.
    const DocumentSplit split = split_documents(labeled_documents(snap), model.config.split, model.config.seed);
    const ScoreReport overall = evaluate_model(model, split.test);
    const std::vector<ScoreReport> sweep = sweep_model(model, split.test, cutoffs);

    std::optional<MrrResult> two, base;
    double coverage = 0, combined = 0;
    if (!a.ground_truth.empty()) {
        const GroundTruthSet truth = parse_ground_truth(read_file(a.ground_truth));
        const MappingTable table = mapping_table(cfg, snap, err);
        two = two_step_mrr(model, table, snap, truth);
        base = baseline_mrr(build_technique_index(snap), snap, truth);
        coverage = lookup_coverage(snap);
        combined = combined_mrr(coverage, two->mrr);
    }

    std::ostringstream sweep_tsv, label_tsv, mrr_tsv;
    sweep_tsv << "cutoff\tlabels\tcoverage\tevaluated\tmicro_p\tmicro_r\tmicro_f\tmacro_p\tmacro_r\tmacro_f\tdegenerate\n";
    for (const auto& r : sweep)
        sweep_tsv << r.sample_threshold.value_or(0) << '\t' << r.label_count << '\t' << fixed(r.coverage.value_or(0), 6)
                  << '\t' << r.evaluated << '\t' << fixed(r.micro_precision, 6) << '\t' << fixed(r.micro_recall, 6)
                  << '\t' << fixed(r.micro_f, 6) << '\t' << fixed(r.macro_precision, 6) << '\t'
                  << fixed(r.macro_recall, 6) << '\t' << fixed(r.macro_f, 6) << '\t' << (r.degenerate ? 1 : 0)
                  << '\n';
    label_tsv << "label\tsupport\tprecision\trecall\tf\n";
    for (const auto& [label, s] : overall.per_label)
        label_tsv << label << '\t' << s.support << '\t' << fixed(s.precision, 6) << '\t' << fixed(s.recall, 6) << '\t'
                  << fixed(s.f, 6) << '\n';
    if (two) {
        mrr_tsv << "method\tmrr\tevaluated\tmissing\n";
        mrr_tsv << "two_step\t" << fixed(two->mrr, 6) << '\t' << two->evaluated << '\t' << two->missing << '\n';
        mrr_tsv << "tfidf_baseline\t" << fixed(base->mrr, 6) << '\t' << base->evaluated << '\t' << base->missing
                << '\n';
        mrr_tsv << "lookup_coverage\t" << fixed(coverage, 6) << "\t\t\n";
        mrr_tsv << "combined\t" << fixed(combined, 6) << "\t\t\n";
    }
    if (!a.out.empty()) {
        fs::create_directories(a.out);
        write_file_atomic((fs::path(a.out) / "sweep.tsv").string(), sweep_tsv.str());
        write_file_atomic((fs::path(a.out) / "labels.tsv").string(), label_tsv.str());
        if (two) write_file_atomic((fs::path(a.out) / "mrr.tsv").string(), mrr_tsv.str());
    }

    p.header("evaluate");
    if (p.machine()) {
        p.record("overall", report_summary_json(overall));
        for (const auto& r : sweep) p.record("sweep", sweep_row(r));
        if (two) {
            p.record("mrr", {{"method", "two_step"}, {"mrr", two->mrr}, {"evaluated", two->evaluated},
                             {"missing", two->missing}});
            p.record("mrr", {{"method", "tfidf_baseline"}, {"mrr", base->mrr}, {"evaluated", base->evaluated},
                             {"missing", base->missing}});
            p.record("mrr", {{"method", "combined"}, {"mrr", combined}, {"lookup_coverage", coverage}});
        }
        return 0;
    }
    auto& os = p.text();
    os << "overall  micro F " << fixed(overall.micro_f) << "  macro F " << fixed(overall.macro_f) << "  labels "
       << overall.label_count << "  n=" << overall.evaluated << '\n';
    os << '\n' << sweep_tsv.str();
    if (two) os << '\n' << mrr_tsv.str();
    return 0;
}

// ---- report ----------------------------------------------------------------

struct ReportArgs {
    std::vector<std::string> cves;
    std::string cve_file;
    std::string out;
};

int cmd_report(const ReportArgs& a, const Globals& g, Printer& p, std::ostream& err) {
    std::vector<std::string> requested = a.cves;
    if (!a.cve_file.empty())
        for (const auto& line : split(read_file(a.cve_file), '\n')) {
            const std::string t = trim(line);
            if (!t.empty() && t[0] != '#') requested.push_back(t);
        }
    std::vector<std::string> ids;
    std::set<std::string> seen;
    for (const auto& r : requested)
        if (seen.insert(r).second) ids.push_back(r);

    const AppConfig cfg = resolve_config(g);
    const KnowledgeSnapshot snap = require_snapshot(cfg);
    const auto model = optional_model(g, cfg, snap, err);
    const MappingTable table = mapping_table(cfg, snap, err);

    std::vector<ExplanationChain> chains;
    std::vector<std::pair<std::string, std::string>> skipped;
    for (const auto& id : ids) {
        try {
            chains.push_back(analyze_cve(id, model ? &*model : nullptr, table, snap));
        } catch (const NotFoundError& e) {
            skipped.emplace_back(id, e.what());
        } catch (const InputError& e) {
            skipped.emplace_back(id, e.what());
        } catch (const ConfigError& e) {
            skipped.emplace_back(id, e.what());
        }
    }

    std::ostringstream body;
    Printer bp(body, p.machine());
    bp.header("report");
    if (p.machine()) {
        for (const auto& c : chains)
            bp.record("row", {{"cve_id", c.cve},
                              {"cwes", chain_to_json(c).at("cwes")},
                              {"techniques", c.techniques.size()},
                              {"actors", c.actors.size()}});
        for (const auto& [id, why] : skipped) bp.record("skipped", {{"cve_id", id}, {"reason", why}});
        for (const auto& c : chains) bp.record("chain", chain_to_json(c));
    } else {
        body << "CVE\tCWEs\tTechniques\tActors\n";
        for (const auto& c : chains)
            body << c.cve << '\t' << cwe_list(c.cwe_links) << '\t' << c.techniques.size() << '\t' << c.actors.size()
                 << '\n';
        if (!skipped.empty()) {
            body << "\n## Skipped\n";
            for (const auto& [id, why] : skipped) body << id << '\t' << why << '\n';
        }
        if (!chains.empty()) {
            body << "\n## Appendix: explanation chains\n";
            for (const auto& c : chains) {
                body << '\n';
                print_chain_human(body, c, ChainView{});
            }
        }
    }
    if (a.out.empty()) p.text() << body.str();
    else write_file_atomic(a.out, body.str());
    return 0;
}

// ---- serve -----------------------------------------------------------------

int cmd_serve(const std::string& listen, const Globals& g, std::ostream& out, std::ostream& err) {
    AppConfig cfg = resolve_config(g);
    if (!listen.empty()) {
        const auto colon = listen.rfind(':');
        if (colon == std::string::npos) throw ConfigError("--listen expects host:port");
        cfg.listen_host = listen.substr(0, colon);
        try {
            cfg.listen_port = std::stoi(listen.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("--listen expects host:port");
        }
    }
    if (cfg.registry.empty()) throw ConfigError("serve needs a registry directory");
    if (cfg.feedback_log.empty()) throw ConfigError("serve needs a feedback log path");

    // Block the stop signals before any server thread exists so that only the
    // waiter thread below receives them.
    sigset_t stop_signals;
    sigemptyset(&stop_signals);
    sigaddset(&stop_signals, SIGINT);
    sigaddset(&stop_signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

    Service service(cfg);
    for (const auto& w : service.startup_warnings()) err << "warning: " << w << '\n';
    HttpServer server(service);
    const int port = server.bind(cfg.listen_host, cfg.listen_port);
    out << "listening on http://" << cfg.listen_host << ':' << port << "  snapshot " << service.snapshot().snapshot_id
        << "  model " << (service.active_model_id().empty() ? "none" : service.active_model_id()) << std::endl;

    std::thread waiter([&server, stop_signals] {
        int sig = 0;
        sigwait(&stop_signals, &sig);
        server.stop();
    });
    waiter.detach();
    server.listen();
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maps vulnerabilities to weaknesses, attack techniques and threat actors."};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--config", g.config, "JSON configuration file");
    app.add_option("--snapshot", g.snapshot, "Snapshot directory");
    app.add_option("--model", g.model, "Model file");
    app.add_option("--registry", g.registry, "Model registry directory");
    app.add_option("--curated", g.curated, "Curated CWE to technique map");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
    g.seed_opt = app.add_option("--seed", g.seed, "Random seed for splitting and sampling");
    g.threshold_opt = app.add_option("--threshold", g.threshold, "Decision threshold override");
    g.min_samples_opt = app.add_option("--min-samples", g.min_samples, "Minimum samples per trained label");
    app.add_option("--cutoffs", g.cutoffs, "Sample-count cutoffs for the sweep")->delimiter(',');

    IngestArgs ia;
    auto* ingest = app.add_subcommand("ingest", "Parse the four sources into a snapshot");
    ingest->add_option("--sources", ia.sources, "Directory holding the standard source file names");
    ingest->add_option("--nvd", ia.nvd, "NVD JSON feed files");
    ingest->add_option("--cwe", ia.cwe, "CWE XML catalog");
    ingest->add_option("--capec", ia.capec, "CAPEC XML catalog");
    ingest->add_option("--attack", ia.attack, "ATT&CK STIX bundle");
    ingest->add_option("--out", ia.out, "Snapshot output directory")->required();

    TrainArgs ta;
    auto* train = app.add_subcommand("train", "Train a hierarchical classifier on a snapshot");
    train->add_option("--out", ta.out, "Model output file");
    train->add_option("--feedback", ta.feedback, "Feedback log to fold into the training labels");
    train->add_option("--labels", ta.labels, "Restrict the label universe to these CWE ids")->delimiter(',');
    train->add_option("--threads", ta.threads, "Training threads (0 picks the hardware count)");

    PredictArgs pa;
    auto* predict = app.add_subcommand("predict", "Explain one CVE or description");
    predict->add_option("--cve", pa.cve, "CVE id");
    predict->add_option("--text", pa.text, "Free-text vulnerability description");
    predict->add_option("--max-techniques", pa.max_techniques, "Show at most this many techniques");
    predict->add_flag("--no-actors", pa.no_actors, "Omit threat actors");

    EvaluateArgs ea;
    auto* evaluate = app.add_subcommand("evaluate", "Score a model and run the sample-threshold sweep");
    evaluate->add_option("--ground-truth", ea.ground_truth, "Technique ground truth for reciprocal-rank scoring");
    evaluate->add_option("--out", ea.out, "Directory for report files");

    ReportArgs ra;
    auto* report = app.add_subcommand("report", "Tabulate explanation chains for a list of CVEs");
    report->add_option("cves", ra.cves, "CVE ids");
    report->add_option("--cve-file", ra.cve_file, "File with one CVE id per line");
    report->add_option("--out", ra.out, "Write the report to this file");

    std::string listen;
    auto* serve = app.add_subcommand("serve", "Run the HTTP API");
    serve->add_option("--listen", listen, "host:port");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::input);
    }

    Printer printer(out, g.format == "machine");
    try {
        if (*ingest) return cmd_ingest(ia, printer, err);
        if (*train) return cmd_train(ta, g, printer, err);
        if (*predict) return cmd_predict(pa, g, printer, err);
        if (*evaluate) return cmd_evaluate(ea, g, printer, err);
        if (*report) return cmd_report(ra, g, printer, err);
        if (*serve) return cmd_serve(listen, g, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::internal);
    }
    return static_cast<int>(ExitCode::internal);
}

}  // namespace vulnmap
