#include "vulnmap/hierclf.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace vulnmap {

namespace {

double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) {
    if (z > 0) return z + std::log1p(std::exp(-z));
    return std::log1p(std::exp(z));
}

double sparse_dot(const std::vector<double>& w, const FeatureVector& x) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.indices.size(); ++k) s += w[x.indices[k]] * x.values[k];
    return s;
}

// Deterministic sample of `k` items from `items` (order of the result follows
// the original order, so downstream sums do not depend on the draw order).
template <class T>
std::vector<T> sample_k(const std::vector<T>& items, std::size_t k, std::uint64_t seed) {
    if (k >= items.size()) return items;
    std::vector<std::size_t> idx(items.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (idx.size() - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    std::vector<T> out;
    out.reserve(k);
    for (std::size_t i : idx) out.push_back(items[i]);
    return out;
}

}  // namespace

double NodeClassifier::score(const FeatureVector& x) const {
    if (!x.indices.empty() && x.indices.back() >= weights.size())
        throw InputError("classifier " + cwe_label(node) + ": feature dimension mismatch");
    return sigmoid(sparse_dot(weights, x) + bias);
}

NodeProblem make_node_problem(const std::vector<const FeatureVector*>& positives,
                              const std::vector<const FeatureVector*>& negatives, std::size_t dimension,
                              bool class_balance) {
    NodeProblem p;
    p.dimension = dimension;
    const double n = static_cast<double>(positives.size() + negatives.size());
    const double wp = class_balance && !positives.empty() ? n / (2.0 * static_cast<double>(positives.size())) : 1.0;
    const double wn = class_balance && !negatives.empty() ? n / (2.0 * static_cast<double>(negatives.size())) : 1.0;
    for (const auto* x : positives) {
        p.rows.push_back(x);
        p.targets.push_back(1.0);
        p.sample_weights.push_back(wp);
    }
    for (const auto* x : negatives) {
        p.rows.push_back(x);
        p.targets.push_back(0.0);
        p.sample_weights.push_back(wn);
    }
    return p;
}

double node_objective(const NodeProblem& p, const std::vector<double>& w, double b, double l2) {
    double loss = 0.0;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        const double z = sparse_dot(w, *p.rows[i]) + b;
        // -[y log s(z) + (1-y) log(1 - s(z))] = softplus(z) - y z
        loss += p.sample_weights[i] * (softplus(z) - p.targets[i] * z);
    }
    if (!p.rows.empty()) loss /= static_cast<double>(p.rows.size());
    double reg = 0.0;
    for (double v : w) reg += v * v;
    return loss + 0.5 * l2 * reg;
}

void node_gradient(const NodeProblem& p, const std::vector<double>& w, double b, double l2,
                   std::vector<double>& grad_w, double& grad_b) {
    grad_w.assign(w.size(), 0.0);
    grad_b = 0.0;
    const double inv_n = p.rows.empty() ? 0.0 : 1.0 / static_cast<double>(p.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        const FeatureVector& x = *p.rows[i];
        const double r = p.sample_weights[i] * (sigmoid(sparse_dot(w, x) + b) - p.targets[i]) * inv_n;
        for (std::size_t k = 0; k < x.indices.size(); ++k) grad_w[x.indices[k]] += r * x.values[k];
        grad_b += r;
    }
    for (std::size_t j = 0; j < w.size(); ++j) grad_w[j] += l2 * w[j];
}

NodeClassifier train_node(int node, const std::vector<const FeatureVector*>& positives,
                          const std::vector<const FeatureVector*>& negatives, std::size_t dimension,
                          const TrainConfig& config) {
    if (positives.empty()) throw InputError("train_node: " + cwe_label(node) + " has no positive examples");
    if (negatives.empty()) throw InputError("train_node: " + cwe_label(node) + " has no negative examples");
    for (const auto* set : {&positives, &negatives})
        for (const auto* x : *set)
            if (!x->indices.empty() && x->indices.back() >= dimension)
                throw InputError("train_node: " + cwe_label(node) + ": feature index out of range");

    const NodeProblem p = make_node_problem(positives, negatives, dimension, config.class_balance);

    // Only coordinates touched by some row can move away from zero, so the
    // update loops run over that support instead of the whole vocabulary.
    std::vector<std::uint32_t> support;
    {
        std::vector<char> seen(dimension, 0);
        for (const auto* x : p.rows)
            for (auto j : x->indices)
                if (!seen[j]) {
                    seen[j] = 1;
                    support.push_back(j);
                }
        std::sort(support.begin(), support.end());
    }

    std::vector<double> w(dimension, 0.0), look(dimension, 0.0), velocity(dimension, 0.0), grad(dimension, 0.0);
    double b = 0.0, look_b = 0.0, vel_b = 0.0;
    const double inv_n = 1.0 / static_cast<double>(p.rows.size());
    const double mu = config.momentum;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        // Nesterov look-ahead point; with mu = 0 this is plain gradient descent.
        for (auto j : support) look[j] = w[j] + mu * velocity[j];
        look_b = b + mu * vel_b;
        for (auto j : support) grad[j] = config.l2 * look[j];
        double grad_b = 0.0;
        for (std::size_t i = 0; i < p.rows.size(); ++i) {
            const FeatureVector& x = *p.rows[i];
            const double r = p.sample_weights[i] * (sigmoid(sparse_dot(look, x) + look_b) - p.targets[i]) * inv_n;
            for (std::size_t k = 0; k < x.indices.size(); ++k) grad[x.indices[k]] += r * x.values[k];
            grad_b += r;
        }
        for (auto j : support) {
            velocity[j] = mu * velocity[j] - config.learning_rate * grad[j];
            w[j] += velocity[j];
        }
        vel_b = mu * vel_b - config.learning_rate * grad_b;
        b += vel_b;
    }
    for (auto j : support)
        if (!std::isfinite(w[j])) throw InputError("train_node: " + cwe_label(node) + ": training diverged");
    if (!std::isfinite(b)) throw InputError("train_node: " + cwe_label(node) + ": training diverged");
    return NodeClassifier{node, std::move(w), b};
}

std::vector<CwePrediction> traverse(const std::vector<int>& roots, const std::map<int, std::vector<int>>& children,
                                    const std::function<double(int)>& score, double threshold) {
    std::unordered_map<int, double> cache;
    auto s = [&](int n) {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        const double v = score(n);
        cache.emplace(n, v);
        return v;
    };
    auto select = [&](const std::vector<int>& candidates) {
        std::vector<int> picked;
        for (int c : candidates)
            if (s(c) >= threshold) picked.push_back(c);
        if (picked.empty() && !candidates.empty()) {
            int best = candidates.front();
            for (int c : candidates)
                if (s(c) > s(best) || (s(c) == s(best) && c < best)) best = c;
            picked.push_back(best);
        }
        return picked;
    };
    static const std::vector<int> kNone;
    auto kids = [&](int n) -> const std::vector<int>& {
        auto it = children.find(n);
        return it == children.end() ? kNone : it->second;
    };

    const std::vector<int> kept_roots = select(roots);
    std::map<int, std::vector<int>> kept_edges;
    std::set<int> kept(kept_roots.begin(), kept_roots.end());
    std::vector<int> work(kept_roots.begin(), kept_roots.end());
    std::set<int> expanded;
    while (!work.empty()) {
        const int n = work.back();
        work.pop_back();
        if (!expanded.insert(n).second) continue;
        auto picked = select(kids(n));
        for (int c : picked) {
            kept_edges[n].push_back(c);
            if (kept.insert(c).second) work.push_back(c);
        }
    }

    // Best path per kept node over kept edges: maximal left-to-right score
    // sum, ties broken by the lexicographically smaller id sequence.
    std::map<int, std::pair<double, std::vector<int>>> best;
    std::vector<int> path;
    std::function<void(int, double)> walk = [&](int n, double sum) {
        path.push_back(n);
        sum += s(n);
        auto it = best.find(n);
        if (it == best.end() || sum > it->second.first || (sum == it->second.first && path < it->second.second))
            best[n] = {sum, path};
        auto e = kept_edges.find(n);
        if (e != kept_edges.end())
            for (int c : e->second) walk(c, sum);
        path.pop_back();
    };
    for (int r : kept_roots) walk(r, 0.0);

    std::vector<CwePrediction> out;
    out.reserve(kept.size());
    for (int n : kept) out.push_back(CwePrediction{n, s(n), best.at(n).second, s(n) < threshold});
    std::sort(out.begin(), out.end(), [](const CwePrediction& a, const CwePrediction& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.cwe < b.cwe;
    });
    return out;
}

std::vector<int> HierarchicalModel::trained_roots() const { return trained_roots_; }

const std::map<int, std::vector<int>>& HierarchicalModel::trained_children() const { return trained_children_; }

void HierarchicalModel::rebuild_views() {
    trained_roots_.clear();
    trained_children_.clear();
    for (int r : hierarchy.roots)
        if (classifiers.count(r)) trained_roots_.push_back(r);
    for (const auto& [n, cs] : hierarchy.children) {
        if (!classifiers.count(n)) continue;
        auto& out = trained_children_[n];
        for (int c : cs)
            if (classifiers.count(c)) out.push_back(c);
    }
    std::unordered_set<std::string> sw(stopwords.begin(), stopwords.end());
    normalizer_.emplace(stopwords.empty() ? TextNormalizer() : TextNormalizer(std::move(sw)));
}

TokenStream HierarchicalModel::preprocess(std::string_view text) const {
    if (!normalizer_) throw InputError("model not initialised");
    return codebook.apply(normalizer_->normalize(text));
}

FeatureVector HierarchicalModel::vectorize(std::string_view text) const { return transform(preprocess(text), vocabulary); }

std::map<int, double> HierarchicalModel::score_all(const FeatureVector& x) const {
    std::map<int, double> out;
    for (const auto& [n, c] : classifiers) out[n] = c.score(x);
    return out;
}

std::vector<CwePrediction> predict_cwes(std::string_view description, const HierarchicalModel& model) {
    return predict_cwes(description, model, model.threshold);
}

std::vector<CwePrediction> predict_cwes(std::string_view description, const HierarchicalModel& model,
                                        double threshold) {
    if (model.classifiers.empty() || model.trained_roots().empty()) throw InputError("predict: model is not trained");
    const FeatureVector x = model.vectorize(description);
    return traverse(model.trained_roots(), model.trained_children(),
                    [&](int n) { return model.classifiers.at(n).score(x); }, threshold);
}

std::vector<int> predicted_labels(const std::vector<CwePrediction>& preds) {
    std::vector<int> out;
    for (const auto& p : preds) out.push_back(p.cwe);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Micro F over a label universe, using ancestor-closed truth sets.
double validation_micro_f(const std::vector<std::vector<int>>& truth, const std::vector<std::vector<int>>& predicted,
                          const std::set<int>& universe) {
    long tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        std::set<int> t, p;
        for (int l : truth[i])
            if (universe.count(l)) t.insert(l);
        for (int l : predicted[i])
            if (universe.count(l)) p.insert(l);
        for (int l : p) (t.count(l) ? tp : fp)++;
        for (int l : t)
            if (!p.count(l)) ++fn;
    }
    const double denom = static_cast<double>(2 * tp + fp + fn);
    return denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(tp) / denom;
}

}  // namespace

HierarchicalModel train_hierarchy(const TrainingInputs& inputs, const TrainConfig& config,
                                  std::vector<std::string>* warnings) {
    auto warn = [&](std::string m) {
        if (warnings) warnings->push_back(std::move(m));
    };
    if (config.epochs < 1 || !(config.learning_rate > 0) || config.l2 < 0 || config.negative_ratio <= 0)
        throw ConfigError("train: invalid optimiser settings");
    if (!(config.default_threshold > 0 && config.default_threshold < 1))
        throw ConfigError("train: default threshold must lie in (0,1)");

    HierarchicalModel model;
    model.config = config;
    model.trained_on = inputs.snapshot_id;
    model.codebook = inputs.codebook;
    model.stopwords = inputs.stopwords;
    std::sort(model.stopwords.begin(), model.stopwords.end());
    model.hierarchy = build_hierarchy(inputs.cwes);
    WeaknessHierarchy& h = model.hierarchy;

    // Keep only documents with at least one hierarchy label.
    std::vector<const LabeledDoc*> docs;
    for (const auto& d : inputs.train) {
        bool any = false;
        for (int l : d.labels) any = any || h.contains(l);
        if (any) docs.push_back(&d);
    }
    if (docs.empty()) throw InputError("train: no training document carries a hierarchy label");

    {
        std::vector<CveRecord> records;
        records.reserve(docs.size());
        for (const auto* d : docs) {
            CveRecord r;
            r.id = d->cve;
            r.assigned_cwes = d->labels;
            records.push_back(std::move(r));
        }
        std::vector<const CveRecord*> ptrs;
        for (const auto& r : records) ptrs.push_back(&r);
        index_training_cves(h, ptrs);
    }
    for (const auto* d : docs) {
        std::set<int> direct;
        for (int l : d->labels)
            if (h.contains(l)) direct.insert(l);
        for (int l : direct) ++model.sample_counts[l];
    }

    std::set<int> universe;
    if (config.label_universe) universe.insert(config.label_universe->begin(), config.label_universe->end());
    std::set<int> trainable;
    for (const auto& [label, count] : model.sample_counts) {
        if (count < config.min_samples) continue;
        if (config.label_universe && !universe.count(label)) continue;
        model.label_nodes.push_back(label);
        for (int a : h.ancestors_inclusive(label)) trainable.insert(a);
    }
    bool any_root = false;
    for (int r : h.roots) any_root = any_root || trainable.count(r);
    if (!any_root) throw InputError("train: no trainable root (min_samples " + std::to_string(config.min_samples) + ")");

    model.rebuild_views();
    std::vector<TokenStream> streams;
    streams.reserve(docs.size());
    for (const auto* d : docs) streams.push_back(model.preprocess(d->text));
    model.vocabulary = fit_vocabulary(streams, config.n_max, config.min_df);
    std::vector<FeatureVector> features;
    features.reserve(docs.size());
    for (const auto& s : streams) features.push_back(transform(s, model.vocabulary));
    streams.clear();

    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < docs.size(); ++i) row_of.emplace(docs[i]->cve, i);
    auto rows = [&](const std::vector<std::string>& ids) {
        std::vector<std::size_t> out;
        out.reserve(ids.size());
        for (const auto& id : ids) out.push_back(row_of.at(id));
        std::sort(out.begin(), out.end());
        return out;
    };

    const std::vector<int> nodes(trainable.begin(), trainable.end());
    std::vector<std::optional<NodeClassifier>> trained(nodes.size());
    std::vector<std::string> node_warnings(nodes.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    const std::size_t dim = model.vocabulary.size();

    auto job = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= nodes.size()) return;
            try {
                const int n = nodes[k];
                std::vector<std::size_t> pos = rows(h.training_index.at(n));
                std::set<std::size_t> own(pos.begin(), pos.end());
                std::set<std::size_t> pool;
                for (int p : h.parents.at(n))
                    for (auto r : rows(h.training_index.at(p)))
                        if (!own.count(r)) pool.insert(r);
                if (pool.empty())
                    for (std::size_t r = 0; r < docs.size(); ++r)
                        if (!own.count(r)) pool.insert(r);
                if (pos.empty()) {
                    node_warnings[k] = "train: " + cwe_label(n) + " skipped (no positives)";
                    continue;
                }
                if (pool.empty()) {
                    // The node covers every training document.  With nothing to
                    // discriminate against it gets a constant score, the
                    // rule-of-succession estimate (n + 1) / (n + 2).
                    NodeClassifier c;
                    c.node = n;
                    c.weights.assign(dim, 0.0);
                    c.bias = std::log(static_cast<double>(pos.size()) + 1.0);
                    trained[k] = std::move(c);
                    node_warnings[k] = "train: " + cwe_label(n) + " covers every training document, constant score";
                    continue;
                }
                const std::uint64_t seed = mix_seed(config.seed, static_cast<std::uint64_t>(n));
                if (config.max_positives > 0) pos = sample_k(pos, config.max_positives, seed);
                std::vector<std::size_t> neg(pool.begin(), pool.end());
                const auto cap = static_cast<std::size_t>(std::ceil(config.negative_ratio * static_cast<double>(pos.size())));
                neg = sample_k(neg, cap, mix_seed(seed, 1));
                std::vector<const FeatureVector*> P, N;
                for (auto r : pos) P.push_back(&features[r]);
                for (auto r : neg) N.push_back(&features[r]);
                trained[k] = train_node(n, P, N, dim, config);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next = nodes.size();
                return;
            }
        }
    };
    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, nodes.size())));
    if (threads <= 1) {
        job();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(job);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (trained[k]) model.classifiers.emplace(nodes[k], std::move(*trained[k]));
        if (!node_warnings[k].empty()) warn(node_warnings[k]);
    }
    model.rebuild_views();
    if (model.trained_roots().empty()) throw InputError("train: no root classifier could be trained");

    model.threshold = config.default_threshold;
    std::vector<const LabeledDoc*> val;
    for (const auto& d : inputs.validation) {
        bool any = false;
        for (int l : d.labels) any = any || h.contains(l);
        if (any) val.push_back(&d);
    }
    if (!val.empty() && !config.threshold_grid.empty()) {
        std::vector<std::map<int, double>> scores;
        std::vector<std::vector<int>> truth;
        for (const auto* d : val) {
            scores.push_back(model.score_all(model.vectorize(d->text)));
            truth.push_back(h.ancestor_closure(d->labels));
        }
        const std::set<int> labels(model.label_nodes.begin(), model.label_nodes.end());
        double best_f = -1.0;
        for (double t : config.threshold_grid) {
            if (!(t > 0 && t < 1)) throw ConfigError("train: threshold grid values must lie in (0,1)");
            std::vector<std::vector<int>> predicted;
            for (const auto& sc : scores)
                predicted.push_back(predicted_labels(
                    traverse(model.trained_roots(), model.trained_children(), [&](int n) { return sc.at(n); }, t)));
            const double f = validation_micro_f(truth, predicted, labels);
            const double d_new = std::fabs(t - 0.5), d_old = std::fabs(model.threshold - 0.5);
            if (f > best_f || (f == best_f && (d_new < d_old || (d_new == d_old && t < model.threshold)))) {
                best_f = f;
                model.threshold = t;
            }
        }
    }
    return model;
}

}  // namespace vulnmap
