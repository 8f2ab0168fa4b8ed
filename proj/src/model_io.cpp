#include "vulnmap/config.hpp"
#include "vulnmap/errors.hpp"
#include "vulnmap/hierclf.hpp"
#include "vulnmap/util.hpp"

#include <json.hpp>

#include <bit>
#include <cstring>

namespace vulnmap {

using nlohmann::json;

namespace {

constexpr char kMagic[8] = {'V', 'M', 'A', 'P', 'M', 'D', 'L', '\0'};

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_f64(std::string& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

class Reader {
public:
    explicit Reader(std::string_view b) : b_(b) {}
    std::uint64_t take(int bytes) {
        if (pos_ + static_cast<std::size_t>(bytes) > b_.size())
            throw ParseError("model file truncated", pos_);
        std::uint64_t v = 0;
        for (int i = 0; i < bytes; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b_[pos_ + static_cast<std::size_t>(i)])) << (8 * i);
        pos_ += static_cast<std::size_t>(bytes);
        return v;
    }
    std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
    std::uint64_t u64() { return take(8); }
    double f64() { return std::bit_cast<double>(take(8)); }
    std::string_view bytes(std::size_t n) {
        if (n > b_.size() - pos_) throw ParseError("model file truncated", pos_);
        auto v = b_.substr(pos_, n);
        pos_ += n;
        return v;
    }
    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ == b_.size(); }

private:
    std::string_view b_;
    std::size_t pos_ = 0;
};

template <class V>
json int_keyed(const std::map<int, V>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

template <class V>
std::map<int, V> int_keyed_from(const json& j) {
    std::map<int, V> m;
    for (auto it = j.begin(); it != j.end(); ++it) m.emplace(std::stoi(it.key()), it.value().template get<V>());
    return m;
}

}  // namespace

std::string save_model(const HierarchicalModel& model) {
    json meta;
    meta["threshold"] = model.threshold;
    meta["trained_on"] = model.trained_on;
    meta["config"] = train_config_to_json(model.config);
    meta["sample_counts"] = int_keyed(model.sample_counts);
    meta["label_nodes"] = model.label_nodes;
    meta["hierarchy"] = {{"nodes", model.hierarchy.nodes},
                         {"parents", int_keyed(model.hierarchy.parents)},
                         {"training_index", int_keyed(model.hierarchy.training_index)}};
    meta["codebook"] = model.codebook.export_tsv();
    meta["vocabulary"] = {{"terms", model.vocabulary.terms()},
                          {"doc_frequency", model.vocabulary.doc_frequency()},
                          {"corpus_size", model.vocabulary.corpus_size()},
                          {"n_max", model.vocabulary.n_max()}};
    meta["stopwords"] = model.stopwords;
    const std::string meta_text = meta.dump();

    std::string out(kMagic, sizeof kMagic);
    put_u32(out, HierarchicalModel::kFormatVersion);
    put_u64(out, meta_text.size());
    out += meta_text;
    put_u32(out, static_cast<std::uint32_t>(model.classifiers.size()));
    for (const auto& [node, c] : model.classifiers) {
        if (c.weights.size() != model.vocabulary.size())
            throw InputError("save_model: " + cwe_label(node) + " weight length differs from vocabulary size");
        put_u32(out, static_cast<std::uint32_t>(node));
        put_f64(out, c.bias);
        std::uint32_t nnz = 0;
        for (double w : c.weights) nnz += w != 0.0;
        put_u32(out, nnz);
        for (std::size_t j = 0; j < c.weights.size(); ++j)
            if (c.weights[j] != 0.0) {
                put_u32(out, static_cast<std::uint32_t>(j));
                put_f64(out, c.weights[j]);
            }
    }
    return out;
}

HierarchicalModel load_model(std::string_view bytes) {
    Reader r(bytes);
    const auto magic = r.bytes(sizeof kMagic);
    if (std::memcmp(magic.data(), kMagic, sizeof kMagic) != 0) throw InputError("not a model file (bad magic)");
    const std::uint32_t version = r.u32();
    if (version != HierarchicalModel::kFormatVersion)
        throw IncompatibleModelError("model format version " + std::to_string(version) + " is not supported (expected " +
                                     std::to_string(HierarchicalModel::kFormatVersion) + ")");
    const std::uint64_t meta_len = r.u64();
    const auto meta_text = r.bytes(meta_len);

    HierarchicalModel m;
    try {
        const json meta = json::parse(meta_text);
        m.threshold = meta.at("threshold").get<double>();
        m.trained_on = meta.at("trained_on").get<std::string>();
        apply_train_config(meta.at("config"), m.config);
        m.sample_counts = int_keyed_from<int>(meta.at("sample_counts"));
        m.label_nodes = meta.at("label_nodes").get<std::vector<int>>();
        const json& h = meta.at("hierarchy");
        std::vector<CweEntry> entries;
        const auto parents = int_keyed_from<std::vector<int>>(h.at("parents"));
        for (int n : h.at("nodes").get<std::vector<int>>()) {
            CweEntry e;
            e.id = n;
            auto it = parents.find(n);
            if (it != parents.end()) e.parents = it->second;
            entries.push_back(std::move(e));
        }
        m.hierarchy = build_hierarchy(entries);
        m.hierarchy.training_index = int_keyed_from<std::vector<std::string>>(h.at("training_index"));
        m.codebook = SynonymCodebook::import_tsv(meta.at("codebook").get<std::string>());
        const json& v = meta.at("vocabulary");
        m.vocabulary = Vocabulary(v.at("terms").get<std::vector<std::string>>(),
                                  v.at("doc_frequency").get<std::vector<std::uint32_t>>(),
                                  v.at("corpus_size").get<std::size_t>(), v.at("n_max").get<int>());
        m.stopwords = meta.at("stopwords").get<std::vector<std::string>>();
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model metadata: ") + e.what(), 20 + e.byte);
    } catch (const json::exception& e) {
        throw InputError(std::string("model metadata: ") + e.what());
    }
    if (!(m.threshold > 0 && m.threshold < 1)) throw InputError("model threshold outside (0,1)");

    const std::uint32_t count = r.u32();
    const std::size_t dim = m.vocabulary.size();
    for (std::uint32_t i = 0; i < count; ++i) {
        NodeClassifier c;
        c.node = static_cast<int>(r.u32());
        c.bias = r.f64();
        c.weights.assign(dim, 0.0);
        const std::uint32_t nnz = r.u32();
        for (std::uint32_t k = 0; k < nnz; ++k) {
            const std::uint32_t j = r.u32();
            const double w = r.f64();
            if (j >= dim) throw InputError("model file: weight index out of range for " + cwe_label(c.node));
            c.weights[j] = w;
        }
        if (!m.hierarchy.contains(c.node)) throw InputError("model file: classifier for unknown node " + cwe_label(c.node));
        m.classifiers.emplace(c.node, std::move(c));
    }
    if (!r.done()) throw ParseError("model file has trailing bytes", r.pos());
    m.rebuild_views();
    return m;
}

std::string model_id(std::string_view bytes) { return sha256_hex(bytes).substr(0, 16); }

}  // namespace vulnmap
