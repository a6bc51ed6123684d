#include "dynsel/pool.hpp"

#include "dynsel/errors.hpp"
#include "dynsel/perceptron.hpp"

#include <json.hpp>

#include <fstream>

namespace dynsel {

using nlohmann::json;

std::vector<int> TrainedPool::predict_all(std::span<const double> x) const {
    std::vector<int> out(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) out[i] = members[i]->predict(x);
    return out;
}

Matrix TrainedPool::predict_proba_all(std::span<const double> x) const {
    Matrix out(members.size(), static_cast<std::size_t>(n_classes));
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto p = members[i]->predict_proba(x);
        out.set_row(i, p);
    }
    return out;
}

void TrainedPool::check() const {
    if (members.empty()) throw ValidationError("pool: empty");
    for (const auto& m : members)
        if (m->n_classes() != n_classes) throw ValidationError("pool: mixed class counts");
}

const char* to_string(LearnerKind k) {
    switch (k) {
    case LearnerKind::tree: return "tree";
    case LearnerKind::perceptron: return "perceptron";
    case LearnerKind::mixed: return "mixed";
    }
    return "?";
}

LearnerKind parse_learner_kind(const std::string& name) {
    if (name == "tree") return LearnerKind::tree;
    if (name == "perceptron") return LearnerKind::perceptron;
    if (name == "mixed") return LearnerKind::mixed;
    throw ValidationError("unknown pool kind '" + name + "' (expected tree|perceptron|mixed)");
}

std::vector<std::size_t> bootstrap_indices(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> idx(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < n; ++i) idx[i] = pick(rng);
    return idx;
}

namespace {

Dataset take_rows(const Dataset& d, const std::vector<std::size_t>& rows) {
    Dataset out;
    out.n_classes = d.n_classes;
    for (std::size_t r : rows) {
        out.features.append_row(d.features.row(r));
        out.labels.push_back(d.labels[r]);
    }
    return out;
}

} // namespace

TrainedPool generate_bagging_pool(const Dataset& train, int pool_size, const PoolParams& params,
                                  std::uint64_t seed) {
    if (pool_size < 1) throw ValidationError("pool: size must be >= 1");
    TrainedPool pool;
    pool.n_classes = train.n_classes;
    for (int i = 0; i < pool_size; ++i) {
        const std::uint64_t member_seed = seed ^ static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(member_seed);
        Dataset sample;
        const Dataset* data = &train;
        if (params.bootstrap) {
            sample = take_rows(train, bootstrap_indices(train.size(), rng));
            data = &sample;
        }
        const bool use_tree = params.kind == LearnerKind::tree ||
                              (params.kind == LearnerKind::mixed && i % 2 == 0);
        if (use_tree) {
            TreeParams tp = params.tree;
            tp.seed = member_seed;
            pool.members.push_back(std::make_shared<DecisionTree>(train_tree(*data, tp)));
        } else {
            pool.members.push_back(std::make_shared<Perceptron>(
                train_perceptron(*data, params.perceptron_epochs, member_seed)));
        }
    }
    return pool;
}

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (double v : m.row(r)) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    Matrix m;
    for (const auto& row : j) {
        std::vector<double> values = row.get<std::vector<double>>();
        m.append_row(values);
    }
    return m;
}

json classifier_to_json(const BaseClassifier& c) {
    json j;
    j["kind"] = c.kind();
    if (const auto* tree = dynamic_cast<const DecisionTree*>(&c)) {
        json nodes = json::array();
        for (const auto& n : tree->nodes()) {
            json jn;
            jn["feature"] = n.feature;
            jn["threshold"] = n.threshold;
            jn["left"] = n.left;
            jn["right"] = n.right;
            jn["proba"] = n.proba;
            nodes.push_back(std::move(jn));
        }
        j["nodes"] = std::move(nodes);
        j["n_classes"] = tree->n_classes();
    } else if (const auto* p = dynamic_cast<const Perceptron*>(&c)) {
        j["weights"] = matrix_to_json(p->weights());
        j["bias"] = p->bias();
    } else {
        throw ValidationError("pool serialization: unsupported member kind '" + c.kind() + "'");
    }
    return j;
}

ClassifierPtr classifier_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "tree") {
        std::vector<DecisionTree::Node> nodes;
        for (const auto& jn : j.at("nodes")) {
            DecisionTree::Node n;
            n.feature = jn.at("feature").get<int>();
            n.threshold = jn.at("threshold").get<double>();
            n.left = jn.at("left").get<int>();
            n.right = jn.at("right").get<int>();
            n.proba = jn.at("proba").get<std::vector<double>>();
            nodes.push_back(std::move(n));
        }
        return std::make_shared<DecisionTree>(
            DecisionTree::from_nodes(std::move(nodes), j.at("n_classes").get<int>()));
    }
    if (kind == "perceptron") {
        return std::make_shared<Perceptron>(matrix_from_json(j.at("weights")),
                                            j.at("bias").get<std::vector<double>>());
    }
    throw DataError("pool file: unknown member kind '" + kind + "'");
}

} // namespace

std::string pool_to_json(const TrainedPool& pool) {
    json j;
    j["n_classes"] = pool.n_classes;
    json members = json::array();
    for (const auto& m : pool.members) members.push_back(classifier_to_json(*m));
    j["members"] = std::move(members);
    return j.dump();
}

TrainedPool pool_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("pool file: ") + e.what());
    }
    TrainedPool pool;
    try {
        pool.n_classes = j.at("n_classes").get<int>();
        for (const auto& jm : j.at("members")) pool.members.push_back(classifier_from_json(jm));
    } catch (const json::exception& e) {
        throw DataError(std::string("pool file: ") + e.what());
    }
    pool.check();
    return pool;
}

void save_pool(const TrainedPool& pool, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << pool_to_json(pool) << '\n';
}

TrainedPool load_pool(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return pool_from_json(text);
}

} // namespace dynsel
