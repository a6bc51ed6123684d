#include "dynsel/decision_tree.hpp"

#include "dynsel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dynsel {

namespace {

double gini(std::span<const std::size_t> counts, std::size_t total) {
    if (total == 0) return 0.0;
    double s = 0.0;
    for (std::size_t c : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        s += p * p;
    }
    return 1.0 - s;
}

struct SplitChoice {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double gain = -1.0;
};

struct TreeBuilder {
    const Matrix& X;
    std::span<const int> y;
    int M;
    TreeParams params;
    std::vector<DecisionTree::Node> nodes;

    int build(std::vector<std::size_t>& rows, int depth) {
        std::vector<std::size_t> counts(static_cast<std::size_t>(M), 0);
        for (std::size_t r : rows) ++counts[static_cast<std::size_t>(y[r])];
        const bool pure = std::count(counts.begin(), counts.end(), std::size_t{0}) ==
                          static_cast<std::ptrdiff_t>(M) - 1;

        SplitChoice split;
        if (!pure && depth < params.max_depth &&
            rows.size() >= 2 * static_cast<std::size_t>(params.min_leaf))
            split = best_split(rows, counts);

        if (!split.found) return make_leaf(counts, rows.size());

        std::vector<std::size_t> left, right;
        for (std::size_t r : rows) {
            if (X(r, static_cast<std::size_t>(split.feature)) <= split.threshold)
                left.push_back(r);
            else
                right.push_back(r);
        }
        const int id = static_cast<int>(nodes.size());
        nodes.emplace_back();
        nodes[static_cast<std::size_t>(id)].feature = split.feature;
        nodes[static_cast<std::size_t>(id)].threshold = split.threshold;
        const int l = build(left, depth + 1);
        const int r = build(right, depth + 1);
        nodes[static_cast<std::size_t>(id)].left = l;
        nodes[static_cast<std::size_t>(id)].right = r;
        return id;
    }

    int make_leaf(std::span<const std::size_t> counts, std::size_t n) {
        DecisionTree::Node leaf;
        leaf.proba.resize(static_cast<std::size_t>(M));
        const double denom = static_cast<double>(n) + static_cast<double>(M);
        for (int c = 0; c < M; ++c)
            leaf.proba[static_cast<std::size_t>(c)] =
                (static_cast<double>(counts[static_cast<std::size_t>(c)]) + 1.0) / denom;
        nodes.push_back(std::move(leaf));
        return static_cast<int>(nodes.size()) - 1;
    }

    SplitChoice best_split(const std::vector<std::size_t>& rows, std::span<const std::size_t> counts) {
        SplitChoice best;
        const std::size_t n = rows.size();
        const double parent = gini(counts, n);
        std::vector<std::pair<double, int>> column(n);

        for (std::size_t f = 0; f < X.cols(); ++f) {
            for (std::size_t i = 0; i < n; ++i)
                column[i] = {X(rows[i], f), y[rows[i]]};
            std::sort(column.begin(), column.end());

            std::vector<std::size_t> left_counts(static_cast<std::size_t>(M), 0);
            std::size_t n_left = 0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                ++left_counts[static_cast<std::size_t>(column[i].second)];
                ++n_left;
                if (column[i].first == column[i + 1].first) continue;
                if (n_left < static_cast<std::size_t>(params.min_leaf) ||
                    n - n_left < static_cast<std::size_t>(params.min_leaf))
                    continue;

                std::vector<std::size_t> right_counts(static_cast<std::size_t>(M));
                for (int c = 0; c < M; ++c)
                    right_counts[static_cast<std::size_t>(c)] =
                        counts[static_cast<std::size_t>(c)] - left_counts[static_cast<std::size_t>(c)];
                const double wl = static_cast<double>(n_left) / static_cast<double>(n);
                const double gain = parent - wl * gini(left_counts, n_left) -
                                    (1.0 - wl) * gini(right_counts, n - n_left);
                const double threshold = 0.5 * (column[i].first + column[i + 1].first);
                if (!best.found || gain > best.gain + 1e-12) {
                    best = {true, static_cast<int>(f), threshold, gain};
                }
            }
        }
        return best;
    }
};

} // namespace

std::vector<double> DecisionTree::predict_proba(std::span<const double> x) const {
    int id = 0;
    while (nodes_[static_cast<std::size_t>(id)].feature >= 0) {
        const auto& n = nodes_[static_cast<std::size_t>(id)];
        id = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
    }
    return nodes_[static_cast<std::size_t>(id)].proba;
}

DecisionTree DecisionTree::from_nodes(std::vector<Node> nodes, int n_classes) {
    DecisionTree t;
    t.nodes_ = std::move(nodes);
    t.n_classes_ = n_classes;
    if (t.nodes_.empty()) throw ValidationError("tree: empty node list");
    return t;
}

DecisionTree train_tree(const Matrix& X, std::span<const int> y, int n_classes, const TreeParams& p) {
    if (X.rows() == 0) throw ValidationError("train_tree: empty dataset");
    if (p.max_depth < 1 || p.min_leaf < 1) throw ValidationError("train_tree: bad params");
    TreeBuilder b{X, y, n_classes, p, {}};
    std::vector<std::size_t> rows(X.rows());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    b.build(rows, 0);
    DecisionTree t;
    t.nodes_ = std::move(b.nodes);
    t.n_classes_ = n_classes;
    return t;
}

DecisionTree train_tree(const Dataset& d, const TreeParams& p) {
    return train_tree(d.features, d.labels, d.n_classes, p);
}

} // namespace dynsel
