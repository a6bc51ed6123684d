#pragma once

#include "dynsel/base_classifier.hpp"
#include "dynsel/dataset.hpp"

#include <cstdint>

namespace dynsel {

struct TreeParams {
    int max_depth = 8;
    int min_leaf = 1;
    std::uint64_t seed = 0; // reserved; exhaustive splitting is deterministic
};

// Binary axis-aligned CART-style classifier. Splits maximize Gini impurity
// reduction; ties go to the lower feature index, then the lower threshold.
// Impure nodes split even at zero gain as long as a valid split exists.
// Leaf probabilities are Laplace-smoothed class frequencies.
class DecisionTree final : public BaseClassifier {
public:
    struct Node {
        int feature = -1; // -1 marks a leaf
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        std::vector<double> proba; // leaves only
    };

    std::vector<double> predict_proba(std::span<const double> x) const override;
    int n_classes() const override { return n_classes_; }
    std::string kind() const override { return "tree"; }

    const std::vector<Node>& nodes() const { return nodes_; }

    static DecisionTree from_nodes(std::vector<Node> nodes, int n_classes);

private:
    std::vector<Node> nodes_;
    int n_classes_ = 0;

    friend DecisionTree train_tree(const Matrix&, std::span<const int>, int, const TreeParams&);
};

DecisionTree train_tree(const Matrix& X, std::span<const int> y, int n_classes, const TreeParams& p);
DecisionTree train_tree(const Dataset& d, const TreeParams& p);

} // namespace dynsel
