#pragma once

#include "dynsel/base_classifier.hpp"
#include "dynsel/dataset.hpp"

#include <cstdint>

namespace dynsel {

// One-vs-rest perceptron. Updates run over seeded-shuffled epochs;
// predict_proba is the softmax of the per-class margins, so an untrained
// model (0 epochs) is uniform.
class Perceptron final : public BaseClassifier {
public:
    Perceptron() = default;
    Perceptron(Matrix weights, std::vector<double> bias);

    std::vector<double> predict_proba(std::span<const double> x) const override;
    int n_classes() const override { return static_cast<int>(bias_.size()); }
    std::string kind() const override { return "perceptron"; }

    const Matrix& weights() const { return weights_; }
    const std::vector<double>& bias() const { return bias_; }

private:
    Matrix weights_; // M x d
    std::vector<double> bias_;
};

Perceptron train_perceptron(const Matrix& X, std::span<const int> y, int n_classes, int epochs,
                            std::uint64_t seed);
Perceptron train_perceptron(const Dataset& d, int epochs, std::uint64_t seed);

std::vector<double> softmax(std::span<const double> z);

} // namespace dynsel
