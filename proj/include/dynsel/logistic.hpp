#pragma once

#include "dynsel/base_classifier.hpp"

namespace dynsel {

struct LogisticParams {
    int epochs = 200;
    double lr = 0.1;
    double l2 = 1e-4;
};

// Multinomial logistic model trained by full-batch gradient descent on
// cross-entropy plus an L2 penalty (bias excluded). Weights start at zero,
// so a 0-epoch model is uniform.
class LogisticModel final : public BaseClassifier {
public:
    LogisticModel() = default;
    LogisticModel(Matrix weights, std::vector<double> bias);

    std::vector<double> predict_proba(std::span<const double> x) const override;
    int n_classes() const override { return static_cast<int>(bias_.size()); }
    std::string kind() const override { return "logistic"; }

    const Matrix& weights() const { return weights_; }
    const std::vector<double>& bias() const { return bias_; }

private:
    Matrix weights_; // M x d
    std::vector<double> bias_;
};

LogisticModel train_logistic(const Matrix& X, std::span<const int> y, int n_classes,
                             const LogisticParams& p = {});

// Mean cross-entropy + (l2/2)*||W||^2 of the given parameters; the quantity
// train_logistic descends and the target for gradient checks.
double logistic_loss(const Matrix& X, std::span<const int> y, int n_classes, const Matrix& weights,
                     std::span<const double> bias, double l2);

// Gradient of logistic_loss with respect to the weights and bias.
void logistic_gradient(const Matrix& X, std::span<const int> y, int n_classes, const Matrix& weights,
                       std::span<const double> bias, double l2, Matrix& grad_w,
                       std::vector<double>& grad_b);

} // namespace dynsel
