#pragma once

#include "dynsel/base_classifier.hpp"

namespace dynsel {

// Gaussian naive Bayes with per-class/per-feature means and variances
// (variance floored at 1e-9) and frequency priors. Posteriors are computed
// in log space and normalized.
class GaussianNB final : public BaseClassifier {
public:
    GaussianNB() = default;
    GaussianNB(Matrix means, Matrix vars, std::vector<double> priors);

    std::vector<double> predict_proba(std::span<const double> x) const override;
    int n_classes() const override { return static_cast<int>(priors_.size()); }
    std::string kind() const override { return "gnb"; }

    const Matrix& means() const { return means_; }
    const Matrix& variances() const { return vars_; }
    const std::vector<double>& priors() const { return priors_; }

private:
    Matrix means_; // M x d
    Matrix vars_;  // M x d
    std::vector<double> priors_;
};

// Requires every class in [0, n_classes) to appear in y.
GaussianNB train_gnb(const Matrix& X, std::span<const int> y, int n_classes);

} // namespace dynsel
