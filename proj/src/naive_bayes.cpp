#include "dynsel/naive_bayes.hpp"

#include "dynsel/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace dynsel {

GaussianNB::GaussianNB(Matrix means, Matrix vars, std::vector<double> priors)
    : means_(std::move(means)), vars_(std::move(vars)), priors_(std::move(priors)) {}

std::vector<double> GaussianNB::predict_proba(std::span<const double> x) const {
    const std::size_t M = priors_.size();
    const std::size_t d = means_.cols();
    std::vector<double> log_post(M);
    for (std::size_t c = 0; c < M; ++c) {
        double lp = std::log(priors_[c]);
        for (std::size_t j = 0; j < d; ++j) {
            const double v = vars_(c, j);
            const double diff = x[j] - means_(c, j);
            lp += -0.5 * (std::log(2.0 * std::numbers::pi * v) + diff * diff / v);
        }
        log_post[c] = lp;
    }
    // softmax over log posteriors
    double m = log_post[0];
    for (double v : log_post) m = std::max(m, v);
    double total = 0.0;
    std::vector<double> out(M);
    for (std::size_t c = 0; c < M; ++c) {
        out[c] = std::exp(log_post[c] - m);
        total += out[c];
    }
    for (double& v : out) v /= total;
    return out;
}

GaussianNB train_gnb(const Matrix& X, std::span<const int> y, int n_classes) {
    const std::size_t M = static_cast<std::size_t>(n_classes);
    const std::size_t d = X.cols();
    const std::size_t n = X.rows();

    std::vector<std::size_t> counts(M, 0);
    for (int label : y) ++counts[static_cast<std::size_t>(label)];
    for (std::size_t c = 0; c < M; ++c)
        if (counts[c] == 0)
            throw ValidationError("train_gnb: class " + std::to_string(c) + " absent from labels");

    Matrix means(M, d, 0.0);
    Matrix vars(M, d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        for (std::size_t j = 0; j < d; ++j) means(c, j) += X(i, j);
    }
    for (std::size_t c = 0; c < M; ++c)
        for (std::size_t j = 0; j < d; ++j) means(c, j) /= static_cast<double>(counts[c]);
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        for (std::size_t j = 0; j < d; ++j) {
            const double diff = X(i, j) - means(c, j);
            vars(c, j) += diff * diff;
        }
    }
    std::vector<double> priors(M);
    for (std::size_t c = 0; c < M; ++c) {
        for (std::size_t j = 0; j < d; ++j)
            vars(c, j) = std::max(vars(c, j) / static_cast<double>(counts[c]), 1e-9);
        priors[c] = static_cast<double>(counts[c]) / static_cast<double>(n);
    }
    return GaussianNB(std::move(means), std::move(vars), std::move(priors));
}

} // namespace dynsel
