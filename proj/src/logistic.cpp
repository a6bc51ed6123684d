#include "dynsel/logistic.hpp"

#include "dynsel/errors.hpp"
#include "dynsel/perceptron.hpp" // softmax

#include <cmath>

namespace dynsel {

LogisticModel::LogisticModel(Matrix weights, std::vector<double> bias)
    : weights_(std::move(weights)), bias_(std::move(bias)) {}

std::vector<double> LogisticModel::predict_proba(std::span<const double> x) const {
    const std::size_t M = bias_.size();
    std::vector<double> logits(M);
    for (std::size_t c = 0; c < M; ++c) {
        double z = bias_[c];
        auto w = weights_.row(c);
        for (std::size_t j = 0; j < w.size(); ++j) z += w[j] * x[j];
        logits[c] = z;
    }
    return softmax(logits);
}

namespace {

std::vector<double> row_proba(const Matrix& W, std::span<const double> b, std::span<const double> x) {
    std::vector<double> logits(b.size());
    for (std::size_t c = 0; c < b.size(); ++c) {
        double z = b[c];
        auto w = W.row(c);
        for (std::size_t j = 0; j < w.size(); ++j) z += w[j] * x[j];
        logits[c] = z;
    }
    return softmax(logits);
}

} // namespace

double logistic_loss(const Matrix& X, std::span<const int> y, int n_classes, const Matrix& weights,
                     std::span<const double> bias, double l2) {
    (void)n_classes;
    const std::size_t n = X.rows();
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = row_proba(weights, bias, X.row(i));
        loss += -std::log(std::max(p[static_cast<std::size_t>(y[i])], 1e-300));
    }
    loss /= static_cast<double>(n);
    double reg = 0.0;
    for (double w : weights.data()) reg += w * w;
    return loss + 0.5 * l2 * reg;
}

void logistic_gradient(const Matrix& X, std::span<const int> y, int n_classes, const Matrix& weights,
                       std::span<const double> bias, double l2, Matrix& grad_w,
                       std::vector<double>& grad_b) {
    const std::size_t M = static_cast<std::size_t>(n_classes);
    const std::size_t d = X.cols();
    const std::size_t n = X.rows();
    grad_w = Matrix(M, d, 0.0);
    grad_b.assign(M, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        auto x = X.row(i);
        auto p = row_proba(weights, bias, x);
        for (std::size_t c = 0; c < M; ++c) {
            const double err = p[c] - ((static_cast<std::size_t>(y[i]) == c) ? 1.0 : 0.0);
            for (std::size_t j = 0; j < d; ++j) grad_w(c, j) += err * x[j];
            grad_b[c] += err;
        }
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t c = 0; c < M; ++c) {
        for (std::size_t j = 0; j < d; ++j) grad_w(c, j) = grad_w(c, j) * inv_n + l2 * weights(c, j);
        grad_b[c] *= inv_n;
    }
}

LogisticModel train_logistic(const Matrix& X, std::span<const int> y, int n_classes,
                             const LogisticParams& p) {
    if (X.rows() < static_cast<std::size_t>(n_classes))
        throw ValidationError("train_logistic: fewer samples than classes");
    const std::size_t M = static_cast<std::size_t>(n_classes);
    const std::size_t d = X.cols();
    Matrix W(M, d, 0.0);
    std::vector<double> b(M, 0.0);
    Matrix gw;
    std::vector<double> gb;
    for (int e = 0; e < p.epochs; ++e) {
        logistic_gradient(X, y, n_classes, W, b, p.l2, gw, gb);
        for (std::size_t c = 0; c < M; ++c) {
            for (std::size_t j = 0; j < d; ++j) W(c, j) -= p.lr * gw(c, j);
            b[c] -= p.lr * gb[c];
        }
    }
    return LogisticModel(std::move(W), std::move(b));
}

} // namespace dynsel
