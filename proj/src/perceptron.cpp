#include "dynsel/perceptron.hpp"

#include "dynsel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace dynsel {

std::vector<double> softmax(std::span<const double> z) {
    std::vector<double> out(z.size());
    const double m = *std::max_element(z.begin(), z.end());
    double total = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = std::exp(z[i] - m);
        total += out[i];
    }
    for (double& v : out) v /= total;
    return out;
}

Perceptron::Perceptron(Matrix weights, std::vector<double> bias)
    : weights_(std::move(weights)), bias_(std::move(bias)) {}

std::vector<double> Perceptron::predict_proba(std::span<const double> x) const {
    const std::size_t M = bias_.size();
    std::vector<double> margins(M);
    for (std::size_t c = 0; c < M; ++c) {
        double m = bias_[c];
        auto w = weights_.row(c);
        for (std::size_t j = 0; j < w.size(); ++j) m += w[j] * x[j];
        margins[c] = m;
    }
    return softmax(margins);
}

Perceptron train_perceptron(const Matrix& X, std::span<const int> y, int n_classes, int epochs,
                            std::uint64_t seed) {
    if (n_classes < 2) throw ValidationError("train_perceptron: needs at least 2 classes");
    const std::size_t M = static_cast<std::size_t>(n_classes);
    const std::size_t d = X.cols();
    Matrix w(M, d, 0.0);
    std::vector<double> b(M, 0.0);

    std::vector<std::size_t> order(X.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);

    for (int e = 0; e < epochs; ++e) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t r : order) {
            auto x = X.row(r);
            for (std::size_t c = 0; c < M; ++c) {
                const double target = (static_cast<std::size_t>(y[r]) == c) ? 1.0 : -1.0;
                double margin = b[c];
                for (std::size_t j = 0; j < d; ++j) margin += w(c, j) * x[j];
                if (target * margin <= 0.0) {
                    for (std::size_t j = 0; j < d; ++j) w(c, j) += target * x[j];
                    b[c] += target;
                }
            }
        }
    }
    return Perceptron(std::move(w), std::move(b));
}

Perceptron train_perceptron(const Dataset& d, int epochs, std::uint64_t seed) {
    return train_perceptron(d.features, d.labels, d.n_classes, epochs, seed);
}

} // namespace dynsel
