#pragma once

#include "dynsel/base_classifier.hpp"
#include "dynsel/dataset.hpp"

namespace dynsel {

// Neighbors of one query, nearest first. Distance ties resolve to the lower
// sample index.
struct CompetenceRegion {
    std::vector<int> indices;
    std::vector<double> distances;

    std::size_t size() const { return indices.size(); }
    bool empty() const { return indices.empty(); }
};

// The dynamic-selection dataset plus everything the pool produced on it,
// computed once at fit time. `supports` stores the per-sample concatenation
// of all members' class supports, so row j doubles as sample j's output
// profile.
struct DselState {
    Matrix features; // standardized
    std::vector<int> labels;
    int n_classes = 0;
    std::size_t pool_size = 0;
    std::vector<int> predictions;          // n x L, row-major
    std::vector<std::uint8_t> correctness; // n x L
    Matrix supports;                       // n x (L*M)

    std::size_t size() const { return labels.size(); }

    int prediction(std::size_t sample, std::size_t clf) const {
        return predictions[sample * pool_size + clf];
    }
    bool correct(std::size_t sample, std::size_t clf) const {
        return correctness[sample * pool_size + clf] != 0;
    }
    double support(std::size_t sample, std::size_t clf, std::size_t cls) const {
        return supports(sample, clf * static_cast<std::size_t>(n_classes) + cls);
    }
    std::span<const double> profile(std::size_t sample) const { return supports.row(sample); }
    std::span<const double> classifier_supports(std::size_t sample, std::size_t clf) const {
        return profile(sample).subspan(clf * static_cast<std::size_t>(n_classes),
                                       static_cast<std::size_t>(n_classes));
    }
};

DselState build_dsel_state(const TrainedPool& pool, const Dataset& dsel, const Standardizer& scaler);

// Exact brute-force Euclidean k-NN over the rows of `points`. `exclude`
// drops one row (leave-one-out); k is clamped to the available rows.
CompetenceRegion knn_search(const Matrix& points, std::span<const double> query, int k,
                            int exclude = -1);

// Strict variants: 1 <= k <= n is enforced.
CompetenceRegion knn_query(const DselState& state, std::span<const double> standardized_x, int k);
CompetenceRegion profile_knn_query(const DselState& state, std::span<const double> profile, int k);

// Concatenated supports of all pool members on one raw sample.
std::vector<double> output_profile(const TrainedPool& pool, std::span<const double> raw_x);

} // namespace dynsel
