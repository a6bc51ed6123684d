#include "dynsel/region.hpp"

#include "dynsel/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dynsel {

DselState build_dsel_state(const TrainedPool& pool, const Dataset& dsel, const Standardizer& scaler) {
    if (dsel.size() == 0) throw ValidationError("dsel: empty");
    pool.check();

    DselState st;
    st.features = scaler.apply(dsel.features);
    st.labels = dsel.labels;
    st.n_classes = dsel.n_classes;
    st.pool_size = pool.size();
    const std::size_t n = dsel.size();
    const std::size_t L = pool.size();
    const auto M = static_cast<std::size_t>(dsel.n_classes);

    st.predictions.resize(n * L);
    st.correctness.resize(n * L);
    st.supports = Matrix(n, L * M);
    for (std::size_t j = 0; j < n; ++j) {
        auto x = dsel.features.row(j);
        for (std::size_t i = 0; i < L; ++i) {
            auto proba = pool.members[i]->predict_proba(x);
            const int pred = argmax_index(proba);
            st.predictions[j * L + i] = pred;
            st.correctness[j * L + i] = (pred == dsel.labels[j]) ? 1 : 0;
            for (std::size_t m = 0; m < M; ++m) st.supports(j, i * M + m) = proba[m];
        }
    }
    return st;
}

CompetenceRegion knn_search(const Matrix& points, std::span<const double> query, int k, int exclude) {
    const std::size_t n = points.rows();
    std::vector<std::pair<double, int>> dist;
    dist.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (static_cast<int>(j) == exclude) continue;
        dist.emplace_back(squared_distance(points.row(j), query), static_cast<int>(j));
    }
    const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), dist.size());
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(take), dist.end());

    CompetenceRegion region;
    region.indices.reserve(take);
    region.distances.reserve(take);
    for (std::size_t j = 0; j < take; ++j) {
        region.indices.push_back(dist[j].second);
        region.distances.push_back(std::sqrt(dist[j].first));
    }
    return region;
}

CompetenceRegion knn_query(const DselState& state, std::span<const double> standardized_x, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > state.size())
        throw ValidationError("knn_query: k out of range (k=" + std::to_string(k) +
                              ", n=" + std::to_string(state.size()) + ")");
    return knn_search(state.features, standardized_x, k);
}

CompetenceRegion profile_knn_query(const DselState& state, std::span<const double> profile, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > state.size())
        throw ValidationError("profile_knn_query: k out of range (k=" + std::to_string(k) +
                              ", n=" + std::to_string(state.size()) + ")");
    return knn_search(state.supports, profile, k);
}

std::vector<double> output_profile(const TrainedPool& pool, std::span<const double> raw_x) {
    const auto M = static_cast<std::size_t>(pool.n_classes);
    std::vector<double> profile(pool.size() * M);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        auto p = pool.members[i]->predict_proba(raw_x);
        std::copy(p.begin(), p.end(), profile.begin() + static_cast<std::ptrdiff_t>(i * M));
    }
    return profile;
}

} // namespace dynsel
