#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace dynsel {

enum class CombinationMode { selection, weighting, hybrid };

const char* to_string(CombinationMode m);
CombinationMode parse_mode(const std::string& name);

// Every dynamic-selection hyperparameter in one place. Methods read only
// what they use.
struct DSConfig {
    int k = 7;                          // region-of-competence size
    int kp = 5;                         // output-profile neighbor count
    double similarity_threshold = 0.7;  // MCB behavior filter
    std::optional<double> diff_threshold; // DCS tie band; unset = per-method default (MCB 0.1, else 0)
    double hc = 1.0;                    // META-DES consensus cutoff
    double gamma = 0.5;                 // META-DES selection threshold
    double pct_accuracy = 0.5;          // DES-KNN accuracy fraction
    double pct_diversity = 0.3;         // DES-KNN diversity fraction
    int n_clusters = 5;                 // DES-Clustering
    CombinationMode mode = CombinationMode::selection;
    bool with_dfp = false;
    std::uint64_t seed = 42;
    int pool_size = 10;
    int rrc_draws = 1000;
    std::optional<int> meta_k;          // META-DES override of k

    double diff_threshold_for_mcb() const { return diff_threshold.value_or(0.1); }
    double diff_threshold_for_dcs() const { return diff_threshold.value_or(0.0); }
    int meta_region_size() const { return meta_k.value_or(k); }

    void check() const;
};

} // namespace dynsel
