#pragma once

#include "dynsel/base_classifier.hpp"
#include "dynsel/dataset.hpp"
#include "dynsel/decision_tree.hpp"

#include <cstdint>
#include <random>

namespace dynsel {

enum class LearnerKind { tree, perceptron, mixed };

const char* to_string(LearnerKind k);
LearnerKind parse_learner_kind(const std::string& name);

struct PoolParams {
    LearnerKind kind = LearnerKind::tree;
    TreeParams tree{};
    int perceptron_epochs = 50;
    bool bootstrap = true; // test hook; production pools always resample
};

// n indices drawn uniformly with replacement.
std::vector<std::size_t> bootstrap_indices(std::size_t n, std::mt19937_64& rng);

// Trains L members on bootstrap resamples of `train`. Member i draws from a
// stream seeded with seed ^ i, so members are independent of each other and
// of training order. `mixed` alternates tree and perceptron members.
TrainedPool generate_bagging_pool(const Dataset& train, int pool_size, const PoolParams& params,
                                  std::uint64_t seed);

// JSON round-trip for tree/perceptron pools.
std::string pool_to_json(const TrainedPool& pool);
TrainedPool pool_from_json(const std::string& text);
void save_pool(const TrainedPool& pool, const std::string& path);
TrainedPool load_pool(const std::string& path);

} // namespace dynsel
