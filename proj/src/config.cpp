#include "dynsel/config.hpp"

#include "dynsel/errors.hpp"

namespace dynsel {

const char* to_string(CombinationMode m) {
    switch (m) {
    case CombinationMode::selection: return "selection";
    case CombinationMode::weighting: return "weighting";
    case CombinationMode::hybrid: return "hybrid";
    }
    return "?";
}

CombinationMode parse_mode(const std::string& name) {
    if (name == "selection") return CombinationMode::selection;
    if (name == "weighting") return CombinationMode::weighting;
    if (name == "hybrid") return CombinationMode::hybrid;
    throw ValidationError("unknown mode '" + name + "' (expected selection|weighting|hybrid)");
}

void DSConfig::check() const {
    if (k < 1) throw ValidationError("config: k must be >= 1");
    if (kp < 1) throw ValidationError("config: kp must be >= 1");
    if (similarity_threshold < 0.0 || similarity_threshold > 1.0)
        throw ValidationError("config: similarity_threshold must be in [0,1]");
    if (gamma < 0.0 || gamma > 1.0) throw ValidationError("config: gamma must be in [0,1]");
    if (!(pct_accuracy > 0.0 && pct_accuracy <= 1.0))
        throw ValidationError("config: pct_accuracy must be in (0,1]");
    if (!(pct_diversity > 0.0 && pct_diversity <= 1.0))
        throw ValidationError("config: pct_diversity must be in (0,1]");
    if (n_clusters < 1) throw ValidationError("config: n_clusters must be >= 1");
    if (pool_size < 1) throw ValidationError("config: pool_size must be >= 1");
    if (rrc_draws < 1) throw ValidationError("config: rrc_draws must be >= 1");
    if (meta_k && *meta_k < 1) throw ValidationError("config: meta_k must be >= 1");
    if (diff_threshold && *diff_threshold < 0.0)
        throw ValidationError("config: diff_threshold must be >= 0");
}

} // namespace dynsel
