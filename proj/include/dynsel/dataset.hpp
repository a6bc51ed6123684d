#pragma once

#include "dynsel/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dynsel {

// A labelled dataset. Labels are integer class ids in [0, n_classes).
struct Dataset {
    Matrix features;
    std::vector<int> labels;
    int n_classes = 0;
    std::vector<std::string> feature_names; // optional, from CSV header

    std::size_t size() const { return labels.size(); }
    std::size_t n_features() const { return features.cols(); }

    // Throws ValidationError if the invariants do not hold.
    void check() const;
};

// Reads a UTF-8 comma-separated file. The last column is the label (string
// or numeric); labels are encoded 0..M-1 by first appearance. Parse and
// shape errors report the offending row/column (1-based, header included).
Dataset load_csv(const std::string& path, bool has_header);

struct SplitSpec {
    double train_frac = 0.5;
    double dsel_frac = 0.25;
    double test_frac = 0.25;
    std::uint64_t seed = 42;

    void check() const;
};

struct SplitResult {
    Dataset train;
    Dataset dsel;
    Dataset test;
};

// Per-class proportional allocation (largest-remainder rounding, remainders
// awarded by running global deficit), within-class assignment by seeded
// shuffle. Every class lands in every split; classes need >= 3 samples.
SplitResult stratified_split(const Dataset& d, const SplitSpec& spec);

// Per-feature affine transform to zero mean / unit stddev (population
// stddev, floored at 1e-9 so constant features map to zero).
struct Standardizer {
    std::vector<double> means;
    std::vector<double> stddevs;

    std::vector<double> apply(std::span<const double> x) const;
    Matrix apply(const Matrix& X) const;
};

Standardizer fit_standardizer(const Matrix& X);
Standardizer fit_standardizer(const Dataset& d);

} // namespace dynsel
