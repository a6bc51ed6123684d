#pragma once

#include "dynsel/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dynsel {

// Contract shared by all pool members: predict_proba returns a nonnegative
// vector over the classes summing to 1; predict is its argmax with the
// lowest class index winning ties.
class BaseClassifier {
public:
    virtual ~BaseClassifier() = default;

    virtual std::vector<double> predict_proba(std::span<const double> x) const = 0;
    virtual int n_classes() const = 0;
    virtual std::string kind() const = 0;

    int predict(std::span<const double> x) const { return argmax_index(predict_proba(x)); }
};

using ClassifierPtr = std::shared_ptr<const BaseClassifier>;

// Ordered, immutable collection of fitted classifiers. The index of a member
// is its identity everywhere downstream.
struct TrainedPool {
    std::vector<ClassifierPtr> members;
    int n_classes = 0;

    std::size_t size() const { return members.size(); }

    std::vector<int> predict_all(std::span<const double> x) const;
    Matrix predict_proba_all(std::span<const double> x) const; // L x M

    void check() const;
};

} // namespace dynsel
