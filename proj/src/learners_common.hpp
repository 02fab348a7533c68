#ifndef BOOKBOOST_LEARNERS_COMMON_HPP
#define BOOKBOOST_LEARNERS_COMMON_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "bookboost/dataset.hpp"

namespace bookboost::detail {

/// Validates the weight vector and rescales it to sum to the instance
/// count. Training on effective counts keeps every learner invariant under
/// weight scaling (smoothing terms and leaf-weight thresholds are absolute).
inline std::vector<double> effective_weights(const Dataset& data, std::span<const double> weights) {
    if (weights.size() != data.size()) {
        throw std::invalid_argument("weight vector length does not match instance count");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("instance weights must be >= 0");
        sum += w;
    }
    if (!(sum > 0.0)) throw std::invalid_argument("instance weights must have positive sum");
    const double scale = static_cast<double>(data.size()) / sum;
    std::vector<double> scaled(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) scaled[i] = weights[i] * scale;
    return scaled;
}

/// Lowest class index with maximal weight; `counts` has one slot per class.
inline int argmax_class(const std::vector<double>& counts) {
    int best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c) {
        if (counts[c] > counts[static_cast<std::size_t>(best)]) best = static_cast<int>(c);
    }
    return best;
}

}  // namespace bookboost::detail

#endif
