#include <cmath>

#include "bookboost/learners.hpp"
#include "learners_common.hpp"

namespace bookboost {

namespace {
constexpr double kVarianceFloor = 1e-9;
}

WeakModel train_naive_bayes(const Dataset& data, std::span<const double> weights) {
    const auto w = detail::effective_weights(data, weights);
    const std::size_t num_classes = data.num_classes();
    const auto& instances = data.instances();

    std::vector<double> class_weight(num_classes, 0.0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        class_weight[static_cast<std::size_t>(instances[i].label)] += w[i];
    }
    double total = 0.0;
    for (double cw : class_weight) total += cw;

    BayesModel model;
    model.log_priors.resize(num_classes);
    for (std::size_t c = 0; c < num_classes; ++c) {
        model.log_priors[c] =
            std::log((class_weight[c] + 1.0) / (total + static_cast<double>(num_classes)));
    }

    model.attributes.resize(data.num_attributes());
    for (std::size_t a = 0; a < data.num_attributes(); ++a) {
        const auto& attr = data.schema()[a];
        auto& stats = model.attributes[a];
        if (attr.is_nominal()) {
            stats.numeric = false;
            const std::size_t num_values = attr.values.size();
            std::vector<std::vector<double>> counts(num_classes,
                                                    std::vector<double>(num_values, 0.0));
            for (std::size_t i = 0; i < data.size(); ++i) {
                const double v = instances[i].values[a];
                if (is_missing(v)) continue;
                counts[static_cast<std::size_t>(instances[i].label)][static_cast<std::size_t>(v)] +=
                    w[i];
            }
            stats.nominal.log_likelihood.resize(num_classes);
            for (std::size_t c = 0; c < num_classes; ++c) {
                double seen = 0.0;
                for (double cv : counts[c]) seen += cv;
                stats.nominal.log_likelihood[c].resize(num_values);
                for (std::size_t v = 0; v < num_values; ++v) {
                    stats.nominal.log_likelihood[c][v] = std::log(
                        (counts[c][v] + 1.0) / (seen + static_cast<double>(num_values)));
                }
            }
        } else {
            stats.numeric = true;
            auto& g = stats.gaussian;
            g.mean.assign(num_classes, 0.0);
            g.variance.assign(num_classes, kVarianceFloor);
            g.defined.assign(num_classes, false);
            std::vector<double> seen(num_classes, 0.0);
            for (std::size_t i = 0; i < data.size(); ++i) {
                const double v = instances[i].values[a];
                if (is_missing(v)) continue;
                const auto c = static_cast<std::size_t>(instances[i].label);
                seen[c] += w[i];
                g.mean[c] += w[i] * v;
            }
            for (std::size_t c = 0; c < num_classes; ++c) {
                if (seen[c] > 0.0) {
                    g.mean[c] /= seen[c];
                    g.defined[c] = true;
                }
            }
            std::vector<double> sq(num_classes, 0.0);
            for (std::size_t i = 0; i < data.size(); ++i) {
                const double v = instances[i].values[a];
                if (is_missing(v)) continue;
                const auto c = static_cast<std::size_t>(instances[i].label);
                const double d = v - g.mean[c];
                sq[c] += w[i] * d * d;
            }
            for (std::size_t c = 0; c < num_classes; ++c) {
                if (g.defined[c]) {
                    g.variance[c] = std::max(sq[c] / seen[c], kVarianceFloor);
                }
            }
        }
    }
    return WeakModel(std::move(model));
}

}  // namespace bookboost
