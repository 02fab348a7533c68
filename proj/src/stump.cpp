#include <algorithm>
#include <cmath>
#include <limits>

#include "bookboost/learners.hpp"
#include "learners_common.hpp"

namespace bookboost {

namespace {

struct Candidate {
    double error = std::numeric_limits<double>::infinity();
    StumpModel model;
};

/// Strict lexicographic improvement: error, then attribute, then threshold.
/// Candidates are generated in (attribute, threshold) order, so a simple
/// strict-less-than on error keeps the first minimiser.
bool improves(double error, const Candidate& best) { return error < best.error; }

}  // namespace

WeakModel train_stump(const Dataset& data, std::span<const double> weights) {
    const auto w = detail::effective_weights(data, weights);
    const std::size_t n = data.size();
    const std::size_t num_classes = data.num_classes();
    const auto& instances = data.instances();

    std::vector<int> active;
    active.reserve(n);
    std::vector<double> global_counts(num_classes, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] > 0.0) {
            active.push_back(static_cast<int>(i));
            global_counts[static_cast<std::size_t>(instances[i].label)] += w[i];
        }
    }
    const int global_majority = detail::argmax_class(global_counts);
    double active_weight = 0.0;
    for (int i : active) active_weight += w[static_cast<std::size_t>(i)];

    Candidate best;

    for (std::size_t a = 0; a < data.num_attributes(); ++a) {
        const auto& attr = data.schema()[a];
        if (attr.is_nominal()) {
            const std::size_t num_values = attr.values.size();
            std::vector<std::vector<double>> branch(num_values + 1,
                                                    std::vector<double>(num_classes, 0.0));
            std::vector<double> branch_weight(num_values + 1, 0.0);
            for (int i : active) {
                const double v = instances[static_cast<std::size_t>(i)].values[a];
                const std::size_t b = is_missing(v) ? num_values : static_cast<std::size_t>(v);
                branch[b][static_cast<std::size_t>(instances[static_cast<std::size_t>(i)].label)] +=
                    w[static_cast<std::size_t>(i)];
                branch_weight[b] += w[static_cast<std::size_t>(i)];
            }
            int populated = 0;
            for (double bw : branch_weight) populated += bw > 0.0 ? 1 : 0;
            if (populated < 2) continue;  // all instances in one branch: no split

            double correct = 0.0;
            std::vector<int> labels(num_values + 1, global_majority);
            for (std::size_t b = 0; b <= num_values; ++b) {
                if (branch_weight[b] > 0.0) {
                    labels[b] = detail::argmax_class(branch[b]);
                    correct += branch[b][static_cast<std::size_t>(labels[b])];
                }
            }
            const double error = active_weight - correct;
            if (improves(error, best)) {
                StumpModel m;
                m.attribute = static_cast<int>(a);
                m.numeric = false;
                m.branch_labels.assign(labels.begin(), labels.end() - 1);
                m.missing_label = labels[num_values];
                best = Candidate{error, std::move(m)};
            }
        } else {
            std::vector<int> present;
            std::vector<double> missing_counts(num_classes, 0.0);
            double missing_weight = 0.0;
            for (int i : active) {
                const double v = instances[static_cast<std::size_t>(i)].values[a];
                if (is_missing(v)) {
                    missing_counts[static_cast<std::size_t>(
                        instances[static_cast<std::size_t>(i)].label)] += w[static_cast<std::size_t>(i)];
                    missing_weight += w[static_cast<std::size_t>(i)];
                } else {
                    present.push_back(i);
                }
            }
            if (present.size() < 2) continue;
            std::sort(present.begin(), present.end(), [&](int lhs, int rhs) {
                const double lv = instances[static_cast<std::size_t>(lhs)].values[a];
                const double rv = instances[static_cast<std::size_t>(rhs)].values[a];
                return lv != rv ? lv < rv : lhs < rhs;
            });

            std::vector<double> left_counts(num_classes, 0.0);
            std::vector<double> right_counts(num_classes, 0.0);
            double left_weight = 0.0;
            double right_weight = 0.0;
            for (int i : present) {
                right_counts[static_cast<std::size_t>(instances[static_cast<std::size_t>(i)].label)] +=
                    w[static_cast<std::size_t>(i)];
                right_weight += w[static_cast<std::size_t>(i)];
            }

            std::size_t pos = 0;
            while (pos < present.size()) {
                // advance over one block of equal values
                const double value =
                    instances[static_cast<std::size_t>(present[pos])].values[a];
                while (pos < present.size() &&
                       instances[static_cast<std::size_t>(present[pos])].values[a] == value) {
                    const int i = present[pos];
                    const auto label =
                        static_cast<std::size_t>(instances[static_cast<std::size_t>(i)].label);
                    left_counts[label] += w[static_cast<std::size_t>(i)];
                    left_weight += w[static_cast<std::size_t>(i)];
                    right_counts[label] -= w[static_cast<std::size_t>(i)];
                    right_weight -= w[static_cast<std::size_t>(i)];
                    ++pos;
                }
                if (pos == present.size()) break;
                const double next =
                    instances[static_cast<std::size_t>(present[pos])].values[a];
                const double threshold = value + (next - value) / 2.0;

                const bool left_heavier = left_weight >= right_weight;
                double correct = 0.0;
                int left_label = 0;
                int right_label = 0;
                {
                    double best_left = -1.0;
                    double best_right = -1.0;
                    for (std::size_t c = 0; c < num_classes; ++c) {
                        const double lc = left_counts[c] + (left_heavier ? missing_counts[c] : 0.0);
                        const double rc = right_counts[c] + (left_heavier ? 0.0 : missing_counts[c]);
                        if (lc > best_left) {
                            best_left = lc;
                            left_label = static_cast<int>(c);
                        }
                        if (rc > best_right) {
                            best_right = rc;
                            right_label = static_cast<int>(c);
                        }
                    }
                    correct = best_left + best_right;
                }
                const double error = active_weight - correct;
                if (improves(error, best)) {
                    StumpModel m;
                    m.attribute = static_cast<int>(a);
                    m.numeric = true;
                    m.threshold = threshold;
                    m.left_label = left_label;
                    m.right_label = right_label;
                    m.left_heavier = left_heavier;
                    best = Candidate{error, std::move(m)};
                }
            }
        }
    }

    if (!std::isfinite(best.error)) {
        StumpModel leaf;
        leaf.attribute = -1;
        leaf.leaf_label = global_majority;
        return WeakModel(std::move(leaf));
    }
    return WeakModel(std::move(best.model));
}

}  // namespace bookboost
