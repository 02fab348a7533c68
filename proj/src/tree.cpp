#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "bookboost/learners.hpp"
#include "bookboost/rng.hpp"
#include "learners_common.hpp"

namespace bookboost {

namespace {

constexpr double kMinGain = 1e-12;

double impurity(SplitCriterion criterion, const std::vector<double>& counts, double total) {
    if (total <= 0.0) return 0.0;
    if (criterion == SplitCriterion::Gini) {
        double sum_sq = 0.0;
        for (double c : counts) {
            const double p = c / total;
            sum_sq += p * p;
        }
        return 1.0 - sum_sq;
    }
    double entropy = 0.0;
    for (double c : counts) {
        if (c <= 0.0) continue;
        const double p = c / total;
        entropy -= p * std::log2(p);
    }
    return entropy;
}

struct Grower {
    const Dataset& data;
    const std::vector<double>& w;
    TreeParams params;

    struct Split {
        double gain = -std::numeric_limits<double>::infinity();
        int attribute = -1;
        bool numeric = true;
        double threshold = 0.0;
        bool left_heavier = true;
    };

    std::vector<double> class_counts(const std::vector<int>& items) const {
        std::vector<double> counts(data.num_classes(), 0.0);
        for (int i : items) {
            counts[static_cast<std::size_t>(data.instances()[static_cast<std::size_t>(i)].label)] +=
                w[static_cast<std::size_t>(i)];
        }
        return counts;
    }

    /// A split is admissible when at least two branches carry
    /// min_leaf_weight or more and it improves the criterion.
    bool admissible(const std::vector<double>& branch_weights) const {
        int heavy = 0;
        for (double bw : branch_weights) heavy += bw >= params.min_leaf_weight ? 1 : 0;
        return heavy >= 2;
    }

    Split best_split(const std::vector<int>& items, const std::vector<double>& node_counts,
                     double node_weight) const {
        const double node_impurity = impurity(params.criterion, node_counts, node_weight);
        const std::size_t num_classes = data.num_classes();
        Split best;

        for (std::size_t a = 0; a < data.num_attributes(); ++a) {
            const auto& attr = data.schema()[a];
            if (attr.is_nominal()) {
                const std::size_t num_values = attr.values.size();
                std::vector<std::vector<double>> branch(num_values + 1,
                                                        std::vector<double>(num_classes, 0.0));
                std::vector<double> branch_weight(num_values + 1, 0.0);
                for (int i : items) {
                    const double v = data.instances()[static_cast<std::size_t>(i)].values[a];
                    const std::size_t b = is_missing(v) ? num_values : static_cast<std::size_t>(v);
                    branch[b][static_cast<std::size_t>(
                        data.instances()[static_cast<std::size_t>(i)].label)] +=
                        w[static_cast<std::size_t>(i)];
                    branch_weight[b] += w[static_cast<std::size_t>(i)];
                }
                int populated = 0;
                for (double bw : branch_weight) populated += bw > 0.0 ? 1 : 0;
                if (populated < 2 || !admissible(branch_weight)) continue;

                double children_impurity = 0.0;
                for (std::size_t b = 0; b <= num_values; ++b) {
                    if (branch_weight[b] > 0.0) {
                        children_impurity += branch_weight[b] / node_weight *
                                             impurity(params.criterion, branch[b], branch_weight[b]);
                    }
                }
                const double gain = node_impurity - children_impurity;
                if (gain > kMinGain && gain > best.gain) {
                    best.gain = gain;
                    best.attribute = static_cast<int>(a);
                    best.numeric = false;
                }
            } else {
                std::vector<int> present;
                std::vector<double> missing_counts(num_classes, 0.0);
                double missing_weight = 0.0;
                for (int i : items) {
                    const double v = data.instances()[static_cast<std::size_t>(i)].values[a];
                    if (is_missing(v)) {
                        missing_counts[static_cast<std::size_t>(
                            data.instances()[static_cast<std::size_t>(i)].label)] +=
                            w[static_cast<std::size_t>(i)];
                        missing_weight += w[static_cast<std::size_t>(i)];
                    } else {
                        present.push_back(i);
                    }
                }
                if (present.size() < 2) continue;
                std::sort(present.begin(), present.end(), [&](int lhs, int rhs) {
                    const double lv = data.instances()[static_cast<std::size_t>(lhs)].values[a];
                    const double rv = data.instances()[static_cast<std::size_t>(rhs)].values[a];
                    return lv != rv ? lv < rv : lhs < rhs;
                });

                std::vector<double> left(num_classes, 0.0);
                std::vector<double> right(num_classes, 0.0);
                double left_weight = 0.0;
                double right_weight = 0.0;
                for (int i : present) {
                    right[static_cast<std::size_t>(
                        data.instances()[static_cast<std::size_t>(i)].label)] +=
                        w[static_cast<std::size_t>(i)];
                    right_weight += w[static_cast<std::size_t>(i)];
                }

                std::size_t pos = 0;
                while (pos < present.size()) {
                    const double value =
                        data.instances()[static_cast<std::size_t>(present[pos])].values[a];
                    while (pos < present.size() &&
                           data.instances()[static_cast<std::size_t>(present[pos])].values[a] ==
                               value) {
                        const int i = present[pos];
                        const auto label = static_cast<std::size_t>(
                            data.instances()[static_cast<std::size_t>(i)].label);
                        left[label] += w[static_cast<std::size_t>(i)];
                        left_weight += w[static_cast<std::size_t>(i)];
                        right[label] -= w[static_cast<std::size_t>(i)];
                        right_weight -= w[static_cast<std::size_t>(i)];
                        ++pos;
                    }
                    if (pos == present.size()) break;
                    const double next =
                        data.instances()[static_cast<std::size_t>(present[pos])].values[a];
                    const double threshold = value + (next - value) / 2.0;

                    const bool left_heavier = left_weight >= right_weight;
                    double lw = left_weight;
                    double rw = right_weight;
                    std::vector<double> lc = left;
                    std::vector<double> rc = right;
                    if (missing_weight > 0.0) {
                        auto& target = left_heavier ? lc : rc;
                        for (std::size_t c = 0; c < num_classes; ++c) target[c] += missing_counts[c];
                        (left_heavier ? lw : rw) += missing_weight;
                    }
                    if (!admissible({lw, rw})) continue;
                    const double children_impurity =
                        lw / node_weight * impurity(params.criterion, lc, lw) +
                        rw / node_weight * impurity(params.criterion, rc, rw);
                    const double gain = node_impurity - children_impurity;
                    if (gain > kMinGain && gain > best.gain) {
                        best.gain = gain;
                        best.attribute = static_cast<int>(a);
                        best.numeric = true;
                        best.threshold = threshold;
                        best.left_heavier = left_heavier;
                    }
                }
            }
        }
        return best;
    }

    std::unique_ptr<TreeNode> grow(const std::vector<int>& items, int depth) const {
        auto node = std::make_unique<TreeNode>();
        const auto counts = class_counts(items);
        double node_weight = 0.0;
        for (double c : counts) node_weight += c;
        node->label = detail::argmax_class(counts);
        if (node_weight <= 0.0) return node;
        const double majority_weight = counts[static_cast<std::size_t>(node->label)];
        if (majority_weight == node_weight) return node;  // pure
        if (params.max_depth >= 0 && depth >= params.max_depth) return node;

        const Split split = best_split(items, counts, node_weight);
        if (split.attribute < 0) return node;

        node->leaf = false;
        node->attribute = split.attribute;
        node->numeric = split.numeric;
        node->threshold = split.threshold;
        node->left_heavier = split.left_heavier;

        const auto a = static_cast<std::size_t>(split.attribute);
        if (split.numeric) {
            std::vector<int> left_items;
            std::vector<int> right_items;
            for (int i : items) {
                const double v = data.instances()[static_cast<std::size_t>(i)].values[a];
                const bool left = is_missing(v) ? split.left_heavier : v < split.threshold;
                (left ? left_items : right_items).push_back(i);
            }
            node->children.push_back(grow(left_items, depth + 1));
            node->children.push_back(grow(right_items, depth + 1));
        } else {
            const std::size_t num_values = data.schema()[a].values.size();
            std::vector<std::vector<int>> branch_items(num_values + 1);
            for (int i : items) {
                const double v = data.instances()[static_cast<std::size_t>(i)].values[a];
                const std::size_t b = is_missing(v) ? num_values : static_cast<std::size_t>(v);
                branch_items[b].push_back(i);
            }
            node->missing_child = static_cast<int>(num_values);
            for (const auto& child_items : branch_items) {
                if (child_items.empty()) {
                    auto leaf = std::make_unique<TreeNode>();
                    leaf->label = node->label;
                    node->children.push_back(std::move(leaf));
                } else {
                    node->children.push_back(grow(child_items, depth + 1));
                }
            }
        }
        return node;
    }
};

int route_child(const TreeNode& node, const Instance& inst) {
    const double v = inst.values[static_cast<std::size_t>(node.attribute)];
    if (node.numeric) {
        if (is_missing(v)) return node.left_heavier ? 0 : 1;
        return v < node.threshold ? 0 : 1;
    }
    if (is_missing(v)) return node.missing_child;
    return static_cast<int>(v);
}

/// Reduced-error pruning: collapse a subtree to its majority leaf whenever
/// that does not increase held-out weighted error. Returns the subtree's
/// held-out error after pruning.
double prune_rep(TreeNode& node, const Dataset& data, const std::vector<double>& w,
                 const std::vector<int>& holdout) {
    double leaf_error = 0.0;
    for (int i : holdout) {
        if (data.instances()[static_cast<std::size_t>(i)].label != node.label) {
            leaf_error += w[static_cast<std::size_t>(i)];
        }
    }
    if (node.leaf) return leaf_error;

    std::vector<std::vector<int>> routed(node.children.size());
    for (int i : holdout) {
        routed[static_cast<std::size_t>(route_child(node, data.instances()[static_cast<std::size_t>(i)]))]
            .push_back(i);
    }
    double subtree_error = 0.0;
    for (std::size_t c = 0; c < node.children.size(); ++c) {
        subtree_error += prune_rep(*node.children[c], data, w, routed[c]);
    }
    if (leaf_error <= subtree_error) {
        node.leaf = true;
        node.children.clear();
        node.attribute = -1;
        return leaf_error;
    }
    return subtree_error;
}

}  // namespace

WeakModel train_tree(const Dataset& data, std::span<const double> weights, const TreeParams& params) {
    if (params.prune_fraction < 0.0 || params.prune_fraction >= 1.0) {
        throw std::invalid_argument("prune_fraction must lie in [0, 1)");
    }
    const auto w = detail::effective_weights(data, weights);

    std::vector<int> order(data.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

    std::vector<int> grow_items;
    std::vector<int> holdout;
    const auto holdout_count =
        static_cast<std::size_t>(params.prune_fraction * static_cast<double>(data.size()));
    if (params.prune_fraction > 0.0 && holdout_count > 0) {
        Rng rng(mix_seed(params.seed, 0x7265705f74726565ULL));
        rng.shuffle(order);
        grow_items.assign(order.begin(), order.end() - static_cast<std::ptrdiff_t>(holdout_count));
        holdout.assign(order.end() - static_cast<std::ptrdiff_t>(holdout_count), order.end());
        std::sort(grow_items.begin(), grow_items.end());
        std::sort(holdout.begin(), holdout.end());
    } else {
        grow_items = order;
    }
    // keep only instances that carry weight
    std::erase_if(grow_items, [&](int i) { return w[static_cast<std::size_t>(i)] <= 0.0; });
    std::erase_if(holdout, [&](int i) { return w[static_cast<std::size_t>(i)] <= 0.0; });
    if (grow_items.empty()) {
        // the shuffle put every weighted instance into the holdout; grow unpruned
        grow_items.clear();
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (w[i] > 0.0) grow_items.push_back(static_cast<int>(i));
        }
        holdout.clear();
    }

    Grower grower{data, w, params};
    auto root = grower.grow(grow_items, 0);
    if (!holdout.empty()) prune_rep(*root, data, w, holdout);

    TreeModel model;
    model.root = std::shared_ptr<const TreeNode>(std::move(root));
    return WeakModel(std::move(model));
}

}  // namespace bookboost
