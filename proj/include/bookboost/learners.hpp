#ifndef BOOKBOOST_LEARNERS_HPP
#define BOOKBOOST_LEARNERS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "bookboost/dataset.hpp"

namespace bookboost {

/// One-split model. attribute < 0 means a bare majority leaf (degenerate
/// training data). Numeric stumps send value < threshold left, >= threshold
/// right, missing to the heavier branch. Nominal stumps have one branch per
/// declared value plus a missing branch.
struct StumpModel {
    int attribute = -1;
    bool numeric = true;
    double threshold = 0.0;
    int left_label = 0;
    int right_label = 0;
    bool left_heavier = true;
    std::vector<int> branch_labels;  // nominal: per declared value
    int missing_label = 0;
    int leaf_label = 0;  // attribute < 0
};

enum class SplitCriterion { InfoGain, Gini };

struct TreeParams {
    SplitCriterion criterion = SplitCriterion::InfoGain;
    int max_depth = -1;  // < 0 means unlimited
    double min_leaf_weight = 2.0;
    double prune_fraction = 0.0;  // in [0, 1)
    std::uint64_t seed = 0;       // drives the pruning holdout shuffle
};

struct TreeNode {
    bool leaf = true;
    int label = 0;
    int attribute = -1;
    bool numeric = true;
    double threshold = 0.0;
    bool left_heavier = true;     // numeric missing routing
    int missing_child = 0;        // nominal: index into children (last one)
    std::vector<std::unique_ptr<TreeNode>> children;
};

struct TreeModel {
    std::shared_ptr<const TreeNode> root;
};

/// Gaussian / add-one-smoothed naive Bayes over the weighted distribution.
struct BayesModel {
    std::vector<double> log_priors;  // per class
    struct NominalStats {
        // log P(value | class), add-one smoothed; [class][value]
        std::vector<std::vector<double>> log_likelihood;
    };
    struct NumericStats {
        std::vector<double> mean;      // per class
        std::vector<double> variance;  // per class, floored
        std::vector<bool> defined;     // class had positive weight for this attribute
    };
    struct AttributeStats {
        bool numeric = true;
        NominalStats nominal;
        NumericStats gaussian;
    };
    std::vector<AttributeStats> attributes;
};

class WeakModel {
public:
    WeakModel() = default;
    explicit WeakModel(StumpModel m) : model_(std::move(m)) {}
    explicit WeakModel(TreeModel m) : model_(std::move(m)) {}
    explicit WeakModel(BayesModel m) : model_(std::move(m)) {}

    const StumpModel* as_stump() const { return std::get_if<StumpModel>(&model_); }
    const TreeModel* as_tree() const { return std::get_if<TreeModel>(&model_); }
    const BayesModel* as_bayes() const { return std::get_if<BayesModel>(&model_); }

private:
    std::variant<StumpModel, TreeModel, BayesModel> model_;
};

/// Minimum-weighted-error single split; ties broken by lowest attribute
/// index, then lowest threshold. Weights must have positive sum.
WeakModel train_stump(const Dataset& data, std::span<const double> weights);

/// Greedy top-down induction with optional reduced-error pruning on a
/// held-out prune_fraction of the (shuffled) data.
WeakModel train_tree(const Dataset& data, std::span<const double> weights, const TreeParams& params);

WeakModel train_naive_bayes(const Dataset& data, std::span<const double> weights);

/// Deterministic class index for one instance.
int predict(const WeakModel& model, const Instance& instance);

std::vector<int> predict_all(const WeakModel& model, const Dataset& data);

}  // namespace bookboost

#endif
