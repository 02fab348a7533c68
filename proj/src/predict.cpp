#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bookboost/learners.hpp"

namespace bookboost {

namespace {

int predict_stump(const StumpModel& m, const Instance& inst) {
    if (m.attribute < 0) return m.leaf_label;
    const double v = inst.values[static_cast<std::size_t>(m.attribute)];
    if (m.numeric) {
        if (is_missing(v)) return m.left_heavier ? m.left_label : m.right_label;
        return v < m.threshold ? m.left_label : m.right_label;
    }
    if (is_missing(v)) return m.missing_label;
    return m.branch_labels[static_cast<std::size_t>(v)];
}

int predict_tree(const TreeModel& m, const Instance& inst) {
    const TreeNode* node = m.root.get();
    while (!node->leaf) {
        const double v = inst.values[static_cast<std::size_t>(node->attribute)];
        std::size_t child;
        if (node->numeric) {
            if (is_missing(v)) {
                child = node->left_heavier ? 0 : 1;
            } else {
                child = v < node->threshold ? 0 : 1;
            }
        } else {
            child = is_missing(v) ? static_cast<std::size_t>(node->missing_child)
                                  : static_cast<std::size_t>(v);
        }
        node = node->children[child].get();
    }
    return node->label;
}

int predict_bayes(const BayesModel& m, const Instance& inst) {
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < m.log_priors.size(); ++c) {
        double score = m.log_priors[c];
        for (std::size_t a = 0; a < m.attributes.size(); ++a) {
            const double v = inst.values[a];
            if (is_missing(v)) continue;
            const auto& stats = m.attributes[a];
            if (stats.numeric) {
                if (!stats.gaussian.defined[c]) continue;
                const double var = stats.gaussian.variance[c];
                const double d = v - stats.gaussian.mean[c];
                score += -0.5 * std::log(2.0 * std::numbers::pi * var) - d * d / (2.0 * var);
            } else {
                score += stats.nominal.log_likelihood[c][static_cast<std::size_t>(v)];
            }
        }
        if (score > best_score) {
            best_score = score;
            best = static_cast<int>(c);
        }
    }
    return best;
}

}  // namespace

int predict(const WeakModel& model, const Instance& instance) {
    if (const auto* stump = model.as_stump()) return predict_stump(*stump, instance);
    if (const auto* tree = model.as_tree()) return predict_tree(*tree, instance);
    if (const auto* bayes = model.as_bayes()) return predict_bayes(*bayes, instance);
    throw std::logic_error("empty weak model");
}

std::vector<int> predict_all(const WeakModel& model, const Dataset& data) {
    std::vector<int> out(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) out[i] = predict(model, data.instances()[i]);
    return out;
}

}  // namespace bookboost
