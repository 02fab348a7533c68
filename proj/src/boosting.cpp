#include "bookboost/boosting.hpp"

#include <cmath>
#include <stdexcept>

namespace bookboost {

namespace {

constexpr double kPerfectEps = 1e-12;

WeakModel train_base(const Dataset& data, std::span<const double> weights,
                     const BoostConfig& config, int round_index) {
    switch (config.base_learner.kind) {
        case LearnerKind::Stump:
            return train_stump(data, weights);
        case LearnerKind::Tree: {
            TreeParams params = config.base_learner.tree;
            params.seed = mix_seed(config.seed, static_cast<std::uint64_t>(round_index));
            return train_tree(data, weights, params);
        }
        case LearnerKind::NaiveBayes:
            return train_naive_bayes(data, weights);
    }
    throw std::logic_error("unreachable learner kind");
}

std::vector<double> uniform_weights(std::size_t n) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

double perfect_round_alpha(std::size_t n) {
    const double eps_cap = 1.0 / (2.0 * static_cast<double>(n));
    return std::log((1.0 - eps_cap) / eps_cap);
}

}  // namespace

void BoostConfig::validate() const {
    if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    if (mode == BoostMode::MultiBoost && (subcommittees < 1 || subcommittees > rounds)) {
        throw std::invalid_argument("subcommittees must lie in [1, rounds]");
    }
    if (!(weight_floor > 0.0)) throw std::invalid_argument("weight_floor must be positive");
}

std::string stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::Completed: return "completed";
        case StopReason::PerfectRound: return "perfect_round";
        case StopReason::SurrenderedAtChance: return "surrendered_at_chance";
        case StopReason::DegenerateFirstRound: return "degenerate_first_round";
    }
    throw std::logic_error("unreachable stop reason");
}

RoundResult boost_round(const Dataset& data, std::span<const double> weights,
                        const BoostConfig& config, int round_index) {
    RoundResult result;
    result.model = train_base(data, weights, config, round_index);

    const auto predicted = predict_all(result.model, data);
    std::vector<int> gold(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) gold[i] = data.instances()[i].label;
    // Chance is judged on the current boosting distribution, so the training
    // table is weighted with the round's weights.
    const auto table = tabulate_indices(gold, predicted, weights, data.classes());
    result.kappa = measure_value(config.measure, table);
    result.error = generalized_error(config.measure, table);

    result.new_weights.assign(weights.begin(), weights.end());
    if (result.error > kPerfectEps && result.error < 0.5) {
        const double beta = result.error / (1.0 - result.error);
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (predicted[i] == gold[i]) result.new_weights[i] *= beta;
        }
        double sum = 0.0;
        for (double& w : result.new_weights) {
            if (w < config.weight_floor) w = config.weight_floor;
            sum += w;
        }
        for (double& w : result.new_weights) w /= sum;
    }
    return result;
}

BoostedEnsemble adaboost_m1(const Dataset& data, const BoostConfig& config) {
    config.validate();
    BoostedEnsemble ensemble;
    ensemble.measure = config.measure;

    auto weights = uniform_weights(data.size());
    for (int t = 0; t < config.rounds; ++t) {
        RoundResult round = boost_round(data, weights, config, t);
        ensemble.rounds_run = t + 1;
        if (round.error >= 0.5) {
            // weak learner failed the better-than-chance condition
            ensemble.stop_reason = ensemble.members.empty() ? StopReason::DegenerateFirstRound
                                                            : StopReason::SurrenderedAtChance;
            return ensemble;
        }
        if (round.error <= kPerfectEps) {
            ensemble.members.push_back({std::move(round.model), perfect_round_alpha(data.size())});
            ensemble.stop_reason = StopReason::PerfectRound;
            return ensemble;
        }
        const double alpha = std::log((1.0 - round.error) / round.error);
        ensemble.members.push_back({std::move(round.model), alpha});
        weights = std::move(round.new_weights);
    }
    ensemble.stop_reason = StopReason::Completed;
    return ensemble;
}

BoostedEnsemble multiboost(const Dataset& data, const BoostConfig& config) {
    config.validate();
    BoostedEnsemble ensemble;
    ensemble.measure = config.measure;

    const int segments = config.mode == BoostMode::MultiBoost ? config.subcommittees : 1;
    Rng wag_rng(mix_seed(config.seed, 0x77616767696e67ULL));

    const int base_len = config.rounds / segments;
    const int remainder = config.rounds % segments;

    int segment_start = 0;
    for (int s = 0; s < segments; ++s) {
        const int segment_len = base_len + (s < remainder ? 1 : 0);
        if (segment_len == 0) continue;
        auto weights =
            s == 0 ? uniform_weights(data.size()) : wagging_weights(data.size(), wag_rng);

        bool segment_surrendered = false;
        for (int r = 0; r < segment_len; ++r) {
            const int round_index = segment_start + r;
            RoundResult round = boost_round(data, weights, config, round_index);
            ensemble.rounds_run = round_index + 1;
            if (round.error >= 0.5) {
                segment_surrendered = true;
                break;  // forfeit the rest of this segment
            }
            if (round.error <= kPerfectEps) {
                ensemble.members.push_back(
                    {std::move(round.model), perfect_round_alpha(data.size())});
                ensemble.stop_reason = StopReason::PerfectRound;
                return ensemble;
            }
            const double alpha = std::log((1.0 - round.error) / round.error);
            ensemble.members.push_back({std::move(round.model), alpha});
            weights = std::move(round.new_weights);
        }
        segment_start += segment_len;
        if (segment_surrendered && s == segments - 1 && !ensemble.members.empty()) {
            ensemble.stop_reason = StopReason::SurrenderedAtChance;
            return ensemble;
        }
    }
    ensemble.stop_reason =
        ensemble.members.empty() ? StopReason::DegenerateFirstRound : StopReason::Completed;
    return ensemble;
}

std::vector<double> wagging_weights(std::size_t n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("wagging_weights needs n >= 1");
    std::vector<double> weights(n);
    double sum = 0.0;
    for (double& w : weights) {
        w = -std::log(rng.uniform_open01());
        sum += w;
    }
    for (double& w : weights) w /= sum;
    return weights;
}

int ensemble_predict(const BoostedEnsemble& ensemble, const Instance& instance) {
    if (ensemble.degenerate()) {
        throw std::invalid_argument("cannot predict with a degenerate ensemble");
    }
    std::vector<double> votes;
    for (const auto& member : ensemble.members) {
        const auto label = static_cast<std::size_t>(predict(member.model, instance));
        if (label >= votes.size()) votes.resize(label + 1, 0.0);
        votes[label] += member.alpha;
    }
    int best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c) {
        if (votes[c] > votes[static_cast<std::size_t>(best)]) best = static_cast<int>(c);
    }
    return best;
}

}  // namespace bookboost
