#ifndef BOOKBOOST_BOOSTING_HPP
#define BOOKBOOST_BOOSTING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bookboost/dataset.hpp"
#include "bookboost/learners.hpp"
#include "bookboost/metrics.hpp"
#include "bookboost/rng.hpp"

namespace bookboost {

enum class LearnerKind { Stump, Tree, NaiveBayes };

struct LearnerSpec {
    LearnerKind kind = LearnerKind::Stump;
    TreeParams tree;  // Tree only
};

enum class BoostMode { AdaBoost, MultiBoost };

struct BoostConfig {
    MeasureKind measure = MeasureKind::Informedness;
    int rounds = 10;
    LearnerSpec base_learner;
    BoostMode mode = BoostMode::AdaBoost;
    int subcommittees = 3;  // MultiBoost only
    std::uint64_t seed = 0;
    double weight_floor = 1e-12;

    void validate() const;
};

enum class StopReason { Completed, PerfectRound, SurrenderedAtChance, DegenerateFirstRound };

std::string stop_reason_name(StopReason reason);

struct EnsembleMember {
    WeakModel model;
    double alpha = 0.0;
};

struct BoostedEnsemble {
    std::vector<EnsembleMember> members;
    int rounds_run = 0;
    StopReason stop_reason = StopReason::Completed;
    MeasureKind measure = MeasureKind::Informedness;

    bool degenerate() const { return members.empty(); }
};

/// One training round: fit the base learner on the current weights, score
/// its weighted training table with the configured measure, and reweight.
struct RoundResult {
    WeakModel model;
    double kappa = 0.0;  // raw measure value on the weighted training table
    double error = 0.0;  // generalized error in [0, 1]
    std::vector<double> new_weights;
};

RoundResult boost_round(const Dataset& data, std::span<const double> weights,
                        const BoostConfig& config, int round_index = 0);

/// Measure-parametric AdaBoost.M1. Rounds stop at the first error >= 1/2
/// (model discarded) or at a perfect round (alpha capped via 1/(2n)).
BoostedEnsemble adaboost_m1(const Dataset& data, const BoostConfig& config);

/// AdaBoost.M1 with the round schedule cut into `subcommittees` contiguous
/// segments; each segment after the first restarts from wagged weights, and
/// a failed round skips to the next segment instead of ending the run.
BoostedEnsemble multiboost(const Dataset& data, const BoostConfig& config);

/// Continuous bagging weights: w_i = -ln(u_i), normalized to sum 1.
std::vector<double> wagging_weights(std::size_t n, Rng& rng);

/// Alpha-weighted plurality vote; ties to the lowest class index.
/// Throws std::invalid_argument on a degenerate ensemble.
int ensemble_predict(const BoostedEnsemble& ensemble, const Instance& instance);

}  // namespace bookboost

#endif
