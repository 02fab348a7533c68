#ifndef BOOKBOOST_EVALUATION_HPP
#define BOOKBOOST_EVALUATION_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bookboost/boosting.hpp"
#include "bookboost/dataset.hpp"
#include "bookboost/metrics.hpp"

namespace bookboost {

inline constexpr std::array<MeasureKind, 5> kReportedMeasures = {
    MeasureKind::Informedness, MeasureKind::CohenKappa, MeasureKind::RandAccuracy,
    MeasureKind::Markedness, MeasureKind::MatthewsCorrelation};

struct SummaryStats {
    double mean = 0.0;
    double sd = 0.0;
    double two_se = 0.0;
};

/// Sample mean, n-1 standard deviation, and 2*SD/sqrt(n). Needs >= 2 values.
SummaryStats summarize_stats(const std::vector<double>& values);

struct FoldResult {
    int run = 0;
    int fold = 0;
    std::map<std::string, double> measures;  // keyed by measure_name
    int rounds_run = 0;
    std::string stop_reason;
};

struct CVReport {
    std::string description;
    int runs = 0;
    int folds = 0;
    std::vector<FoldResult> fold_results;
    std::map<std::string, SummaryStats> summary;   // keyed by measure_name
    std::map<std::string, int> stop_reasons;       // reason -> fold count

    std::vector<double> values_of(const std::string& measure) const;
    double mean_of(const std::string& measure) const;
};

/// How the harness drives each train/test split. Booster `None` trains the
/// bare base learner once, with no surrender logic.
enum class BoosterChoice { None, AdaBoost, MultiBoost };

struct CvJob {
    BoosterChoice booster = BoosterChoice::AdaBoost;
    BoostConfig config;
    std::string description;
};

/// Seeded per-class round-robin deal into k folds; returns instance-index
/// lists. Folds are disjoint, cover the dataset, and per class differ in
/// size by at most 1.
std::vector<std::vector<int>> stratified_kfold(const Dataset& data, int k, std::uint64_t seed);

/// The experiment protocol: runs x k stratified splits, boosting on the
/// training portion, all five measures on the unit-weight test table.
/// Degenerate ensembles fall back to the training majority class.
CVReport run_repeated_cv(const Dataset& data, const CvJob& job, int runs, int k,
                         std::uint64_t seed);

/// Seeded stratified subsample of about `target` instances (per-class
/// proportional, at least one instance per represented class).
Dataset stratified_subsample(const Dataset& data, std::size_t target, std::uint64_t seed);

enum class Verdict { EquiWin, SigBoost, SigLoss, Neutral };

std::string verdict_name(Verdict verdict);

struct ComparisonVerdict {
    std::string dataset;
    Verdict outcome = Verdict::Neutral;
    double method_mean = 0.0;
    double reference_mean = 0.0;
    double band = 0.05;
};

/// Per-dataset verdicts against a reference using an absolute equivalence
/// band: inside the band counts as a win when the method is at least the
/// reference, beyond it as a significant boost or loss.
std::vector<ComparisonVerdict> equivalence_compare(const std::vector<std::string>& datasets,
                                                   const std::vector<double>& method_means,
                                                   const std::vector<double>& reference_means,
                                                   double band = 0.05);

}  // namespace bookboost

#endif
