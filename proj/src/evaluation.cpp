#include "bookboost/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bookboost/rng.hpp"

namespace bookboost {

SummaryStats summarize_stats(const std::vector<double>& values) {
    if (values.size() < 2) throw std::invalid_argument("summarize_stats needs at least 2 values");
    const auto n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    return {mean, sd, 2.0 * sd / std::sqrt(n)};
}

std::vector<double> CVReport::values_of(const std::string& measure) const {
    std::vector<double> out;
    out.reserve(fold_results.size());
    for (const auto& fr : fold_results) out.push_back(fr.measures.at(measure));
    return out;
}

double CVReport::mean_of(const std::string& measure) const { return summary.at(measure).mean; }

std::vector<std::vector<int>> stratified_kfold(const Dataset& data, int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("stratified_kfold needs k >= 2");
    if (static_cast<std::size_t>(k) > data.size()) {
        throw std::invalid_argument("stratified_kfold: k exceeds instance count");
    }
    std::vector<std::vector<int>> per_class(data.num_classes());
    for (std::size_t i = 0; i < data.size(); ++i) {
        per_class[static_cast<std::size_t>(data.instances()[i].label)].push_back(
            static_cast<int>(i));
    }
    for (const auto& members : per_class) {
        if (members.empty()) {
            throw std::invalid_argument("stratified_kfold: every class needs >= 1 instance");
        }
    }

    Rng rng(seed);
    std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
    for (auto& members : per_class) {
        rng.shuffle(members);
        // deal round-robin from a random starting fold so the overflow
        // classes do not always land in fold 0
        const auto start = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(k)));
        for (std::size_t j = 0; j < members.size(); ++j) {
            folds[(start + j) % static_cast<std::size_t>(k)].push_back(members[j]);
        }
    }
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

namespace {

BoostedEnsemble train_for_split(const Dataset& train, const CvJob& job, std::uint64_t split_seed) {
    BoostConfig config = job.config;
    config.seed = split_seed;
    switch (job.booster) {
        case BoosterChoice::AdaBoost:
            config.mode = BoostMode::AdaBoost;
            return adaboost_m1(train, config);
        case BoosterChoice::MultiBoost:
            config.mode = BoostMode::MultiBoost;
            return multiboost(train, config);
        case BoosterChoice::None: {
            // bare base learner: one member, unit vote, no surrender logic
            std::vector<double> uniform(train.size(), 1.0 / static_cast<double>(train.size()));
            WeakModel model;
            switch (config.base_learner.kind) {
                case LearnerKind::Stump:
                    model = train_stump(train, uniform);
                    break;
                case LearnerKind::Tree: {
                    TreeParams params = config.base_learner.tree;
                    params.seed = mix_seed(split_seed, 0);
                    model = train_tree(train, uniform, params);
                    break;
                }
                case LearnerKind::NaiveBayes:
                    model = train_naive_bayes(train, uniform);
                    break;
            }
            BoostedEnsemble ensemble;
            ensemble.measure = config.measure;
            ensemble.members.push_back({std::move(model), 1.0});
            ensemble.rounds_run = 1;
            ensemble.stop_reason = StopReason::Completed;
            return ensemble;
        }
    }
    throw std::logic_error("unreachable booster choice");
}

}  // namespace

CVReport run_repeated_cv(const Dataset& data, const CvJob& job, int runs, int k,
                         std::uint64_t seed) {
    if (runs < 1) throw std::invalid_argument("run_repeated_cv needs runs >= 1");
    job.config.validate();

    CVReport report;
    report.description = job.description;
    report.runs = runs;
    report.folds = k;

    for (int run = 0; run < runs; ++run) {
        // fold assignment depends only on (data, k, seed, run), never on the
        // job, so competing methods are compared on identical splits
        const auto folds = stratified_kfold(data, k, seed + static_cast<std::uint64_t>(run));
        for (int fold = 0; fold < k; ++fold) {
            std::vector<int> train_idx;
            for (int other = 0; other < k; ++other) {
                if (other == fold) continue;
                const auto& f = folds[static_cast<std::size_t>(other)];
                train_idx.insert(train_idx.end(), f.begin(), f.end());
            }
            std::sort(train_idx.begin(), train_idx.end());
            const Dataset train = data.subset(train_idx);
            const Dataset test = data.subset(folds[static_cast<std::size_t>(fold)]);

            const std::uint64_t split_seed =
                mix_seed(seed, static_cast<std::uint64_t>(run) * 1000 +
                                   static_cast<std::uint64_t>(fold));
            const BoostedEnsemble ensemble = train_for_split(train, job, split_seed);

            const int fallback = ensemble.degenerate() ? train.majority_class() : -1;
            std::vector<int> gold(test.size());
            std::vector<int> predicted(test.size());
            std::vector<double> unit(test.size(), 1.0);
            for (std::size_t i = 0; i < test.size(); ++i) {
                gold[i] = test.instances()[i].label;
                predicted[i] = ensemble.degenerate()
                                   ? fallback
                                   : ensemble_predict(ensemble, test.instances()[i]);
            }
            const auto table = tabulate_indices(gold, predicted, unit, data.classes());

            FoldResult fr;
            fr.run = run;
            fr.fold = fold;
            for (MeasureKind kind : kReportedMeasures) {
                fr.measures[measure_name(kind)] = measure_value(kind, table);
            }
            fr.rounds_run = ensemble.rounds_run;
            fr.stop_reason = stop_reason_name(ensemble.stop_reason);
            report.stop_reasons[fr.stop_reason] += 1;
            report.fold_results.push_back(std::move(fr));
        }
    }

    for (MeasureKind kind : kReportedMeasures) {
        const auto name = measure_name(kind);
        report.summary[name] = summarize_stats(report.values_of(name));
    }
    return report;
}

Dataset stratified_subsample(const Dataset& data, std::size_t target, std::uint64_t seed) {
    if (target == 0) throw std::invalid_argument("stratified_subsample needs target >= 1");
    if (target >= data.size()) return data;

    std::vector<std::vector<int>> per_class(data.num_classes());
    for (std::size_t i = 0; i < data.size(); ++i) {
        per_class[static_cast<std::size_t>(data.instances()[i].label)].push_back(
            static_cast<int>(i));
    }
    Rng rng(mix_seed(seed, 0x73756273616d70ULL));
    const double ratio = static_cast<double>(target) / static_cast<double>(data.size());
    std::vector<int> picked;
    for (auto& members : per_class) {
        if (members.empty()) continue;
        rng.shuffle(members);
        auto take = static_cast<std::size_t>(
            std::llround(ratio * static_cast<double>(members.size())));
        take = std::clamp<std::size_t>(take, 1, members.size());
        picked.insert(picked.end(), members.begin(),
                      members.begin() + static_cast<std::ptrdiff_t>(take));
    }
    std::sort(picked.begin(), picked.end());
    return data.subset(picked);
}

std::string verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::EquiWin: return "equi_win";
        case Verdict::SigBoost: return "sig_boost";
        case Verdict::SigLoss: return "sig_loss";
        case Verdict::Neutral: return "neutral";
    }
    throw std::logic_error("unreachable verdict");
}

std::vector<ComparisonVerdict> equivalence_compare(const std::vector<std::string>& datasets,
                                                   const std::vector<double>& method_means,
                                                   const std::vector<double>& reference_means,
                                                   double band) {
    if (datasets.size() != method_means.size() || datasets.size() != reference_means.size()) {
        throw std::invalid_argument("equivalence_compare: misaligned input lists");
    }
    std::vector<ComparisonVerdict> verdicts;
    verdicts.reserve(datasets.size());
    for (std::size_t i = 0; i < datasets.size(); ++i) {
        const double m = method_means[i];
        const double r = reference_means[i];
        ComparisonVerdict v;
        v.dataset = datasets[i];
        v.method_mean = m;
        v.reference_mean = r;
        v.band = band;
        if (m - r > band) {
            v.outcome = Verdict::SigBoost;
        } else if (r - m > band) {
            v.outcome = Verdict::SigLoss;
        } else {
            v.outcome = m >= r ? Verdict::EquiWin : Verdict::Neutral;
        }
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

}  // namespace bookboost
