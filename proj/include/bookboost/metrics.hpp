#ifndef BOOKBOOST_METRICS_HPP
#define BOOKBOOST_METRICS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bookboost {

/// Weighted K-class confusion counts, rows = gold, columns = predicted.
/// K >= 2 and total weight > 0 are enforced at construction; every
/// measure below reads from one of these tables.
class ContingencyTable {
public:
    ContingencyTable(std::vector<std::string> labels, std::vector<double> cells);

    std::size_t num_classes() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    double cell(std::size_t gold, std::size_t predicted) const {
        return cells_[gold * labels_.size() + predicted];
    }
    double total() const { return total_; }
    double row_sum(std::size_t gold) const { return row_sums_[gold]; }
    double col_sum(std::size_t predicted) const { return col_sums_[predicted]; }
    double trace() const;

    ContingencyTable transposed() const;

private:
    std::vector<std::string> labels_;
    std::vector<double> cells_;  // row-major K*K
    std::vector<double> row_sums_;
    std::vector<double> col_sums_;
    double total_ = 0.0;
};

/// One-vs-rest rates for a single class.
struct ClassStats {
    double recall = 0.0;
    double precision = 0.0;
    double prevalence = 0.0;
    double bias = 0.0;
};

enum class MeasureKind {
    RandAccuracy,
    CohenKappa,
    Informedness,
    Markedness,
    MatthewsCorrelation,
};

/// Parses the lowercase CLI spelling ("accuracy", "kappa", "informedness",
/// "markedness", "matthews"). Throws std::invalid_argument on anything else.
MeasureKind parse_measure(const std::string& name);
std::string measure_name(MeasureKind kind);

/// Builds the weighted table of (gold, predicted) pairs over `labels`.
/// Throws on length mismatch, unknown label, or all-zero weights.
ContingencyTable tabulate(std::span<const std::string> gold,
                          std::span<const std::string> predicted,
                          std::span<const double> weights,
                          std::vector<std::string> labels);

/// Index-based variant used by the boosting and evaluation loops.
ContingencyTable tabulate_indices(std::span<const int> gold,
                                  std::span<const int> predicted,
                                  std::span<const double> weights,
                                  std::vector<std::string> labels);

std::vector<ClassStats> per_class_stats(const ContingencyTable& table);

double rand_accuracy(const ContingencyTable& table);
double cohen_kappa(const ContingencyTable& table);
double informedness(const ContingencyTable& table);
double markedness(const ContingencyTable& table);
double matthews_correlation(const ContingencyTable& table);

/// Raw value of the named measure: rand_accuracy for RandAccuracy, the
/// [-1,1] score for everything else.
double measure_value(MeasureKind kind, const ContingencyTable& table);

/// Maps a [-1,1] score onto the [0,1] accuracy/error pair
/// ((kappa+1)/2, (1-kappa)/2). Throws std::domain_error outside [-1,1].
struct RescaledKappa {
    double accuracy_like;
    double error_like;
};
RescaledKappa kappa_rescale(double kappa);

/// Boosting-facing error: 1 - rand_accuracy for RandAccuracy, otherwise
/// (1 - score)/2 so that chance maps to 1/2.
double generalized_error(MeasureKind kind, const ContingencyTable& table);

}  // namespace bookboost

#endif
