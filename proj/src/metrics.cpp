#include "bookboost/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace bookboost {

namespace {

constexpr double kDegenerateEps = 1e-12;

bool degenerate_fraction(double p) { return p <= 0.0 || p >= 1.0; }

}  // namespace

ContingencyTable::ContingencyTable(std::vector<std::string> labels, std::vector<double> cells)
    : labels_(std::move(labels)), cells_(std::move(cells)) {
    const std::size_t k = labels_.size();
    if (k < 2) {
        throw std::invalid_argument("contingency table needs at least 2 classes");
    }
    if (cells_.size() != k * k) {
        throw std::invalid_argument("contingency table cell count does not match label count");
    }
    row_sums_.assign(k, 0.0);
    col_sums_.assign(k, 0.0);
    for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t p = 0; p < k; ++p) {
            const double w = cells_[g * k + p];
            if (!(w >= 0.0)) {
                throw std::invalid_argument("contingency table cells must be non-negative");
            }
            row_sums_[g] += w;
            col_sums_[p] += w;
            total_ += w;
        }
    }
    if (!(total_ > 0.0)) {
        throw std::invalid_argument("contingency table total weight must be positive");
    }
}

double ContingencyTable::trace() const {
    double t = 0.0;
    for (std::size_t c = 0; c < labels_.size(); ++c) t += cell(c, c);
    return t;
}

ContingencyTable ContingencyTable::transposed() const {
    const std::size_t k = labels_.size();
    std::vector<double> cells(k * k, 0.0);
    for (std::size_t g = 0; g < k; ++g)
        for (std::size_t p = 0; p < k; ++p) cells[p * k + g] = cell(g, p);
    return ContingencyTable(labels_, std::move(cells));
}

MeasureKind parse_measure(const std::string& name) {
    static const std::unordered_map<std::string, MeasureKind> table = {
        {"accuracy", MeasureKind::RandAccuracy},
        {"kappa", MeasureKind::CohenKappa},
        {"informedness", MeasureKind::Informedness},
        {"markedness", MeasureKind::Markedness},
        {"matthews", MeasureKind::MatthewsCorrelation},
    };
    auto it = table.find(name);
    if (it == table.end()) {
        throw std::invalid_argument("unknown measure '" + name +
                                    "' (expected accuracy|kappa|informedness|markedness|matthews)");
    }
    return it->second;
}

std::string measure_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::RandAccuracy: return "accuracy";
        case MeasureKind::CohenKappa: return "kappa";
        case MeasureKind::Informedness: return "informedness";
        case MeasureKind::Markedness: return "markedness";
        case MeasureKind::MatthewsCorrelation: return "matthews";
    }
    throw std::logic_error("unreachable measure kind");
}

ContingencyTable tabulate(std::span<const std::string> gold,
                          std::span<const std::string> predicted,
                          std::span<const double> weights,
                          std::vector<std::string> labels) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<int>(i));
    auto lookup = [&](const std::string& s) {
        auto it = index.find(s);
        if (it == index.end()) throw std::invalid_argument("label '" + s + "' not in label list");
        return it->second;
    };
    std::vector<int> g(gold.size()), p(predicted.size());
    for (std::size_t i = 0; i < gold.size(); ++i) g[i] = lookup(gold[i]);
    for (std::size_t i = 0; i < predicted.size(); ++i) p[i] = lookup(predicted[i]);
    return tabulate_indices(g, p, weights, std::move(labels));
}

ContingencyTable tabulate_indices(std::span<const int> gold,
                                  std::span<const int> predicted,
                                  std::span<const double> weights,
                                  std::vector<std::string> labels) {
    if (gold.empty()) throw std::invalid_argument("tabulate needs at least one instance");
    if (gold.size() != predicted.size() || gold.size() != weights.size()) {
        throw std::invalid_argument("tabulate: gold/predicted/weights lengths differ");
    }
    const std::size_t k = labels.size();
    std::vector<double> cells(k * k, 0.0);
    for (std::size_t i = 0; i < gold.size(); ++i) {
        const int g = gold[i];
        const int p = predicted[i];
        if (g < 0 || static_cast<std::size_t>(g) >= k || p < 0 || static_cast<std::size_t>(p) >= k) {
            throw std::invalid_argument("tabulate: class index out of range");
        }
        if (!(weights[i] >= 0.0)) throw std::invalid_argument("tabulate: negative weight");
        cells[static_cast<std::size_t>(g) * k + static_cast<std::size_t>(p)] += weights[i];
    }
    // ContingencyTable construction rejects an all-zero weight vector.
    return ContingencyTable(std::move(labels), std::move(cells));
}

std::vector<ClassStats> per_class_stats(const ContingencyTable& table) {
    const std::size_t k = table.num_classes();
    std::vector<ClassStats> stats(k);
    for (std::size_t c = 0; c < k; ++c) {
        const double row = table.row_sum(c);
        const double col = table.col_sum(c);
        stats[c].recall = row > 0.0 ? table.cell(c, c) / row : 0.0;
        stats[c].precision = col > 0.0 ? table.cell(c, c) / col : 0.0;
        stats[c].prevalence = row / table.total();
        stats[c].bias = col / table.total();
    }
    return stats;
}

double rand_accuracy(const ContingencyTable& table) { return table.trace() / table.total(); }

double cohen_kappa(const ContingencyTable& table) {
    const auto stats = per_class_stats(table);
    const double p_o = rand_accuracy(table);
    double p_e = 0.0;
    for (const auto& s : stats) p_e += s.prevalence * s.bias;
    const double denom = 1.0 - p_e;
    if (denom < kDegenerateEps) return 0.0;
    return (p_o - p_e) / denom;
}

double informedness(const ContingencyTable& table) {
    const auto stats = per_class_stats(table);
    double value = 0.0;
    for (const auto& s : stats) {
        if (degenerate_fraction(s.prevalence)) continue;  // term defined as 0
        value += s.prevalence * (s.recall - s.bias) / (1.0 - s.prevalence);
    }
    return value;
}

double markedness(const ContingencyTable& table) {
    const auto stats = per_class_stats(table);
    double value = 0.0;
    for (const auto& s : stats) {
        if (degenerate_fraction(s.bias)) continue;
        value += s.bias * (s.precision - s.prevalence) / (1.0 - s.bias);
    }
    return value;
}

double matthews_correlation(const ContingencyTable& table) {
    const double inf = informedness(table);
    const double mark = markedness(table);
    const double magnitude = std::sqrt(std::fabs(inf * mark));
    const double lead = inf != 0.0 ? inf : mark;
    return std::copysign(magnitude, lead);
}

double measure_value(MeasureKind kind, const ContingencyTable& table) {
    switch (kind) {
        case MeasureKind::RandAccuracy: return rand_accuracy(table);
        case MeasureKind::CohenKappa: return cohen_kappa(table);
        case MeasureKind::Informedness: return informedness(table);
        case MeasureKind::Markedness: return markedness(table);
        case MeasureKind::MatthewsCorrelation: return matthews_correlation(table);
    }
    throw std::logic_error("unreachable measure kind");
}

RescaledKappa kappa_rescale(double kappa) {
    if (std::isnan(kappa) || kappa < -1.0 || kappa > 1.0) {
        throw std::domain_error("kappa_rescale: value outside [-1, 1]");
    }
    return {(kappa + 1.0) / 2.0, (1.0 - kappa) / 2.0};
}

double generalized_error(MeasureKind kind, const ContingencyTable& table) {
    if (kind == MeasureKind::RandAccuracy) return 1.0 - rand_accuracy(table);
    return kappa_rescale(measure_value(kind, table)).error_like;
}

}  // namespace bookboost
