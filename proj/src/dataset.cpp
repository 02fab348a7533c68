#include "bookboost/dataset.hpp"

#include <stdexcept>

namespace bookboost {

namespace {

void check_nominal_values(const AttributeSchema& attr) {
    if (attr.values.empty()) {
        throw std::invalid_argument("nominal attribute '" + attr.name + "' has no values");
    }
    for (std::size_t i = 0; i < attr.values.size(); ++i) {
        for (std::size_t j = i + 1; j < attr.values.size(); ++j) {
            if (attr.values[i] == attr.values[j]) {
                throw std::invalid_argument("nominal attribute '" + attr.name +
                                            "' declares duplicate value '" + attr.values[i] + "'");
            }
        }
    }
}

}  // namespace

Dataset::Dataset(std::vector<AttributeSchema> schema, std::vector<std::string> classes,
                 std::vector<Instance> instances)
    : schema_(std::move(schema)), classes_(std::move(classes)), instances_(std::move(instances)) {
    if (classes_.size() < 2) throw std::invalid_argument("dataset needs at least 2 classes");
    if (instances_.empty()) throw std::invalid_argument("dataset needs at least 1 instance");
    for (const auto& attr : schema_) {
        if (attr.is_nominal()) check_nominal_values(attr);
    }
    double total_weight = 0.0;
    for (const auto& inst : instances_) {
        if (inst.values.size() != schema_.size()) {
            throw std::invalid_argument("instance arity does not match schema");
        }
        if (!(inst.weight >= 0.0)) throw std::invalid_argument("instance weight must be >= 0");
        if (inst.label < 0 || static_cast<std::size_t>(inst.label) >= classes_.size()) {
            throw std::invalid_argument("instance label out of range");
        }
        for (std::size_t a = 0; a < schema_.size(); ++a) {
            const double v = inst.values[a];
            if (is_missing(v)) continue;
            if (schema_[a].is_nominal()) {
                const auto idx = static_cast<long long>(v);
                if (idx < 0 || static_cast<std::size_t>(idx) >= schema_[a].values.size() ||
                    static_cast<double>(idx) != v) {
                    throw std::invalid_argument("nominal value index out of range for attribute '" +
                                                schema_[a].name + "'");
                }
            }
        }
        total_weight += inst.weight;
    }
    if (!(total_weight > 0.0)) throw std::invalid_argument("dataset total weight must be positive");
}

int Dataset::majority_class() const {
    std::vector<double> counts(classes_.size(), 0.0);
    for (const auto& inst : instances_) counts[static_cast<std::size_t>(inst.label)] += inst.weight;
    int best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c) {
        if (counts[c] > counts[static_cast<std::size_t>(best)]) best = static_cast<int>(c);
    }
    return best;
}

Dataset Dataset::subset(const std::vector<int>& indices) const {
    std::vector<Instance> picked;
    picked.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= instances_.size()) {
            throw std::out_of_range("subset index out of range");
        }
        picked.push_back(instances_[static_cast<std::size_t>(i)]);
    }
    return Dataset(schema_, classes_, std::move(picked));
}

}  // namespace bookboost
