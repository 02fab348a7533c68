#ifndef BOOKBOOST_DATASET_HPP
#define BOOKBOOST_DATASET_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace bookboost {

enum class AttributeKind { Numeric, Nominal };

struct AttributeSchema {
    std::string name;
    AttributeKind kind = AttributeKind::Numeric;
    std::vector<std::string> values;  // nominal only, declaration order

    bool is_nominal() const { return kind == AttributeKind::Nominal; }
};

/// Attribute slots are doubles: numeric attributes hold the raw value,
/// nominal attributes hold the value index, missing is NaN.
struct Instance {
    std::vector<double> values;
    int label = 0;
    double weight = 1.0;
};

inline double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }
inline bool is_missing(double v) { return std::isnan(v); }

class Dataset {
public:
    Dataset(std::vector<AttributeSchema> schema, std::vector<std::string> classes,
            std::vector<Instance> instances);

    const std::vector<AttributeSchema>& schema() const { return schema_; }
    const std::vector<std::string>& classes() const { return classes_; }
    const std::vector<Instance>& instances() const { return instances_; }
    std::size_t num_attributes() const { return schema_.size(); }
    std::size_t num_classes() const { return classes_.size(); }
    std::size_t size() const { return instances_.size(); }

    /// Weighted majority class over Instance::weight, ties to lowest index.
    int majority_class() const;

    /// New dataset holding copies of the selected instances, same schema.
    Dataset subset(const std::vector<int>& indices) const;

private:
    std::vector<AttributeSchema> schema_;
    std::vector<std::string> classes_;
    std::vector<Instance> instances_;
};

}  // namespace bookboost

#endif
