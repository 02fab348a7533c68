#include <charconv>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "bookboost/io.hpp"

namespace bookboost {

namespace {

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& message) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + message);
}

/// RFC-4180-ish row split: comma delimiter, optional double quotes with ""
/// escapes. No embedded newlines.
std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && current.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

bool parse_number(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

Dataset load_csv(const std::string& path, const CsvOptions& options, LoadReport* report) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) fail(path, 0, "empty file");
    const auto header = split_row(line);
    const std::size_t num_columns = header.size();

    auto column_of = [&](const std::string& key) -> std::size_t {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c] == key) return c;
        }
        std::size_t index = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
        if (ec == std::errc{} && ptr == key.data() + key.size() && index < num_columns) {
            return index;
        }
        fail(path, 1, "column '" + key + "' not found");
    };

    if (options.class_column.empty()) fail(path, 1, "class column is required");
    const std::size_t class_col = column_of(options.class_column);
    std::vector<bool> forced_nominal(num_columns, false);
    for (const auto& key : options.nominal_columns) forced_nominal[column_of(key)] = true;

    std::vector<std::vector<std::string>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_row(line);
        if (fields.size() != num_columns) {
            fail(path, line_no,
                 "ragged row: " + std::to_string(fields.size()) + " fields, expected " +
                     std::to_string(num_columns));
        }
        rows.push_back(std::move(fields));
    }
    if (rows.empty()) fail(path, line_no, "no data rows");

    // type inference: a column is numeric when every non-empty cell parses
    std::vector<bool> numeric(num_columns, true);
    for (std::size_t c = 0; c < num_columns; ++c) {
        if (forced_nominal[c] || c == class_col) {
            numeric[c] = false;
            continue;
        }
        for (const auto& row : rows) {
            double ignored = 0.0;
            if (!row[c].empty() && !parse_number(row[c], ignored)) {
                numeric[c] = false;
                break;
            }
        }
    }

    // nominal values in first-appearance order
    std::vector<std::vector<std::string>> values(num_columns);
    std::vector<std::unordered_map<std::string, int>> value_index(num_columns);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < num_columns; ++c) {
            if (numeric[c] || row[c].empty()) continue;
            if (value_index[c].emplace(row[c], static_cast<int>(values[c].size())).second) {
                values[c].push_back(row[c]);
            }
        }
    }
    if (values[class_col].size() < 2) fail(path, 1, "class column has fewer than 2 values");

    std::vector<AttributeSchema> schema;
    for (std::size_t c = 0; c < num_columns; ++c) {
        if (c == class_col) continue;
        AttributeSchema attr;
        attr.name = header[c];
        if (numeric[c]) {
            attr.kind = AttributeKind::Numeric;
        } else {
            attr.kind = AttributeKind::Nominal;
            attr.values = values[c];
        }
        schema.push_back(std::move(attr));
    }

    std::vector<Instance> instances;
    std::size_t skipped = 0;
    for (const auto& row : rows) {
        if (row[class_col].empty()) {
            ++skipped;
            continue;
        }
        Instance inst;
        inst.label = value_index[class_col].at(row[class_col]);
        for (std::size_t c = 0; c < num_columns; ++c) {
            if (c == class_col) continue;
            if (row[c].empty()) {
                inst.values.push_back(missing_value());
            } else if (numeric[c]) {
                double v = 0.0;
                parse_number(row[c], v);
                inst.values.push_back(v);
            } else {
                inst.values.push_back(static_cast<double>(value_index[c].at(row[c])));
            }
        }
        instances.push_back(std::move(inst));
    }
    if (report) {
        report->rows_skipped = skipped;
        if (skipped > 0) {
            report->warnings.push_back(std::to_string(skipped) +
                                       " row(s) dropped for missing class label");
        }
    }
    if (instances.empty()) fail(path, 0, "every data row was dropped");
    return Dataset(std::move(schema), values[class_col], std::move(instances));
}

ValidationResult validate(const Dataset& data, const DatasetDescriptor& descriptor) {
    ValidationResult result;
    auto mismatch = [&](const std::string& what, std::size_t expected, std::size_t actual) {
        result.ok = false;
        result.mismatches.push_back(what + ": expected " + std::to_string(expected) + ", found " +
                                    std::to_string(actual));
    };
    if (data.num_classes() != descriptor.classes) {
        mismatch("classes", descriptor.classes, data.num_classes());
    }
    if (data.num_attributes() != descriptor.attributes) {
        if (data.num_attributes() + 1 == descriptor.attributes) {
            // some published counts include the class column; report, don't fail
            result.mismatches.push_back(
                "attributes: descriptor says " + std::to_string(descriptor.attributes) +
                ", found " + std::to_string(data.num_attributes()) +
                " (descriptor appears to count the class column)");
        } else {
            mismatch("attributes", descriptor.attributes, data.num_attributes());
        }
    }
    if (data.size() != descriptor.instances) {
        mismatch("instances", descriptor.instances, data.size());
    }
    return result;
}

const std::vector<DatasetDescriptor>& dataset_registry() {
    static const std::vector<DatasetDescriptor> registry = {
        {"handwritten", 10, 256, 1593, "data/handwritten.arff"},
        {"isolet", 26, 617, 7797, "data/isolet.arff"},
        {"letter", 26, 16, 20000, "data/letter.arff"},
        {"optdigits.tra", 10, 64, 3823, "data/optdigits.tra.arff"},
        {"pendigits.tra", 10, 17, 7494, "data/pendigits.tra.arff"},
        {"vowel", 11, 13, 990, "data/vowel.arff"},
        {"iris", 3, 4, 150, "data/iris.arff"},
    };
    return registry;
}

std::optional<DatasetDescriptor> find_descriptor(const std::string& name) {
    for (const auto& d : dataset_registry()) {
        if (d.name == name) return d;
    }
    return std::nullopt;
}

}  // namespace bookboost
