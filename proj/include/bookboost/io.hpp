#ifndef BOOKBOOST_IO_HPP
#define BOOKBOOST_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bookboost/dataset.hpp"

namespace bookboost {

/// Loader-side diagnostics: rows dropped for a missing class label, plus
/// human-readable notes.
struct LoadReport {
    std::size_t rows_skipped = 0;
    std::vector<std::string> warnings;
};

/// ARFF subset: @relation, @attribute (numeric/real/integer and {a,b,c}
/// nominals), @data with '?' for missing, % comments, case-insensitive
/// keywords. The class attribute is the one named "class" when present,
/// otherwise the last nominal attribute.
Dataset load_arff(const std::string& path, LoadReport* report = nullptr);
Dataset parse_arff(std::istream& in, const std::string& origin, LoadReport* report = nullptr);

void write_arff(const Dataset& data, const std::string& relation, std::ostream& out);
void write_arff_file(const Dataset& data, const std::string& relation, const std::string& path);

/// Headed CSV: comma-delimited, optional double-quoted fields, empty cell
/// means missing. Columns with any non-numeric value become nominal
/// (first-appearance value order); `nominal_columns` forces columns nominal.
struct CsvOptions {
    std::string class_column;                  // name, or decimal index when numeric
    std::vector<std::string> nominal_columns;  // names or indices
};
Dataset load_csv(const std::string& path, const CsvOptions& options, LoadReport* report = nullptr);

struct DatasetDescriptor {
    std::string name;
    std::size_t classes = 0;
    std::size_t attributes = 0;
    std::size_t instances = 0;
    std::string source_path;
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> mismatches;
};

/// Compares counts against the descriptor; a mismatch is reported, never
/// thrown. An attribute count that matches only when the class column is
/// included is flagged as a note rather than resolved.
ValidationResult validate(const Dataset& data, const DatasetDescriptor& descriptor);

/// The benchmark registry (name -> expected classes/attributes/instances).
const std::vector<DatasetDescriptor>& dataset_registry();
std::optional<DatasetDescriptor> find_descriptor(const std::string& name);

}  // namespace bookboost

#endif
