#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "bookboost/io.hpp"

namespace bookboost {

namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& message) {
    throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + message);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '\'' && s.back() == '\'') ||
                          (s.front() == '"' && s.back() == '"'))) {
        return s.substr(1, s.size() - 2);
    }
    return s;
}

/// Splits "a, b ,c" on commas; used for nominal value lists and data rows.
std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    char quote_char = '\0';
    for (char c : s) {
        if (quoted) {
            current.push_back(c);
            if (c == quote_char) quoted = false;
        } else if (c == '\'' || c == '"') {
            current.push_back(c);
            quoted = true;
            quote_char = c;
        } else if (c == ',') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(trim(current));
    return fields;
}

bool parse_number(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

struct RawAttribute {
    std::string name;
    bool numeric = true;
    std::vector<std::string> values;
};

}  // namespace

Dataset parse_arff(std::istream& in, const std::string& origin, LoadReport* report) {
    std::vector<RawAttribute> attrs;
    std::string relation;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;

    std::string line;
    std::size_t line_no = 0;
    bool in_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '%') continue;
        if (!in_data && stripped[0] == '@') {
            std::istringstream header(stripped);
            std::string keyword;
            header >> keyword;
            const std::string kw = lower(keyword);
            if (kw == "@relation") {
                std::string rest;
                std::getline(header, rest);
                relation = unquote(trim(rest));
                if (relation.empty()) fail(origin, line_no, "@relation needs a name");
            } else if (kw == "@attribute") {
                std::string rest;
                std::getline(header, rest);
                rest = trim(rest);
                if (rest.empty()) fail(origin, line_no, "@attribute needs a name and a type");
                RawAttribute attr;
                if (rest[0] == '\'' || rest[0] == '"') {
                    const char q = rest[0];
                    const auto close = rest.find(q, 1);
                    if (close == std::string::npos) {
                        fail(origin, line_no, "unterminated quoted attribute name");
                    }
                    attr.name = rest.substr(1, close - 1);
                    rest = trim(rest.substr(close + 1));
                } else {
                    const auto space = rest.find_first_of(" \t");
                    if (space == std::string::npos) {
                        fail(origin, line_no, "@attribute is missing a type");
                    }
                    attr.name = rest.substr(0, space);
                    rest = trim(rest.substr(space));
                }
                if (rest.empty()) fail(origin, line_no, "@attribute is missing a type");
                if (rest[0] == '{') {
                    if (rest.back() != '}') fail(origin, line_no, "unterminated nominal value list");
                    attr.numeric = false;
                    for (auto& value : split_csv(rest.substr(1, rest.size() - 2))) {
                        value = unquote(value);
                        if (value.empty()) fail(origin, line_no, "empty nominal value");
                        attr.values.push_back(value);
                    }
                    if (attr.values.empty()) fail(origin, line_no, "empty nominal value list");
                } else {
                    const std::string type = lower(rest);
                    if (type == "numeric" || type == "real" || type == "integer") {
                        attr.numeric = true;
                    } else {
                        fail(origin, line_no, "unsupported attribute type '" + rest + "'");
                    }
                }
                attrs.push_back(std::move(attr));
            } else if (kw == "@data") {
                if (attrs.empty()) fail(origin, line_no, "@data before any @attribute");
                in_data = true;
            } else {
                fail(origin, line_no, "unknown declaration '" + keyword + "'");
            }
            continue;
        }
        if (!in_data) fail(origin, line_no, "data row before @data");
        if (stripped[0] == '{') fail(origin, line_no, "sparse ARFF rows are not supported");
        rows.push_back(split_csv(stripped));
        row_lines.push_back(line_no);
    }
    if (!in_data) fail(origin, line_no, "missing @data section");
    if (rows.empty()) fail(origin, line_no, "no data rows");

    // class attribute: named "class" if present, else the last nominal one
    std::size_t class_index = attrs.size();
    for (std::size_t a = 0; a < attrs.size(); ++a) {
        if (lower(attrs[a].name) == "class") class_index = a;
    }
    if (class_index == attrs.size()) {
        for (std::size_t a = attrs.size(); a-- > 0;) {
            if (!attrs[a].numeric) {
                class_index = a;
                break;
            }
        }
    }
    if (class_index == attrs.size()) fail(origin, 0, "no nominal attribute to use as the class");
    if (attrs[class_index].numeric) fail(origin, 0, "class attribute must be nominal");

    std::vector<AttributeSchema> schema;
    for (std::size_t a = 0; a < attrs.size(); ++a) {
        if (a == class_index) continue;
        AttributeSchema s;
        s.name = attrs[a].name;
        s.kind = attrs[a].numeric ? AttributeKind::Numeric : AttributeKind::Nominal;
        s.values = attrs[a].values;
        schema.push_back(std::move(s));
    }
    const std::vector<std::string>& classes = attrs[class_index].values;

    std::vector<std::unordered_map<std::string, int>> value_index(attrs.size());
    for (std::size_t a = 0; a < attrs.size(); ++a) {
        for (std::size_t v = 0; v < attrs[a].values.size(); ++v) {
            value_index[a].emplace(attrs[a].values[v], static_cast<int>(v));
        }
    }

    std::vector<Instance> instances;
    std::size_t skipped = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& fields = rows[r];
        const std::size_t row_line = row_lines[r];
        if (fields.size() != attrs.size()) {
            fail(origin, row_line,
                 "row has " + std::to_string(fields.size()) + " fields, expected " +
                     std::to_string(attrs.size()));
        }
        Instance inst;
        inst.values.reserve(attrs.size() - 1);
        bool drop = false;
        for (std::size_t a = 0; a < attrs.size(); ++a) {
            const std::string field = unquote(fields[a]);
            if (a == class_index) {
                if (field == "?") {
                    drop = true;  // unlabeled rows are unusable for training
                    continue;
                }
                const auto it = value_index[a].find(field);
                if (it == value_index[a].end()) {
                    fail(origin, row_line, "undeclared class value '" + field + "'");
                }
                inst.label = it->second;
                continue;
            }
            if (field == "?") {
                inst.values.push_back(missing_value());
            } else if (attrs[a].numeric) {
                double value = 0.0;
                if (!parse_number(field, value)) {
                    fail(origin, row_line,
                         "bad numeric value '" + field + "' for attribute '" + attrs[a].name + "'");
                }
                inst.values.push_back(value);
            } else {
                const auto it = value_index[a].find(field);
                if (it == value_index[a].end()) {
                    fail(origin, row_line,
                         "undeclared nominal value '" + field + "' for attribute '" +
                             attrs[a].name + "'");
                }
                inst.values.push_back(static_cast<double>(it->second));
            }
        }
        if (drop) {
            ++skipped;
            continue;
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
    if (instances.empty()) fail(origin, 0, "every data row was dropped");
    return Dataset(std::move(schema), classes, std::move(instances));
}

Dataset load_arff(const std::string& path, LoadReport* report) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_arff(in, path, report);
}

namespace {

bool needs_quoting(const std::string& s) {
    return s.find_first_of(" ,\t'\"{}%?") != std::string::npos;
}

std::string quoted(const std::string& s) {
    return needs_quoting(s) ? "'" + s + "'" : s;
}

void write_value(std::ostream& out, const AttributeSchema& attr, double v) {
    if (is_missing(v)) {
        out << '?';
    } else if (attr.is_nominal()) {
        out << quoted(attr.values[static_cast<std::size_t>(v)]);
    } else {
        std::ostringstream tmp;
        tmp.precision(17);
        tmp << v;
        out << tmp.str();
    }
}

}  // namespace

void write_arff(const Dataset& data, const std::string& relation, std::ostream& out) {
    out << "@relation " << quoted(relation) << "\n\n";
    for (const auto& attr : data.schema()) {
        out << "@attribute " << quoted(attr.name) << ' ';
        if (attr.is_nominal()) {
            out << '{';
            for (std::size_t v = 0; v < attr.values.size(); ++v) {
                if (v > 0) out << ',';
                out << quoted(attr.values[v]);
            }
            out << '}';
        } else {
            out << "numeric";
        }
        out << '\n';
    }
    out << "@attribute class {";
    for (std::size_t c = 0; c < data.classes().size(); ++c) {
        if (c > 0) out << ',';
        out << quoted(data.classes()[c]);
    }
    out << "}\n\n@data\n";
    for (const auto& inst : data.instances()) {
        for (std::size_t a = 0; a < data.schema().size(); ++a) {
            write_value(out, data.schema()[a], inst.values[a]);
            out << ',';
        }
        out << quoted(data.classes()[static_cast<std::size_t>(inst.label)]) << '\n';
    }
}

void write_arff_file(const Dataset& data, const std::string& relation, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_arff(data, relation, out);
}

}  // namespace bookboost
