#include "relog/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace relog {

namespace {

std::vector<std::string> split_csv_line(const std::string& line, size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) {
        std::ostringstream ss;
        ss << "csv line " << lineno << ": unterminated quote";
        throw std::invalid_argument(ss.str());
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

Dataset read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("csv: empty input, header row required");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = split_csv_line(line, 1);
    std::vector<std::vector<double>> columns(header.size());

    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line, lineno);
        if (fields.size() != header.size()) {
            std::ostringstream ss;
            ss << "csv line " << lineno << ": expected " << header.size()
               << " fields, got " << fields.size();
            throw std::invalid_argument(ss.str());
        }
        for (size_t j = 0; j < fields.size(); ++j) {
            size_t pos = 0;
            double v;
            try {
                v = std::stod(fields[j], &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != fields[j].size() || fields[j].empty()) {
                std::ostringstream ss;
                ss << "csv line " << lineno << ", column " << header[j]
                   << ": cannot parse \"" << fields[j] << "\" as a number";
                throw std::invalid_argument(ss.str());
            }
            columns[j].push_back(v);
        }
    }

    Dataset data;
    for (size_t j = 0; j < header.size(); ++j) {
        data.add_column(header[j], std::move(columns[j]));
    }
    return data;
}

Dataset read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    return read_csv(in);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& out, const Dataset& data, int decimals) {
    const auto& names = data.names();
    for (size_t j = 0; j < names.size(); ++j) {
        if (j) out << ',';
        out << csv_escape(names[j]);
    }
    out << '\n';
    for (size_t i = 0; i < data.n(); ++i) {
        for (size_t j = 0; j < names.size(); ++j) {
            if (j) out << ',';
            char buf[64];
            double v = data.column(names[j])[i];
            if (decimals >= 0) {
                std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
            } else {
                std::snprintf(buf, sizeof buf, "%.17g", v);
            }
            out << buf;
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const Dataset& data, int decimals) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path);
    }
    write_csv(out, data, decimals);
}

}  // namespace relog
