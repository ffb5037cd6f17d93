#pragma once

#include <iosfwd>
#include <string>

#include "relog/regress.hpp"

namespace relog {

// Header row required; comma delimiter, "." decimal mark, UTF-8.
Dataset read_csv(std::istream& in);
Dataset read_csv_file(const std::string& path);

// RFC-style quoting: fields containing commas, quotes, or newlines are
// quoted with embedded quotes doubled.
std::string csv_escape(const std::string& field);

void write_csv(std::ostream& out, const Dataset& data, int decimals = -1);
void write_csv_file(const std::string& path, const Dataset& data, int decimals = -1);

}  // namespace relog
