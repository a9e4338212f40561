#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pkern/gf2.hpp"

namespace pkern {

// Matrix text format: one row of 0/1 characters per line; blank lines and
// lines starting with '#' are skipped.
BitMatrix parse_matrix(std::istream& in);
BitMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const BitMatrix& m,
                       const std::string& header = "");

// Comma-separated positive integers, e.g. "1,2,2,4".
std::vector<int> parse_pdp_string(const std::string& s);
std::string pdp_to_string(const std::vector<int>& d);

// Fixed six decimal places, ties rounded to even.
std::string format_exponent(double e);

}  // namespace pkern
