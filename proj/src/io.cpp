#include "pkern/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace pkern {

BitMatrix parse_matrix(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return BitMatrix::from_strings(lines);
}

BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_matrix(in);
}

void write_matrix_file(const std::string& path, const BitMatrix& m, const std::string& header) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    if (!header.empty()) out << "# " << header << "\n";
    for (const auto& row : m.to_strings()) out << row << "\n";
}

std::vector<int> parse_pdp_string(const std::string& s) {
    std::vector<int> d;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
            tok.pop_back();
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
            tok.erase(tok.begin());
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("bad profile entry '" + tok + "'");
        }
        if (used != tok.size() || value <= 0)
            throw ParseError("bad profile entry '" + tok + "'");
        d.push_back(value);
    }
    if (d.empty()) throw ParseError("empty distance profile");
    return d;
}

std::string pdp_to_string(const std::vector<int>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
    }
    return s;
}

std::string format_exponent(double e) {
    // Round half to even at the sixth decimal, then print exactly.
    const double scaled = e * 1e6;
    double r = std::nearbyint(scaled);  // default FE_TONEAREST is half-even
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r / 1e6);
    return buf;
}

}  // namespace pkern
