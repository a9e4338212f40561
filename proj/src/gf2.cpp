#include "pkern/gf2.hpp"

#include <algorithm>

namespace pkern {

BitVector BitVector::from_string(std::string_view s) {
    if (s.empty() || s.size() > 32) throw ParseError("vector length out of range");
    BitVector v(0, static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') v.bits |= std::uint32_t{1} << i;
        else if (s[i] != '0') throw ParseError("vector characters must be 0 or 1");
    }
    return v;
}

std::string BitVector::to_string() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.rows.push_back(std::uint32_t{1} << i);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& lines) {
    if (lines.empty()) throw ParseError("matrix needs at least one row");
    BitMatrix m(static_cast<int>(lines[0].size()));
    for (const auto& line : lines) {
        if (static_cast<int>(line.size()) != m.n) throw ParseError("ragged matrix rows");
        m.rows.push_back(BitVector::from_string(line).bits);
    }
    return m;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (int i = 0; i < row_count(); ++i) out.push_back(row(i).to_string());
    return out;
}

std::vector<int> rref_in_place(BitMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.n && r < m.row_count(); ++c) {
        const std::uint32_t mask = std::uint32_t{1} << c;
        int pivot = -1;
        for (int i = r; i < m.row_count(); ++i)
            if (m.rows[static_cast<std::size_t>(i)] & mask) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m.rows[static_cast<std::size_t>(r)], m.rows[static_cast<std::size_t>(pivot)]);
        for (int i = 0; i < m.row_count(); ++i)
            if (i != r && (m.rows[static_cast<std::size_t>(i)] & mask))
                m.rows[static_cast<std::size_t>(i)] ^= m.rows[static_cast<std::size_t>(r)];
        pivots.push_back(c);
        ++r;
    }
    m.rows.resize(static_cast<std::size_t>(r));
    return pivots;
}

int rank(const BitMatrix& m) {
    BitMatrix copy = m;
    return static_cast<int>(rref_in_place(copy).size());
}

BitMatrix rref_complement(const BitMatrix& rref, const std::vector<int>& pivots) {
    BitMatrix out(rref.n);
    std::vector<bool> is_pivot(static_cast<std::size_t>(rref.n), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int q = 0; q < rref.n; ++q) {
        if (is_pivot[static_cast<std::size_t>(q)]) continue;
        std::uint32_t row = std::uint32_t{1} << q;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if ((rref.rows[i] >> q) & 1u) row |= std::uint32_t{1} << pivots[i];
        out.rows.push_back(row);
    }
    return out;
}

bool in_row_space(const BitMatrix& rref, const std::vector<int>& pivots, std::uint32_t v) {
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if ((v >> pivots[i]) & 1u) v ^= rref.rows[i];
    return v == 0;
}

}  // namespace pkern
