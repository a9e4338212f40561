#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pkern/errors.hpp"

namespace pkern {

// Coordinate i of a length-n vector lives in bit i of the word, so the
// leftmost character of the string form is the lowest bit.  With that
// convention "increasing integer value" orders words of equal weight by
// colexicographic support, which is the order the enumerators use.

inline bool parity(std::uint32_t w) { return std::popcount(w) & 1; }

struct BitVector {
    std::uint32_t bits = 0;
    int n = 0;

    BitVector() = default;
    BitVector(std::uint32_t b, int len) : bits(b), n(len) {
        if (len < 0 || len > 32) throw ParseError("vector length out of range");
        if (len < 32) bits &= (std::uint32_t{1} << len) - 1;
    }

    static BitVector from_string(std::string_view s);

    int weight() const { return std::popcount(bits); }
    bool get(int i) const { return (bits >> i) & 1u; }
    void set(int i, bool v) {
        if (v) bits |= std::uint32_t{1} << i;
        else bits &= ~(std::uint32_t{1} << i);
    }

    BitVector operator^(const BitVector& o) const { return {bits ^ o.bits, n}; }
    bool operator==(const BitVector&) const = default;

    std::string to_string() const;
};

// Inner product over GF(2).
inline bool dot(const BitVector& a, const BitVector& b) { return parity(a.bits & b.bits); }

struct BitMatrix {
    int n = 0;  // number of columns, <= 32
    std::vector<std::uint32_t> rows;

    BitMatrix() = default;
    explicit BitMatrix(int cols) : n(cols) {
        if (cols < 0 || cols > 32) throw ParseError("column count out of range");
    }
    BitMatrix(int cols, std::vector<std::uint32_t> r) : BitMatrix(cols) { rows = std::move(r); }

    static BitMatrix identity(int n);
    static BitMatrix from_strings(const std::vector<std::string>& lines);

    int row_count() const { return static_cast<int>(rows.size()); }
    bool is_square() const { return row_count() == n; }
    BitVector row(int i) const { return {rows[static_cast<std::size_t>(i)], n}; }
    void append_row(std::uint32_t w) { rows.push_back(n < 32 ? (w & ((std::uint32_t{1} << n) - 1)) : w); }

    std::vector<std::string> to_strings() const;
    bool operator==(const BitMatrix&) const = default;
};

int rank(const BitMatrix& m);

// Reduces m to reduced row echelon form in place, dropping zero rows.
// Returns the pivot column of each surviving row (strictly increasing).
std::vector<int> rref_in_place(BitMatrix& m);

// Rows spanning the orthogonal complement of an RREF matrix: one row per
// non-pivot column q, with bit q set and bit p_i = r[i][q] for each pivot p_i.
BitMatrix rref_complement(const BitMatrix& rref, const std::vector<int>& pivots);

// True iff v lies in the row space of the RREF matrix.
bool in_row_space(const BitMatrix& rref, const std::vector<int>& pivots, std::uint32_t v);

}  // namespace pkern
