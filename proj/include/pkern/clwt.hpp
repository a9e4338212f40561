#pragma once

#include <cstdint>
#include <vector>

#include "pkern/linear_code.hpp"

namespace pkern {

// Count of cosets per leader weight 0..n (entries sum to 2^r).
using WDCLVector = std::vector<std::int64_t>;

// Per-syndrome minimum coset weight plus one witness vector attaining it.
// For the zero code every vector is its own coset leader, so that case is
// held implicitly (weight(s) = popcount, leader(s) = s) and supports n up
// to 32 without materializing 2^n entries of anything but identity.
struct CLWTTable {
    int n = 0;
    int r = 0;
    bool implicit_identity = false;
    BitMatrix check;                    // r x n, row j defines syndrome bit j
    std::vector<std::uint8_t> weights;  // 2^r entries unless implicit
    std::vector<std::uint32_t> leaders;

    static CLWTTable identity(int n);

    std::uint64_t syndrome_count() const { return std::uint64_t{1} << r; }

    int weight_of(std::uint32_t s) const {
        return implicit_identity ? std::popcount(s) : weights[s];
    }
    std::uint32_t leader_of(std::uint32_t s) const {
        return implicit_identity ? s : leaders[s];
    }
    std::uint32_t syndrome_of(std::uint32_t v) const;
};

inline constexpr int kMaxTableRedundancy = 26;

// Builds the table by a Viterbi sweep over the syndrome trellis of C's
// check matrix.  k = 0 yields the implicit identity table.  Ties between
// coset vectors of equal weight keep the first reached, which makes leaders
// deterministic.  Throws RedundancyTooLarge past 2^26 syndromes.
CLWTTable build_clwt(const LinearCode& c);

// Table of a supercode from the table of a subcode: each new syndrome class
// is the union of 2^t old classes and inherits their minimum.  The
// supercode's check rows must lie in the row space of the base table's
// check matrix (otherwise NotASupercode).  One pass over the 2^r base
// syndromes, so the base table's r is capped at 26.
CLWTTable refine_to_supercode(const CLWTTable& base, const LinearCode& sup);

WDCLVector wdcl(const CLWTTable& t);

}  // namespace pkern
