#pragma once

#include <cstdint>
#include <vector>

#include "pkern/gf2.hpp"

namespace pkern {

// A binary [n, k] linear code held as a generator basis plus a parity-check
// matrix.  When built from a generator the check matrix is the standard
// complement of its RREF; when built from a check matrix the rows are kept
// verbatim so syndrome coordinates match the caller's matrix.
struct LinearCode {
    int n = 0;
    int k = 0;
    BitMatrix generator;     // k rows
    BitMatrix parity_check;  // n - k rows

    static LinearCode from_generator(const BitMatrix& g);
    static LinearCode from_parity_check(const BitMatrix& h);

    int redundancy() const { return n - k; }

    // Syndrome of v: bit j is the inner product of v with check row j.
    std::uint32_t syndrome(std::uint32_t v) const;
};

LinearCode dual_code(const LinearCode& c);

// Number of codewords of each weight 0..n.  Enumerates all 2^k codewords,
// so k is capped; throws DimensionTooLarge beyond it.
std::vector<std::int64_t> weight_distribution(const LinearCode& c);

inline constexpr int kMaxEnumerationDim = 28;

// Hamming distance from v to the nearest codeword.  Chooses between
// enumerating the 2^k codewords and a syndrome-trellis sweep over 2^(n-k)
// states, whichever is cheaper.
int distance_to_code(const BitVector& v, const LinearCode& c);

}  // namespace pkern
