#include "pkern/linear_code.hpp"

#include <algorithm>
#include <bit>

namespace pkern {

LinearCode LinearCode::from_generator(const BitMatrix& g) {
    LinearCode c;
    c.n = g.n;
    c.generator = g;
    std::vector<int> pivots = rref_in_place(c.generator);
    if (static_cast<int>(pivots.size()) != g.row_count())
        throw InvalidCode("generator rows are dependent");
    c.k = static_cast<int>(pivots.size());
    c.parity_check = rref_complement(c.generator, pivots);
    return c;
}

LinearCode LinearCode::from_parity_check(const BitMatrix& h) {
    BitMatrix reduced = h;
    std::vector<int> pivots = rref_in_place(reduced);
    if (static_cast<int>(pivots.size()) != h.row_count())
        throw InvalidCode("check rows are dependent");
    LinearCode c;
    c.n = h.n;
    c.k = h.n - h.row_count();
    c.parity_check = h;  // verbatim: callers rely on these syndrome coordinates
    c.generator = rref_complement(reduced, pivots);
    return c;
}

std::uint32_t LinearCode::syndrome(std::uint32_t v) const {
    std::uint32_t s = 0;
    for (int j = 0; j < parity_check.row_count(); ++j)
        if (parity(v & parity_check.rows[static_cast<std::size_t>(j)]))
            s |= std::uint32_t{1} << j;
    return s;
}

LinearCode dual_code(const LinearCode& c) {
    if (c.k == c.n) return LinearCode::from_generator(BitMatrix(c.n));
    return LinearCode::from_generator(c.parity_check);
}

std::vector<std::int64_t> weight_distribution(const LinearCode& c) {
    if (c.k > kMaxEnumerationDim) throw DimensionTooLarge("codeword enumeration capped at 2^28");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(c.n) + 1, 0);
    std::uint32_t cw = 0;
    counts[0] = 1;
    const std::uint64_t total = std::uint64_t{1} << c.k;
    for (std::uint64_t m = 1; m < total; ++m) {
        // Gray-code walk: consecutive messages differ in bit countr_zero(m).
        cw ^= c.generator.rows[static_cast<std::size_t>(std::countr_zero(m))];
        ++counts[static_cast<std::size_t>(std::popcount(cw))];
    }
    return counts;
}

namespace {

// Coset-leader weights for every syndrome of h, by a Viterbi sweep over the
// syndrome trellis: processing column i maps state s to s (bit 0, weight 0)
// and to s ^ col_i (bit 1, weight 1).
std::vector<std::uint8_t> trellis_weights(const BitMatrix& h) {
    const int r = h.row_count();
    std::vector<std::uint8_t> w(std::size_t{1} << r, 0xFF);
    w[0] = 0;
    for (int i = 0; i < h.n; ++i) {
        std::uint32_t col = 0;
        for (int j = 0; j < r; ++j)
            if ((h.rows[static_cast<std::size_t>(j)] >> i) & 1u) col |= std::uint32_t{1} << j;
        if (col == 0) continue;  // weight-1 self-loop never improves
        for (std::uint32_t s = 0; s < (std::uint32_t{1} << r); ++s) {
            const std::uint32_t t = s ^ col;
            if (s > t) continue;  // each pair once
            const int a = w[s], b = w[t];
            w[s] = static_cast<std::uint8_t>(std::min({a, b + 1, 0xFF}));
            w[t] = static_cast<std::uint8_t>(std::min({b, a + 1, 0xFF}));
        }
    }
    return w;
}

}  // namespace

int distance_to_code(const BitVector& v, const LinearCode& c) {
    if (v.n != c.n) throw ParseError("vector length does not match code length");
    const int r = c.redundancy();
    const bool enumerate = c.k <= kMaxEnumerationDim &&
        (r > 26 ||
         (std::uint64_t{1} << c.k) <= static_cast<std::uint64_t>(c.n) * (std::uint64_t{1} << r));
    if (enumerate) {
        int best = v.weight();
        std::uint32_t cw = 0;
        const std::uint64_t total = std::uint64_t{1} << c.k;
        for (std::uint64_t m = 1; m < total && best > 0; ++m) {
            cw ^= c.generator.rows[static_cast<std::size_t>(std::countr_zero(m))];
            best = std::min(best, std::popcount(cw ^ v.bits));
        }
        return best;
    }
    const std::vector<std::uint8_t> w = trellis_weights(c.parity_check);
    return w[c.syndrome(v.bits)];
}

}  // namespace pkern
