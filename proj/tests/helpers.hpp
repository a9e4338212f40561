#pragma once

// Brute-force oracles and random generators shared by the unit suites.  The
// oracles stick to plain enumeration so they share no code path with the
// library implementations they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pkern/gf2.hpp"
#include "pkern/linear_code.hpp"

namespace testutil {

inline std::uint32_t low_mask(int n) {
    return n >= 32 ? 0xFFFFFFFFu : ((std::uint32_t{1} << n) - 1);
}

// All 2^k words spanned by the given rows (k <= 20), duplicates possible only
// if the rows are dependent -- callers that need a set must dedupe.
inline std::vector<std::uint32_t> span_words(const std::vector<std::uint32_t>& rows) {
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t{1} << rows.size());
    const std::uint64_t total = std::uint64_t{1} << rows.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::uint32_t w = 0;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if ((mask >> j) & 1) w ^= rows[j];
        out.push_back(w);
    }
    return out;
}

// Hamming distance from v to the span of the rows, by full enumeration.
inline int brute_distance(std::uint32_t v, const std::vector<std::uint32_t>& rows) {
    int best = std::popcount(v);
    for (std::uint32_t w : span_words(rows)) best = std::min(best, std::popcount(v ^ w));
    return best;
}

// Partial distance profile straight from the definition: row i against the
// span of rows i+1..l-1.
inline std::vector<int> brute_pdp(const pkern::BitMatrix& m) {
    std::vector<int> d;
    for (int i = 0; i < m.row_count(); ++i) {
        std::vector<std::uint32_t> below(m.rows.begin() + i + 1, m.rows.end());
        d.push_back(brute_distance(m.rows[static_cast<std::size_t>(i)], below));
    }
    return d;
}

// Per-syndrome minimum weight over all 2^n vectors.
inline std::vector<int> brute_coset_minima(const pkern::LinearCode& c) {
    std::vector<int> minw(std::size_t{1} << c.redundancy(), c.n + 1);
    const std::uint64_t total = std::uint64_t{1} << c.n;
    for (std::uint64_t v = 0; v < total; ++v) {
        const std::uint32_t s = c.syndrome(static_cast<std::uint32_t>(v));
        minw[s] = std::min(minw[s], std::popcount(static_cast<std::uint32_t>(v)));
    }
    return minw;
}

// Weight distribution by enumerating the span directly.
inline std::vector<std::int64_t> brute_weight_distribution(const pkern::BitMatrix& g, int n) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t w : span_words(g.rows)) ++a[static_cast<std::size_t>(std::popcount(w))];
    return a;
}

// Can some column permutation make m upper triangular?  Tries all l!
// assignments, so keep l <= 6.
inline bool brute_triangulable(const pkern::BitMatrix& m) {
    const int l = m.n;
    std::vector<int> pos(static_cast<std::size_t>(l));
    std::iota(pos.begin(), pos.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < m.row_count() && ok; ++i)
            for (int c = 0; c < l && ok; ++c)
                if (((m.rows[static_cast<std::size_t>(i)] >> c) & 1) &&
                    pos[static_cast<std::size_t>(c)] < i)
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(pos.begin(), pos.end()));
    return false;
}

inline pkern::BitMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    pkern::BitMatrix m(cols);
    for (int i = 0; i < rows; ++i)
        m.append_row(static_cast<std::uint32_t>(rng()) & low_mask(cols));
    return m;
}

// Random [n, k] code: rejection-samples a full-rank generator.
inline pkern::LinearCode random_code(std::mt19937_64& rng, int n, int k) {
    for (;;) {
        pkern::BitMatrix g = random_matrix(rng, k, n);
        if (pkern::rank(g) == k) return pkern::LinearCode::from_generator(g);
    }
}

inline pkern::BitMatrix random_invertible(std::mt19937_64& rng, int l) {
    for (;;) {
        pkern::BitMatrix m = random_matrix(rng, l, l);
        if (pkern::rank(m) == l) return m;
    }
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Moves column c of m to column p[c] of the result.
inline pkern::BitMatrix permute_columns(const pkern::BitMatrix& m, const std::vector<int>& p) {
    pkern::BitMatrix out(m.n);
    for (std::uint32_t row : m.rows) {
        std::uint32_t w = 0;
        for (int c = 0; c < m.n; ++c)
            if ((row >> c) & 1) w |= std::uint32_t{1} << p[static_cast<std::size_t>(c)];
        out.append_row(w);
    }
    return out;
}

// Invertible row operations: the result spans the same row space.
inline pkern::BitMatrix random_row_mix(std::mt19937_64& rng, pkern::BitMatrix g) {
    const int k = g.row_count();
    if (k >= 2) {
        for (int step = 0; step < 4 * k; ++step) {
            const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(k - 1));
            if (j >= i) ++j;
            g.rows[static_cast<std::size_t>(i)] ^= g.rows[static_cast<std::size_t>(j)];
        }
    }
    std::shuffle(g.rows.begin(), g.rows.end(), rng);
    return g;
}

// Kronecker product of square matrices: entry ((i*lb + r), (j*lb + c)) is
// a[i][j] * b[r][c].
inline pkern::BitMatrix kron(const pkern::BitMatrix& a, const pkern::BitMatrix& b) {
    const int la = a.n, lb = b.n;
    pkern::BitMatrix out(la * lb);
    for (int i = 0; i < la; ++i)
        for (int r = 0; r < lb; ++r) {
            std::uint32_t w = 0;
            for (int j = 0; j < la; ++j) {
                if (!((a.rows[static_cast<std::size_t>(i)] >> j) & 1)) continue;
                const std::uint32_t brow = b.rows[static_cast<std::size_t>(r)];
                w |= brow << (j * lb);
            }
            out.append_row(w);
        }
    return out;
}

inline std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline pkern::BitMatrix arikan_matrix() {
    return pkern::BitMatrix::from_strings({"10", "11"});
}

}  // namespace testutil
