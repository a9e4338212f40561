#include "pkern/clwt.hpp"

#include <algorithm>
#include <bit>

namespace pkern {

CLWTTable CLWTTable::identity(int n) {
    if (n < 1 || n > 32) throw ParseError("length out of range");
    CLWTTable t;
    t.n = n;
    t.r = n;
    t.implicit_identity = true;
    t.check = BitMatrix::identity(n);
    return t;
}

std::uint32_t CLWTTable::syndrome_of(std::uint32_t v) const {
    if (implicit_identity) return v;
    std::uint32_t s = 0;
    for (int j = 0; j < r; ++j)
        if (parity(v & check.rows[static_cast<std::size_t>(j)])) s |= std::uint32_t{1} << j;
    return s;
}

CLWTTable build_clwt(const LinearCode& c) {
    if (c.k == 0 && c.parity_check == BitMatrix::identity(c.n))
        return CLWTTable::identity(c.n);
    const int r = c.redundancy();
    if (r > kMaxTableRedundancy) throw RedundancyTooLarge("table capped at 2^26 syndromes");

    CLWTTable t;
    t.n = c.n;
    t.r = r;
    t.check = c.parity_check;
    const std::size_t states = std::size_t{1} << r;
    t.weights.assign(states, 0xFF);
    t.leaders.assign(states, 0);
    t.weights[0] = 0;

    for (int i = 0; i < c.n; ++i) {
        std::uint32_t col = 0;
        for (int j = 0; j < r; ++j)
            if ((c.parity_check.rows[static_cast<std::size_t>(j)] >> i) & 1u)
                col |= std::uint32_t{1} << j;
        if (col == 0) continue;  // the 1-branch self-loop cannot improve
        const std::uint32_t bit = std::uint32_t{1} << i;
        for (std::uint32_t s = 0; s < states; ++s) {
            const std::uint32_t u = s ^ col;
            if (s > u) continue;
            const int a = t.weights[s], b = t.weights[u];
            const std::uint32_t la = t.leaders[s], lb = t.leaders[u];
            // Strict improvement only, so ties keep the earlier-built path.
            if (b + 1 < a) { t.weights[s] = static_cast<std::uint8_t>(b + 1); t.leaders[s] = lb | bit; }
            if (a + 1 < b) { t.weights[u] = static_cast<std::uint8_t>(a + 1); t.leaders[u] = la | bit; }
        }
    }
    return t;
}

namespace {

// Expresses each row of h as a combination of the rows of basis (which must
// have full row rank).  Returns one combination word per row of h, with bit
// b set when basis row b participates; throws NotASupercode if some row of
// h falls outside the span.
std::vector<std::uint32_t> express_rows(const BitMatrix& basis, const BitMatrix& h) {
    struct Tracked { std::uint32_t row, combo; };
    std::vector<Tracked> reduced;
    for (int j = 0; j < basis.row_count(); ++j)
        reduced.push_back({basis.rows[static_cast<std::size_t>(j)], std::uint32_t{1} << j});
    // Gaussian elimination carrying the combination alongside each row.
    std::vector<int> pivots;
    std::size_t rcount = 0;
    for (int cCol = 0; cCol < basis.n && rcount < reduced.size(); ++cCol) {
        const std::uint32_t mask = std::uint32_t{1} << cCol;
        std::size_t pivot = rcount;
        while (pivot < reduced.size() && !(reduced[pivot].row & mask)) ++pivot;
        if (pivot == reduced.size()) continue;
        std::swap(reduced[rcount], reduced[pivot]);
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (i != rcount && (reduced[i].row & mask)) {
                reduced[i].row ^= reduced[rcount].row;
                reduced[i].combo ^= reduced[rcount].combo;
            }
        pivots.push_back(cCol);
        ++rcount;
    }

    std::vector<std::uint32_t> out;
    for (int j = 0; j < h.row_count(); ++j) {
        std::uint32_t x = h.rows[static_cast<std::size_t>(j)], combo = 0;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if ((x >> pivots[i]) & 1u) { x ^= reduced[i].row; combo ^= reduced[i].combo; }
        if (x != 0) throw NotASupercode("check row outside the base code's dual");
        out.push_back(combo);
    }
    return out;
}

}  // namespace

CLWTTable refine_to_supercode(const CLWTTable& base, const LinearCode& sup) {
    if (sup.n != base.n) throw ParseError("supercode length mismatch");
    if (base.r > kMaxTableRedundancy) throw RedundancyTooLarge("base table too large to scan");

    // New syndrome bit j is a fixed parity of old syndrome bits: with check
    // row j = sum_b M_jb * (base check row b), s'_j = parity(M_j & s).
    const std::vector<std::uint32_t> m = express_rows(base.check, sup.parity_check);
    const int rp = sup.redundancy();

    CLWTTable t;
    t.n = sup.n;
    t.r = rp;
    t.check = sup.parity_check;
    t.weights.assign(std::size_t{1} << rp, 0xFF);
    t.leaders.assign(std::size_t{1} << rp, 0);

    // Incremental image: s -> s+1 flips old bits 0..countr_zero(s+1), so the
    // image flips by a prefix-XOR of the columns of M.
    std::vector<std::uint32_t> prefix(static_cast<std::size_t>(base.r), 0);
    for (int i = 0; i < base.r; ++i) {
        std::uint32_t col = 0;
        for (int j = 0; j < rp; ++j)
            if ((m[static_cast<std::size_t>(j)] >> i) & 1u) col |= std::uint32_t{1} << j;
        prefix[static_cast<std::size_t>(i)] = (i ? prefix[static_cast<std::size_t>(i - 1)] : 0) ^ col;
    }

    const std::uint64_t states = base.syndrome_count();
    std::uint32_t image = 0;
    for (std::uint64_t s = 0; s < states; ++s) {
        const int w = base.weight_of(static_cast<std::uint32_t>(s));
        if (w < t.weights[image]) {  // strict: ties keep the lowest old syndrome
            t.weights[image] = static_cast<std::uint8_t>(w);
            t.leaders[image] = base.leader_of(static_cast<std::uint32_t>(s));
        }
        if (s + 1 < states)
            image ^= prefix[static_cast<std::size_t>(std::countr_zero(s + 1))];
    }
    return t;
}

WDCLVector wdcl(const CLWTTable& t) {
    WDCLVector counts(static_cast<std::size_t>(t.n) + 1, 0);
    if (t.implicit_identity) {
        // Every vector is its own leader, so class sizes are binomials.
        std::int64_t c = 1;
        for (int i = 0; i <= t.n; ++i) {
            counts[static_cast<std::size_t>(i)] = c;
            c = c * (t.n - i) / (i + 1);
        }
        return counts;
    }
    for (std::uint64_t s = 0; s < t.syndrome_count(); ++s)
        ++counts[static_cast<std::size_t>(t.weights[s])];
    return counts;
}

}  // namespace pkern
