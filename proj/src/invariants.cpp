#include "pkern/invariants.hpp"

#include <algorithm>
#include <string>

namespace pkern {

namespace {

// Binomial table up to 32, fits int64 comfortably.
std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t c = 1;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

// Binary Krawtchouk value sum_j (-1)^j C(x,j) C(n-x,k-j).
__int128 krawtchouk1(int k, int x, int n) {
    __int128 acc = 0;
    for (int j = 0; j <= k; ++j) {
        const __int128 term = static_cast<__int128>(binom(x, j)) * binom(n - x, k - j);
        acc += (j & 1) ? -term : term;
    }
    return acc;
}

}  // namespace

std::vector<std::int64_t> macwilliams_transform(const std::vector<std::int64_t>& a,
                                                int n, int k) {
    if (static_cast<int>(a.size()) != n + 1) throw ParseError("distribution must have n+1 entries");
    std::vector<std::int64_t> b(static_cast<std::size_t>(n) + 1);
    const __int128 div = static_cast<__int128>(1) << k;
    for (int j = 0; j <= n; ++j) {
        __int128 acc = 0;
        for (int i = 0; i <= n; ++i)
            acc += static_cast<__int128>(a[static_cast<std::size_t>(i)]) * krawtchouk1(j, i, n);
        if (acc % div != 0 || acc < 0)
            throw NonIntegerResult("transform is not a weight distribution");
        b[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(acc / div);
    }
    return b;
}

std::pair<std::vector<std::int64_t>, bool> inv_weight_distribution(const LinearCode& c) {
    if (2 * c.k <= c.n) return {weight_distribution(c), false};
    return {weight_distribution(dual_code(c)), true};
}

WDCLVector inv_leader_weights(const LinearCode& c) { return wdcl(build_clwt(c)); }

namespace {

// Shortening at coordinate i: keep codewords with a zero there, delete the
// coordinate.  Works on any spanning set.
LinearCode shortened_at(const LinearCode& c, int i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    std::vector<std::uint32_t> rows = c.generator.rows;
    int with = -1;
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (rows[j] & bit) { with = static_cast<int>(j); break; }
    if (with >= 0) {
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (static_cast<int>(j) != with && (rows[j] & bit))
                rows[j] ^= rows[static_cast<std::size_t>(with)];
        rows.erase(rows.begin() + with);
    }
    BitMatrix g(c.n - 1);
    const std::uint32_t low = bit - 1;
    for (std::uint32_t w : rows) g.rows.push_back((w & low) | ((w >> (i + 1)) << i));
    return LinearCode::from_generator(g);
}

}  // namespace

std::pair<std::vector<std::vector<std::int64_t>>, bool> inv_shortened_multiset(
    const LinearCode& c) {
    const bool dual = 2 * c.k > c.n;
    const LinearCode side = dual ? dual_code(c) : c;
    std::vector<std::vector<std::int64_t>> dists;
    dists.reserve(static_cast<std::size_t>(side.n));
    for (int i = 0; i < side.n; ++i)
        dists.push_back(weight_distribution(shortened_at(side, i)));
    std::sort(dists.begin(), dists.end());
    return {std::move(dists), dual};
}

InvariantKind parse_invariant_kind(const std::string& s) {
    if (s == "none") return InvariantKind::none;
    if (s == "a") return InvariantKind::a;
    if (s == "aw") return InvariantKind::aw;
    if (s == "aws") return InvariantKind::aws;
    throw ParseError("unknown invariant kind '" + s + "'");
}

std::string to_string(InvariantKind k) {
    switch (k) {
        case InvariantKind::none: return "none";
        case InvariantKind::a: return "a";
        case InvariantKind::aw: return "aw";
        case InvariantKind::aws: return "aws";
    }
    return "?";
}

InvariantValue compute_invariant(const LinearCode& c, InvariantKind kind,
                                 const WDCLVector* precomputed_w) {
    InvariantValue v;
    v.kind = kind;
    if (kind == InvariantKind::none) return v;
    std::tie(v.ia, v.dual_a) = inv_weight_distribution(c);
    if (kind == InvariantKind::a) return v;
    v.iw = precomputed_w ? *precomputed_w : inv_leader_weights(c);
    if (kind == InvariantKind::aw) return v;
    std::tie(v.is, v.dual_s) = inv_shortened_multiset(c);
    return v;
}

std::vector<std::int64_t> InvariantValue::serialize() const {
    std::vector<std::int64_t> out;
    out.push_back(static_cast<std::int64_t>(kind));
    out.push_back(dual_a ? 1 : 0);
    out.push_back(static_cast<std::int64_t>(ia.size()));
    out.insert(out.end(), ia.begin(), ia.end());
    out.push_back(static_cast<std::int64_t>(iw.size()));
    out.insert(out.end(), iw.begin(), iw.end());
    out.push_back(dual_s ? 1 : 0);
    out.push_back(static_cast<std::int64_t>(is.size()));
    for (const auto& d : is) {
        out.push_back(static_cast<std::int64_t>(d.size()));
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kMersenne61);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kMersenne61) s -= kMersenne61;
    return s;
}

std::uint64_t poly_hash(const std::vector<std::int64_t>& m, std::uint64_t mult) {
    std::uint64_t h = 0;
    for (std::int64_t v : m) {
        const std::uint64_t u = (static_cast<std::uint64_t>(v) % kMersenne61 + 1);
        h = mulmod61(h, mult);
        h += u;
        if (h >= kMersenne61) h -= kMersenne61;
    }
    return h;
}

}  // namespace

Fingerprint fingerprint(const InvariantValue& v, std::uint64_t seed) {
    const std::vector<std::int64_t> s = v.serialize();
    const std::uint64_t m1 = splitmix64(seed) % (kMersenne61 - 4) + 2;
    const std::uint64_t m2 = splitmix64(seed ^ 0xda3e39cb94b95bdbull) % (kMersenne61 - 4) + 2;
    return {poly_hash(s, m1), poly_hash(s, m2)};
}

}  // namespace pkern
