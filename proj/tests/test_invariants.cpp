#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "pkern/invariants.hpp"

using namespace pkern;
using namespace testutil;

namespace {

// Distinct k-dimensional codes of length n, deduplicated by their word sets.
std::vector<LinearCode> all_codes(int n, int k) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<LinearCode> out;
    const std::uint32_t top = low_mask(n);
    std::vector<std::uint32_t> gens(static_cast<std::size_t>(k));

    auto rec = [&](auto&& self, int i, std::uint32_t from) -> void {
        if (i == k) {
            BitMatrix g(n);
            for (std::uint32_t w : gens) g.append_row(w);
            if (rank(g) != k) return;
            std::vector<std::uint32_t> words = span_words(g.rows);
            std::sort(words.begin(), words.end());
            if (seen.insert(words).second) out.push_back(LinearCode::from_generator(g));
            return;
        }
        for (std::uint32_t w = from; w <= top; ++w) {
            gens[static_cast<std::size_t>(i)] = w;
            self(self, i + 1, w + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

LinearCode equivalent_code(std::mt19937_64& rng, const LinearCode& c) {
    const BitMatrix mixed = random_row_mix(rng, c.generator);
    const BitMatrix permuted = permute_columns(mixed, random_permutation(rng, c.n));
    return LinearCode::from_generator(permuted);
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("transform of small distributions") {
    // Full space, repetition, and the self-dual pair code.
    CHECK(macwilliams_transform({1, 2, 1}, 2, 2) == std::vector<std::int64_t>{1, 0, 0});
    CHECK(macwilliams_transform({1, 0, 0, 1}, 3, 1) == std::vector<std::int64_t>{1, 0, 3, 0});
    CHECK(macwilliams_transform({1, 0, 1}, 2, 1) == std::vector<std::int64_t>{1, 0, 1});
    CHECK_THROWS_AS(macwilliams_transform({1, 0, 1, 1}, 3, 1), NonIntegerResult);
    CHECK_THROWS_AS(macwilliams_transform({1, 0}, 3, 1), ParseError);
}

TEST_CASE("transform matches dual enumeration") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const LinearCode c = random_code(rng, n, k);
        const std::vector<std::int64_t> a = weight_distribution(c);
        const std::vector<std::int64_t> b = macwilliams_transform(a, n, k);
        CHECK(b == weight_distribution(dual_code(c)));
        // Applying the transform twice returns the original distribution.
        CHECK(macwilliams_transform(b, n, n - k) == a);
    }
}

TEST_CASE("distribution invariant picks the cheaper side") {
    const LinearCode rep = LinearCode::from_generator(BitMatrix::from_strings({"111"}));
    const auto [ia_rep, dual_rep] = inv_weight_distribution(rep);
    CHECK(ia_rep == std::vector<std::int64_t>{1, 0, 0, 1});
    CHECK_FALSE(dual_rep);

    const LinearCode even = dual_code(rep);
    const auto [ia_even, dual_even] = inv_weight_distribution(even);
    CHECK(ia_even == std::vector<std::int64_t>{1, 0, 0, 1});
    CHECK(dual_even);

    const LinearCode pairs =
        LinearCode::from_generator(BitMatrix::from_strings({"1100", "0011"}));
    const auto [ia_pairs, dual_pairs] = inv_weight_distribution(pairs);
    CHECK(ia_pairs == std::vector<std::int64_t>{1, 0, 2, 0, 1});
    CHECK_FALSE(dual_pairs);
}

TEST_CASE("leader weight invariant") {
    const LinearCode rep = LinearCode::from_generator(BitMatrix::from_strings({"111"}));
    CHECK(inv_leader_weights(rep) == WDCLVector{1, 3, 0, 0});
    CHECK(inv_leader_weights(LinearCode::from_generator(BitMatrix(3))) ==
          WDCLVector{1, 3, 3, 1});
    CHECK(inv_leader_weights(LinearCode::from_generator(BitMatrix::identity(3))) ==
          WDCLVector{1, 0, 0, 0});
}

TEST_CASE("shortened multiset invariant") {
    const LinearCode rep = LinearCode::from_generator(BitMatrix::from_strings({"111"}));
    const auto [is_rep, dual_s] = inv_shortened_multiset(rep);
    CHECK_FALSE(dual_s);
    REQUIRE(is_rep.size() == 3);
    // Shortening the repetition code anywhere leaves only the zero word.
    for (const auto& d : is_rep) CHECK(d == std::vector<std::int64_t>{1, 0, 0});

    // The dual side is used when the dimension crosses half the length, and
    // equals the primal computation on the dual code.
    const LinearCode even = dual_code(rep);
    const auto [is_even, dual_even] = inv_shortened_multiset(even);
    CHECK(dual_even);
    CHECK(is_even == inv_shortened_multiset(rep).first);
}

TEST_CASE("shortened multiset separates codes the distribution cannot") {
    bool found = false;
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {6, 3}, {7, 3}}) {
        std::map<std::vector<std::int64_t>, std::vector<std::size_t>> by_wd;
        const std::vector<LinearCode> codes = all_codes(n, k);
        for (std::size_t i = 0; i < codes.size(); ++i)
            by_wd[weight_distribution(codes[i])].push_back(i);
        for (const auto& [wd, idxs] : by_wd) {
            if (idxs.size() < 2) continue;
            std::set<std::vector<std::vector<std::int64_t>>> shapes;
            for (std::size_t i : idxs) shapes.insert(inv_shortened_multiset(codes[i]).first);
            if (shapes.size() > 1) { found = true; break; }
        }
        if (found) break;
    }
    CHECK(found);
}

TEST_CASE("equivalence leaves all three invariants unchanged") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        const LinearCode c = random_code(rng, n, k);
        const LinearCode e = equivalent_code(rng, c);
        CHECK(inv_weight_distribution(c) == inv_weight_distribution(e));
        CHECK(inv_leader_weights(c) == inv_leader_weights(e));
        CHECK(inv_shortened_multiset(c) == inv_shortened_multiset(e));
    }
}

TEST_CASE("invariant kinds parse and stack") {
    CHECK(parse_invariant_kind("none") == InvariantKind::none);
    CHECK(parse_invariant_kind("a") == InvariantKind::a);
    CHECK(parse_invariant_kind("aw") == InvariantKind::aw);
    CHECK(parse_invariant_kind("aws") == InvariantKind::aws);
    CHECK_THROWS_AS(parse_invariant_kind("w"), ParseError);
    CHECK(to_string(InvariantKind::aws) == "aws");

    const LinearCode rep = LinearCode::from_generator(BitMatrix::from_strings({"111"}));
    const InvariantValue none = compute_invariant(rep, InvariantKind::none);
    CHECK(none.ia.empty());
    const InvariantValue a = compute_invariant(rep, InvariantKind::a);
    CHECK(a.ia == std::vector<std::int64_t>{1, 0, 0, 1});
    CHECK(a.iw.empty());
    const InvariantValue aw = compute_invariant(rep, InvariantKind::aw);
    CHECK(aw.iw == WDCLVector{1, 3, 0, 0});
    CHECK(aw.is.empty());
    const InvariantValue aws = compute_invariant(rep, InvariantKind::aws);
    CHECK(aws.is.size() == 3);

    // A precomputed leader histogram is taken at face value.
    const WDCLVector fake{9, 9, 9, 9};
    CHECK(compute_invariant(rep, InvariantKind::aw, &fake).iw == fake);
}

TEST_CASE("serialization is canonical and injective on a corpus") {
    std::mt19937_64 rng(53);
    std::map<std::vector<std::int64_t>, InvariantValue> seen;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const LinearCode c = random_code(rng, n, k);
        const InvariantValue v = compute_invariant(c, InvariantKind::aws);
        const auto [it, inserted] = seen.emplace(v.serialize(), v);
        if (!inserted) CHECK(it->second == v);
    }
}

TEST_CASE("fingerprints are deterministic, seeded, and collision-free here") {
    const LinearCode rep = LinearCode::from_generator(BitMatrix::from_strings({"111"}));
    const LinearCode even = dual_code(rep);
    const InvariantValue v_rep = compute_invariant(rep, InvariantKind::a);
    const InvariantValue v_even = compute_invariant(even, InvariantKind::a);

    CHECK(fingerprint(v_rep) == fingerprint(v_rep));
    CHECK(fingerprint(v_rep, 7) == fingerprint(v_rep, 7));
    CHECK_FALSE(fingerprint(v_rep) == fingerprint(v_rep, 7));
    // Same distribution on opposite sides still separates the two codes.
    CHECK_FALSE(fingerprint(v_rep) == fingerprint(v_even));

    std::mt19937_64 rng(54);
    std::map<std::vector<std::int64_t>, Fingerprint> prints;
    std::set<std::pair<std::uint64_t, std::uint64_t>> distinct;
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const InvariantValue v =
            compute_invariant(random_code(rng, n, k), InvariantKind::aws);
        const Fingerprint f = fingerprint(v);
        const auto [it, inserted] = prints.emplace(v.serialize(), f);
        if (!inserted) CHECK(it->second == f);
        else CHECK(distinct.insert({f.a, f.b}).second);
    }
}

}  // TEST_SUITE
