#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pkern/fixtures.hpp"
#include "pkern/kernel.hpp"
#include "pkern/pdpgen.hpp"

using namespace pkern;
using namespace testutil;

namespace {

// Literal restatements of the two counting screens, used as oracles.
bool oracle_parity(const std::vector<int>& d) {
    const int l = static_cast<int>(d.size());
    if (l < 2 || d[1] != 2) return true;
    for (int i = 1; i < l; ++i)
        if (d[static_cast<std::size_t>(i)] % 2 != 0) return false;
    return true;
}

bool oracle_counting(const std::vector<int>& d) {
    const int l = static_cast<int>(d.size());
    for (int i = 1; i <= l; ++i) {
        long long sum = 0;
        for (int ip = i; ip <= l; ++ip)
            sum += (1LL << (l - ip)) * d[static_cast<std::size_t>(ip - 1)];
        if (sum > (1LL << (l - i)) * l) return false;
    }
    return true;
}

// All nondecreasing profiles over [1, l]^l.
std::vector<std::vector<int>> all_nondecreasing(int l) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i, int from) -> void {
        if (i == l) { out.push_back(cur); return; }
        for (int v = from; v <= l; ++v) {
            cur.push_back(v);
            self(self, i + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, 1);
    return out;
}

}  // namespace

TEST_SUITE("pdpgen") {

TEST_CASE("distance upper bounds") {
    CHECK(griesmer_bound(7, 4) == 3);
    CHECK(griesmer_bound(7, 1) == 7);
    CHECK(griesmer_bound(4, 3) == 2);
    for (int n = 1; n <= 16; ++n) {
        CHECK(griesmer_bound(n, n) == 1);
        CHECK(griesmer_bound(n, 1) == n);
        for (int k = 2; k <= n; ++k)
            CHECK(griesmer_bound(n, k) <= griesmer_bound(n, k - 1));
    }

    const DistanceBoundTable builtin = DistanceBoundTable::builtin();
    CHECK(builtin.bound(7, 4) == 3);
    CHECK_FALSE(builtin.is_override(7, 4));
}

TEST_CASE("distance bound files override single cells") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pkern_dtable_test";
    fs::create_directories(dir);
    const fs::path file = dir / "bounds.txt";
    {
        std::ofstream out(file);
        out << "# comment line\n";
        out << "16 8 5\n";
        out << "7 4 3\n";
    }
    const DistanceBoundTable t = DistanceBoundTable::from_file(file.string());
    CHECK(t.bound(16, 8) == 5);
    CHECK(t.is_override(16, 8));
    CHECK(t.bound(16, 7) == griesmer_bound(16, 7));
    CHECK_FALSE(t.is_override(16, 7));

    {
        std::ofstream out(file);
        out << "16 8\n";
    }
    CHECK_THROWS_AS(DistanceBoundTable::from_file(file.string()), ParseError);
    CHECK_THROWS_AS(DistanceBoundTable::from_file((dir / "missing.txt").string()), ParseError);
    fs::remove_all(dir);
}

TEST_CASE("parity screen") {
    CHECK_FALSE(lemma4_ok(std::vector<int>{1, 2, 3, 4}));
    CHECK(lemma4_ok(std::vector<int>{1, 2, 2, 4}));
    CHECK(lemma4_ok(std::vector<int>{1, 1, 3, 3}));  // no D_1 = 2, no constraint
    for (int l = 2; l <= 4; ++l)
        for (const auto& d : all_nondecreasing(l))
            CHECK(lemma4_ok(d) == oracle_parity(d));
}

TEST_CASE("counting screen") {
    CHECK(lemma5_ok(std::vector<int>{1, 2}));
    CHECK_FALSE(lemma5_ok(std::vector<int>{2, 2}));
    CHECK(lemma5_ok(load_named_kernel("K17_star").published_pdp));
    for (int l = 2; l <= 4; ++l)
        for (const auto& d : all_nondecreasing(l))
            CHECK(lemma5_ok(d) == oracle_counting(d));
}

TEST_CASE("polynomial values") {
    CHECK(krawtchouk(2, 1, 7) == 9);
    for (int n = 2; n <= 10; ++n)
        for (int x = 0; x <= n; ++x) {
            CHECK(krawtchouk(0, x, n) == 1);
            CHECK(krawtchouk(1, x, n) == n - 2 * x);
        }
    // Weighted lambda: k=1, x=1, n=2, lambda=3 gives 3*1 - 1 = 2.
    CHECK(krawtchouk(1, 1, 2, 3) == 2);
    CHECK_THROWS_AS(krawtchouk(10, 0, 20, 100), Overflow);

    // Orthogonality against the binomial weights.
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            std::int64_t acc = 0;
            for (int i = 0; i <= n; ++i) acc += binom(n, i) * krawtchouk(k, i, n);
            CHECK(acc == 0);
        }
}

TEST_CASE("lp screen on small profiles") {
    CHECK(lp_feasible({1, 2}));
    CHECK_FALSE(lp_feasible({2, 2}));
    CHECK(lp_feasible({1, 2, 2, 4}));
    CHECK(lp_feasible({1, 1, 1, 1}));
    CHECK_THROWS_AS(lp_feasible({0, 2}), DistanceOutOfRange);
    CHECK_THROWS_AS(lp_feasible({1, 3}), DistanceOutOfRange);
}

TEST_CASE("candidate generation examples") {
    const DistanceBoundTable bounds = DistanceBoundTable::builtin();
    const std::vector<PDPCandidate> two = generate_candidates_vec(2, 0.4, bounds);
    REQUIRE(two.size() == 1);
    CHECK(two[0].d == PDProfile{1, 2});
    CHECK(two[0].exponent == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(two[0].filters == 15u);

    const std::vector<PDPCandidate> four = generate_candidates_vec(4, 0.49, bounds);
    REQUIRE(four.size() == 1);
    CHECK(four[0].d == PDProfile{1, 2, 2, 4});

    CHECK(generate_candidates_vec(4, 0.999, bounds).empty());
    CHECK_THROWS_AS(generate_candidates_vec(1, 0.0, bounds), ParseError);
}

TEST_CASE("candidates come out in lexicographic order with true exponents") {
    const DistanceBoundTable bounds = DistanceBoundTable::builtin();
    for (int l = 4; l <= 6; ++l) {
        const std::vector<PDPCandidate> got = generate_candidates_vec(l, 0.0, bounds);
        CHECK(!got.empty());
        for (std::size_t i = 0; i < got.size(); ++i) {
            const PDPCandidate& c = got[i];
            CHECK(static_cast<int>(c.d.size()) == l);
            CHECK(std::is_sorted(c.d.begin(), c.d.end()));
            CHECK(c.exponent == doctest::Approx(error_exponent(c.d)).epsilon(1e-12));
            if (i > 0) CHECK(got[i - 1].d < c.d);
        }
    }
}

TEST_CASE("limit and callback stop generation early") {
    const DistanceBoundTable bounds = DistanceBoundTable::builtin();
    GenOptions limited;
    limited.limit = 2;
    const std::vector<PDPCandidate> firsts = generate_candidates_vec(6, 0.0, bounds, limited);
    CHECK(firsts.size() == 2);
    const std::vector<PDPCandidate> all = generate_candidates_vec(6, 0.0, bounds);
    REQUIRE(all.size() >= 2);
    CHECK(firsts[0].d == all[0].d);
    CHECK(firsts[1].d == all[1].d);

    int seen = 0;
    generate_candidates(6, 0.0, bounds, GenOptions{},
                        [&](const PDPCandidate&) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("screens equal post-filtering the unscreened stream") {
    const DistanceBoundTable bounds = DistanceBoundTable::builtin();
    GenOptions off;
    off.use_dist_bound = off.use_lemma4 = off.use_lemma5 = off.use_lp = false;

    for (int l = 4; l <= 5; ++l) {
        const std::vector<PDPCandidate> raw = generate_candidates_vec(l, 0.0, bounds, off);
        // With every screen off the stream is all nondecreasing profiles.
        CHECK(raw.size() == all_nondecreasing(l).size());
        for (const PDPCandidate& c : raw) CHECK(c.filters == 0u);

        std::vector<PDProfile> expect;
        for (const PDPCandidate& c : raw) {
            bool ok = true;
            for (int i = 0; ok && i < l; ++i)
                if (c.d[static_cast<std::size_t>(i)] > bounds.bound(l, l - i)) ok = false;
            if (ok && lemma4_ok(c.d) && lemma5_ok(c.d) && lp_feasible(c.d))
                expect.push_back(c.d);
        }

        const std::vector<PDPCandidate> screened = generate_candidates_vec(l, 0.0, bounds);
        REQUIRE(screened.size() == expect.size());
        for (std::size_t i = 0; i < screened.size(); ++i) CHECK(screened[i].d == expect[i]);
    }
}

TEST_CASE("exponent threshold is respected") {
    const DistanceBoundTable bounds = DistanceBoundTable::builtin();
    for (double min_e : {0.3, 0.45, 0.5}) {
        for (const PDPCandidate& c : generate_candidates_vec(5, min_e, bounds))
            CHECK(c.exponent >= min_e - 1e-9);
    }
}

}  // TEST_SUITE
