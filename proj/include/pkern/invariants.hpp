#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pkern/clwt.hpp"
#include "pkern/linear_code.hpp"

namespace pkern {

// Weight distribution of the dual code from the primal one.  Throws
// NonIntegerResult if the input is not a valid distribution (transform
// values must be divisible by 2^k).
std::vector<std::int64_t> macwilliams_transform(const std::vector<std::int64_t>& a,
                                                int n, int k);

// Equivalence invariants.  Column permutations of a code leave all three
// untouched, so differing values prove inequivalence; equal values prove
// nothing.  Each picks the cheaper of the primal/dual side by dimension,
// which is itself permutation-stable.
std::pair<std::vector<std::int64_t>, bool> inv_weight_distribution(const LinearCode& c);
WDCLVector inv_leader_weights(const LinearCode& c);
std::pair<std::vector<std::vector<std::int64_t>>, bool> inv_shortened_multiset(const LinearCode& c);

enum class InvariantKind { none, a, aw, aws };

InvariantKind parse_invariant_kind(const std::string& s);
std::string to_string(InvariantKind k);

struct InvariantValue {
    InvariantKind kind = InvariantKind::none;
    bool dual_a = false;
    bool dual_s = false;
    std::vector<std::int64_t> ia;
    WDCLVector iw;
    std::vector<std::vector<std::int64_t>> is;

    // Canonical length-prefixed flattening; equal values flatten equally.
    std::vector<std::int64_t> serialize() const;
    bool operator==(const InvariantValue&) const = default;
};

// Computes the requested combination.  A precomputed leader-weight vector
// (from a table the caller already built) avoids a second trellis sweep.
InvariantValue compute_invariant(const LinearCode& c, InvariantKind kind,
                                 const WDCLVector* precomputed_w = nullptr);

struct Fingerprint {
    std::uint64_t a = 0, b = 0;
    bool operator==(const Fingerprint&) const = default;
};

struct FingerprintHash {
    std::size_t operator()(const Fingerprint& f) const {
        return f.a ^ (f.b * 0x9e3779b97f4a7c15ull);
    }
};

inline constexpr std::uint64_t kDefaultFingerprintSeed = 0x243f6a8885a308d3ull;

// Two independent keyed polynomial hashes mod 2^61 - 1 over serialize().
// Collisions can silently merge distinct classes; a different seed reshuffles
// them, which is why the seed is surfaced all the way up to the CLI.
Fingerprint fingerprint(const InvariantValue& v, std::uint64_t seed = kDefaultFingerprintSeed);

}  // namespace pkern
