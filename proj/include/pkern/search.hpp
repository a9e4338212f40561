#pragma once

#include <cstdint>
#include <vector>

#include "pkern/chain.hpp"
#include "pkern/invariants.hpp"
#include "pkern/kernel.hpp"

namespace pkern {

// Row blocks listed bottom-up: sizes[0] covers the last sizes[0] rows of the
// kernel, the final entry covers row 0 and its neighbors.  Larger bottom
// blocks mean fewer, costlier table refinements.
struct BlockPartition {
    std::vector<int> sizes;

    static BlockPartition default_for(int l);  // 2,2,..,2[,1]
    static BlockPartition all_ones(int l);

    void validate(int l) const;
    int count() const { return static_cast<int>(sizes.size()); }
    // First phase covered by block psi (blocks stack upward from phase l).
    int phi_start(int l, int psi) const;
};

struct SearchStats {
    std::uint64_t nodes_visited = 0;     // accepted tuple placements
    std::uint64_t tuples_examined = 0;   // candidate extensions tested
    std::uint64_t tables_built = 0;
    std::uint64_t prunes_prop2 = 0;
    std::uint64_t prunes_invariant = 0;
};

enum class Termination { exhausted, budget, limit };

struct SearchConfig {
    PDProfile target;
    BlockPartition blocks;            // empty: default_for(l)
    InvariantKind invariants = InvariantKind::aw;
    std::uint64_t fingerprint_seed = kDefaultFingerprintSeed;
    int max_kernels = 1;              // 0 = all
    std::uint64_t budget = 0;         // tables + examined tuples; 0 = unlimited
    int threads = 1;
};

struct SearchOutcome {
    std::vector<Kernel> kernels;  // sorted by rows; every entry verifies
    SearchStats stats;
    Termination termination = Termination::exhausted;
};

// Words of weight w over l coordinates in increasing value.
std::vector<std::uint32_t> candidate_rows(int l, int w);

// Reference search: grows the kernel bottom-up one row at a time, testing
// every weight-matched row by a fresh distance computation.  No shared
// tables, no pruning beyond exact partial distances.  Stops at the first
// kernel.
SearchOutcome basic_search(const PDProfile& target, std::uint64_t budget = 0);

// Block search over coset-leader tables: streams syndrome tuples per block,
// refines the table across block boundaries, and prunes by the leader-class
// necessary condition plus optional equivalence invariants.  Invariant
// pruning can drop kernels whose prefix code matches an earlier class, so
// run with invariants = none when completeness matters more than speed.
SearchOutcome enhanced_search(const SearchConfig& cfg);

// Fresh full check: polarization kernel and exact profile match, computed
// without any search-side shared state.
bool verify_kernel(const Kernel& k, const PDProfile& target);

}  // namespace pkern
