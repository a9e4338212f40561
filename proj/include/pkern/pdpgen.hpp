#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pkern/kernel.hpp"

namespace pkern {

// Largest d with sum_{i<k} ceil(d / 2^i) <= n; an upper bound on the minimum
// distance of any [n, k] binary code.
int griesmer_bound(int n, int k);

// Upper bounds on best-known minimum distances.  Built-in entries come from
// the Griesmer bound; a file of "n k d" lines tightens individual cells.
class DistanceBoundTable {
  public:
    static DistanceBoundTable builtin();
    static DistanceBoundTable from_file(const std::string& path);

    int bound(int n, int k) const;
    // True when the cell came from an external file rather than Griesmer.
    bool is_override(int n, int k) const { return overrides_.count({n, k}) > 0; }

  private:
    std::map<std::pair<int, int>, int> overrides_;
};

// D_1 = 2 forces every later partial distance even.
bool lemma4_ok(std::span<const int> d);

// Counting bound: for every i >= 1, sum_{i' = i}^{l} 2^(l - i') D_{i'-1}
// cannot exceed 2^(l - i) * l.
bool lemma5_ok(std::span<const int> d);

// Generalized Krawtchouk polynomial value, exact.  Throws Overflow if the
// result leaves int64.
std::int64_t krawtchouk(int k, int x, int n, int lambda = 1);

// Linear-programming feasibility of a nested distribution ladder matching
// the profile: one relaxed weight distribution per chain level, tied by
// level sums, per-level equality below the transition distance, and
// Krawtchouk nonnegativity.  Exact rational arithmetic up to l = 20,
// floating point beyond; throws SolverBudgetExceeded past the pivot cap.
bool lp_feasible(const PDProfile& d);

struct PDPCandidate {
    PDProfile d;
    double exponent = 0;
    // Bits record which screens were applied: 1 dist-bound, 2 parity,
    // 4 counting, 8 LP.
    unsigned filters = 0;
};

struct GenOptions {
    bool use_dist_bound = true;
    bool use_lemma4 = true;
    bool use_lemma5 = true;
    bool use_lp = true;
    std::uint64_t limit = 0;  // 0 = unlimited
};

// Emits every nondecreasing profile of length l with exponent at least
// min_exponent that survives the enabled screens, in lexicographic order.
// The callback returning false stops generation early.
void generate_candidates(int l, double min_exponent, const DistanceBoundTable& bounds,
                         const GenOptions& opts,
                         const std::function<bool(const PDPCandidate&)>& emit);

std::vector<PDPCandidate> generate_candidates_vec(int l, double min_exponent,
                                                  const DistanceBoundTable& bounds,
                                                  const GenOptions& opts = {});

}  // namespace pkern
