#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pkern/clwt.hpp"

namespace pkern {

// Minimum of t.weight_of(s0 ^ xor of any subset of others).  Stops early
// and returns the offending value as soon as something below stop_below is
// seen (pass stop_below <= 0 for an exact minimum).  Cost 2^|others| lookups.
int min_coset_weight(const CLWTTable& t, std::span<const std::uint32_t> others,
                     std::uint32_t s0, int stop_below = 0);

// Distance from row i of v to the code spanned by the earlier rows 0..i-1 of
// v together with the base code of t.  Rows must have length t.n.
int coset_distance(const BitMatrix& v, int i, const CLWTTable& t, int stop_below = 0);

// Necessary condition for extending a chain: every still-unplaced distance
// must have a nonempty coset-leader weight class.  Throws DistanceOutOfRange
// for entries outside [1, n].
bool check_necessary_condition(const WDCLVector& w, std::span<const int> d);

// One way to extend a chain by d.size() rows: element i carries the syndrome
// of the new row i and the coset-leader witness for it.
struct SyndromeTuple {
    std::vector<std::uint32_t> syndromes;
    std::vector<std::uint32_t> leaders;
};

// Streams every tuple (s_0, .., s_{m-1}) with s_i in the leader-weight class
// d[i], the s_i linearly independent, and, for each i, no subset of the
// earlier elements dropping the coset weight below d[i].  Elements advance
// last-index-fastest and classes are scanned in increasing syndrome value,
// so the order is deterministic.  An out-of-range d[i] just yields nothing.
// The table is held by reference and must outlive the stream.
class TupleStream {
  public:
    TupleStream(const CLWTTable& t, std::vector<int> d, std::uint64_t* examined = nullptr);
    TupleStream(CLWTTable&&, std::vector<int>, std::uint64_t* = nullptr) = delete;
    TupleStream(TupleStream&&) noexcept;
    TupleStream& operator=(TupleStream&&) noexcept;
    ~TupleStream();

    std::optional<SyndromeTuple> next();

  private:
    struct Enumerator;
    void reset_enumerator(int i);
    bool advance_element(int i);

    const CLWTTable* t_;
    std::vector<int> d_;
    std::uint64_t* examined_;
    std::vector<std::unique_ptr<Enumerator>> enums_;
    std::vector<std::shared_ptr<const std::vector<std::uint32_t>>> classes_;
    std::vector<std::uint32_t> chosen_;
    std::vector<std::vector<std::uint32_t>> basis_;  // reduced basis per depth
    bool first_ = true;
    bool done_ = false;
};

inline TupleStream enumerate_valid_tuples(const CLWTTable& t, std::vector<int> d,
                                          std::uint64_t* examined = nullptr) {
    return TupleStream(t, std::move(d), examined);
}

}  // namespace pkern
