#include "pkern/chain.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace pkern {

int min_coset_weight(const CLWTTable& t, std::span<const std::uint32_t> others,
                     std::uint32_t s0, int stop_below) {
    const int m = static_cast<int>(others.size());
    if (m > kMaxEnumerationDim) throw DimensionTooLarge("subset enumeration capped at 2^28");
    int best = t.weight_of(s0);
    if (best < stop_below) return best;
    std::uint32_t cur = s0;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t g = 1; g < total; ++g) {
        cur ^= others[static_cast<std::size_t>(std::countr_zero(g))];
        const int w = t.weight_of(cur);
        if (w < best) {
            best = w;
            if (best < stop_below) return best;
        }
    }
    return best;
}

int coset_distance(const BitMatrix& v, int i, const CLWTTable& t, int stop_below) {
    if (v.n != t.n) throw ParseError("row length does not match table length");
    if (i < 0 || i >= v.row_count()) throw PhaseOutOfRange("row index out of range");
    std::vector<std::uint32_t> others;
    for (int j = 0; j < i; ++j)
        others.push_back(t.syndrome_of(v.rows[static_cast<std::size_t>(j)]));
    return min_coset_weight(t, others, t.syndrome_of(v.rows[static_cast<std::size_t>(i)]), stop_below);
}

bool check_necessary_condition(const WDCLVector& w, std::span<const int> d) {
    const int n = static_cast<int>(w.size()) - 1;
    for (int di : d) {
        if (di < 1 || di > n) throw DistanceOutOfRange("distance outside [1, n]");
        if (w[static_cast<std::size_t>(di)] == 0) return false;
    }
    return true;
}

// Candidate syndromes for one element, in increasing numeric order.  For an
// implicit identity table a weight class is walked with Gosper's hack; for
// an explicit table the class is a pre-extracted sorted vector.
struct TupleStream::Enumerator {
    const std::vector<std::uint32_t>* cls = nullptr;  // explicit class
    std::size_t pos = 0;
    std::uint64_t gosper = 0;   // next word to emit (implicit mode)
    std::uint64_t limit = 0;    // 2^n
    bool implicit = false;

    std::optional<std::uint32_t> next() {
        if (implicit) {
            if (gosper == 0 || gosper >= limit) return std::nullopt;
            const std::uint64_t x = gosper;
            const std::uint64_t u = x & (~x + 1);
            const std::uint64_t y = x + u;
            gosper = y | (((x ^ y) >> 2) / u);
            return static_cast<std::uint32_t>(x);
        }
        if (pos >= cls->size()) return std::nullopt;
        return (*cls)[pos++];
    }
};

TupleStream::TupleStream(TupleStream&&) noexcept = default;
TupleStream& TupleStream::operator=(TupleStream&&) noexcept = default;
TupleStream::~TupleStream() = default;

TupleStream::TupleStream(const CLWTTable& t, std::vector<int> d, std::uint64_t* examined)
    : t_(&t), d_(std::move(d)), examined_(examined) {
    const int m = static_cast<int>(d_.size());
    chosen_.assign(static_cast<std::size_t>(m), 0);
    basis_.assign(static_cast<std::size_t>(m) + 1, {});
    classes_.resize(static_cast<std::size_t>(m));
    enums_.resize(static_cast<std::size_t>(m));
    if (t_->implicit_identity) return;
    // One pass over the table collects every needed weight class, shared
    // between elements asking for the same distance.
    std::map<int, std::shared_ptr<std::vector<std::uint32_t>>> by_weight;
    for (int di : d_)
        if (di >= 1 && di <= t_->n) by_weight.emplace(di, nullptr);
    if (by_weight.empty()) return;
    for (auto& [w, vec] : by_weight) vec = std::make_shared<std::vector<std::uint32_t>>();
    for (std::uint64_t s = 0; s < t_->syndrome_count(); ++s) {
        auto it = by_weight.find(t_->weights[s]);
        if (it != by_weight.end()) it->second->push_back(static_cast<std::uint32_t>(s));
    }
    for (int i = 0; i < m; ++i) {
        auto it = by_weight.find(d_[static_cast<std::size_t>(i)]);
        if (it != by_weight.end()) classes_[static_cast<std::size_t>(i)] = it->second;
    }
}

void TupleStream::reset_enumerator(int i) {
    auto e = std::make_unique<Enumerator>();
    if (t_->implicit_identity) {
        e->implicit = true;
        e->limit = std::uint64_t{1} << t_->n;
        e->gosper = (std::uint64_t{1} << d_[static_cast<std::size_t>(i)]) - 1;
    } else {
        e->cls = classes_[static_cast<std::size_t>(i)].get();
    }
    enums_[static_cast<std::size_t>(i)] = std::move(e);
}

bool TupleStream::advance_element(int i) {
    Enumerator& e = *enums_[static_cast<std::size_t>(i)];
    const int di = d_[static_cast<std::size_t>(i)];
    for (;;) {
        const std::optional<std::uint32_t> cand = e.next();
        if (!cand) return false;
        if (examined_) ++*examined_;
        // Independence from the earlier syndromes.
        std::uint32_t x = *cand;
        for (std::uint32_t b : basis_[static_cast<std::size_t>(i)])
            x = std::min(x, x ^ b);
        if (x == 0) continue;
        // No combination with earlier elements may undercut d[i].
        if (i > 0 &&
            min_coset_weight(*t_, std::span(chosen_.data(), static_cast<std::size_t>(i)),
                             *cand, di) < di)
            continue;
        chosen_[static_cast<std::size_t>(i)] = *cand;
        auto& nb = basis_[static_cast<std::size_t>(i) + 1];
        nb = basis_[static_cast<std::size_t>(i)];
        nb.push_back(x);
        std::sort(nb.begin(), nb.end(), std::greater<>());
        return true;
    }
}

std::optional<SyndromeTuple> TupleStream::next() {
    if (done_) return std::nullopt;
    const int m = static_cast<int>(d_.size());
    if (m == 0) {  // extending by zero rows: a single empty tuple
        done_ = true;
        return SyndromeTuple{};
    }
    int i;
    if (first_) {
        first_ = false;
        for (int j = 0; j < m; ++j) {
            const int dj = d_[static_cast<std::size_t>(j)];
            if (dj < 1 || dj > t_->n || (!t_->implicit_identity &&
                                         classes_[static_cast<std::size_t>(j)] == nullptr)) {
                done_ = true;  // an empty class empties the whole stream
                return std::nullopt;
            }
        }
        i = 0;
        reset_enumerator(0);
    } else {
        i = m - 1;  // resume by advancing the deepest element
    }
    while (true) {
        if (advance_element(i)) {
            if (i + 1 == m) {
                SyndromeTuple out;
                out.syndromes = chosen_;
                out.leaders.reserve(chosen_.size());
                for (std::uint32_t s : chosen_) out.leaders.push_back(t_->leader_of(s));
                return out;
            }
            ++i;
            reset_enumerator(i);
        } else {
            if (i == 0) {
                done_ = true;
                return std::nullopt;
            }
            --i;
        }
    }
}

}  // namespace pkern
