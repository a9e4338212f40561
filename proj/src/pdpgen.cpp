#include "pkern/pdpgen.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pkern {

int griesmer_bound(int n, int k) {
    if (n < 1) throw ParseError("length must be positive");
    if (k <= 0) return n;
    if (k > n) return 0;
    for (int d = n; d >= 1; --d) {
        long long sum = 0;
        for (int i = 0; i < k && sum <= n; ++i) sum += (d + (1LL << i) - 1) >> i;
        if (sum <= n) return d;
    }
    return 0;
}

DistanceBoundTable DistanceBoundTable::builtin() { return DistanceBoundTable{}; }

DistanceBoundTable DistanceBoundTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    DistanceBoundTable t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int n = 0, k = 0, d = 0;
        if (!(ss >> n >> k >> d) || n < 1 || k < 0 || k > n || d < 1 || d > n)
            throw ParseError("bad bound line '" + line + "'");
        t.overrides_[{n, k}] = d;
    }
    return t;
}

int DistanceBoundTable::bound(int n, int k) const {
    auto it = overrides_.find({n, k});
    if (it != overrides_.end()) return it->second;
    return griesmer_bound(n, k);
}

bool lemma4_ok(std::span<const int> d) {
    if (d.size() < 2 || d[1] != 2) return true;
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] & 1) return false;
    return true;
}

bool lemma5_ok(std::span<const int> d) {
    const int l = static_cast<int>(d.size());
    for (int i = 1; i <= l; ++i) {
        std::int64_t sum = 0;
        for (int ip = i; ip <= l; ++ip)
            sum += (std::int64_t{1} << (l - ip)) * d[static_cast<std::size_t>(ip - 1)];
        if (sum > (std::int64_t{1} << (l - i)) * l) return false;
    }
    return true;
}

namespace {

std::int64_t binom64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t c = 1;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

}  // namespace

std::int64_t krawtchouk(int k, int x, int n, int lambda) {
    if (k < 0 || x < 0 || x > n || lambda < 1) throw ParseError("bad polynomial arguments");
    __int128 acc = 0;
    for (int j = 0; j <= k; ++j) {
        __int128 term = 1;
        for (int p = 0; p < k - j; ++p) {
            term *= lambda;
            if (term > (static_cast<__int128>(1) << 110)) throw Overflow("polynomial overflow");
        }
        term *= binom64(x, j);
        term *= binom64(n - x, k - j);
        acc += (j & 1) ? -term : term;
    }
    if (acc > INT64_MAX || acc < INT64_MIN) throw Overflow("polynomial overflow");
    return static_cast<std::int64_t>(acc);
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Feasibility of {x >= 0, Ax <= b} by a single-artificial phase-1 simplex
// with Bland's rule.  Maximizes -z over Ax - z <= b; the system is feasible
// iff the optimum reaches zero.  Returns feasible/infeasible, or throws
// SolverBudgetExceeded at the pivot cap.
template <class T>
bool phase1_feasible(int nvars, const std::vector<std::vector<std::pair<int, std::int64_t>>>& rows,
                     const std::vector<__int128>& rhs, long pivot_cap) {
    const bool exact = !std::is_floating_point_v<T>;
    const double eps = 1e-9;
    const int m = static_cast<int>(rows.size());
    const int n = nvars + 1;  // + artificial z
    const int zvar = nvars;

    std::vector<std::vector<T>> a(static_cast<std::size_t>(m),
                                  std::vector<T>(static_cast<std::size_t>(n), T(0)));
    std::vector<T> b(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        for (auto [c, v] : rows[static_cast<std::size_t>(r)])
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = T(v);
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(zvar)] = T(-1);
        b[static_cast<std::size_t>(r)] = static_cast<T>(static_cast<double>(rhs[static_cast<std::size_t>(r)]));
        if (exact) b[static_cast<std::size_t>(r)] = T(static_cast<std::int64_t>(rhs[static_cast<std::size_t>(r)]));
    }

    // Objective: maximize -z.  cost over nonbasic columns, obj = value.
    std::vector<T> cost(static_cast<std::size_t>(n), T(0));
    cost[static_cast<std::size_t>(zvar)] = T(-1);
    T obj = T(0);
    std::vector<int> nonbasic(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) nonbasic[static_cast<std::size_t>(c)] = c;
    std::vector<int> basic(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) basic[static_cast<std::size_t>(r)] = n + r;

    auto pivot = [&](int pr, int pc) {
        T& p = a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)];
        const T inv = T(1) / p;
        for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c)] *= inv;
        b[static_cast<std::size_t>(pr)] *= inv;
        a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)] = inv;
        for (int r = 0; r < m; ++r) {
            if (r == pr) continue;
            T f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)];
            if (f == T(0)) continue;
            for (int c = 0; c < n; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c)];
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(pr)];
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)] = -f * inv;
        }
        T cf = cost[static_cast<std::size_t>(pc)];
        if (cf != T(0)) {
            for (int c = 0; c < n; ++c)
                cost[static_cast<std::size_t>(c)] -= cf * a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c)];
            obj += cf * b[static_cast<std::size_t>(pr)];
            cost[static_cast<std::size_t>(pc)] = -cf * a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)];
        }
        std::swap(basic[static_cast<std::size_t>(pr)], nonbasic[static_cast<std::size_t>(pc)]);
    };

    // Make the starting dictionary feasible: bring z in on the worst row.
    int worst = 0;
    for (int r = 1; r < m; ++r)
        if (b[static_cast<std::size_t>(r)] < b[static_cast<std::size_t>(worst)]) worst = r;
    if (!(b[static_cast<std::size_t>(worst)] < T(0))) return true;
    pivot(worst, zvar);

    for (long it = 0; it < pivot_cap; ++it) {
        if (exact ? obj == T(0) : static_cast<double>(obj) > -1e-7) return true;
        // Bland: entering = smallest variable id with positive reduced cost.
        int pc = -1;
        for (int c = 0; c < n; ++c) {
            const T& w = cost[static_cast<std::size_t>(c)];
            const bool pos = exact ? w > T(0) : static_cast<double>(w) > eps;
            if (pos && (pc < 0 || nonbasic[static_cast<std::size_t>(c)] <
                                      nonbasic[static_cast<std::size_t>(pc)]))
                pc = c;
        }
        if (pc < 0) return exact ? obj == T(0) : static_cast<double>(obj) > -1e-7;
        int pr = -1;
        for (int r = 0; r < m; ++r) {
            const T& coef = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)];
            const bool pos = exact ? coef > T(0) : static_cast<double>(coef) > eps;
            if (!pos) continue;
            if (pr < 0) { pr = r; continue; }
            const T lhs = b[static_cast<std::size_t>(r)] * a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)];
            const T rhsv = b[static_cast<std::size_t>(pr)] * coef;
            if (lhs < rhsv ||
                (lhs == rhsv && basic[static_cast<std::size_t>(r)] < basic[static_cast<std::size_t>(pr)]))
                pr = r;
        }
        if (pr < 0) return true;  // -z unbounded above cannot really happen
        pivot(pr, pc);
    }
    throw SolverBudgetExceeded("LP pivot cap reached");
}

}  // namespace

bool lp_feasible(const PDProfile& d) {
    const int l = static_cast<int>(d.size());
    if (l < 1 || l > 32) throw ParseError("profile length out of range");
    for (int di : d)
        if (di < 1 || di > l) throw DistanceOutOfRange("distance outside [1, l]");

    std::vector<std::vector<std::int64_t>> p(static_cast<std::size_t>(l) + 1,
                                             std::vector<std::int64_t>(static_cast<std::size_t>(l) + 1));
    for (int k = 0; k <= l; ++k)
        for (int i = 0; i <= l; ++i)
            p[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = krawtchouk(k, i, l);

    // Level ladder A^(phi), phi = l..0, presolved onto per-transition mass
    // increments: transition t adds codewords of weight >= D_{t-1}, with the
    // mass at exactly D_{t-1} pivoted out by the transition's sum constraint.
    // Free variables y_{t,i} (i > D_{t-1}) remain; A^(phi)[i] for i >= 1 is
    // the sum of increments from transitions t > phi.
    std::vector<std::pair<int, int>> vars;  // (t, i)
    std::vector<std::vector<int>> var_of(static_cast<std::size_t>(l) + 1,
                                         std::vector<int>(static_cast<std::size_t>(l) + 1, -1));
    for (int t = 1; t <= l; ++t)
        for (int i = d[static_cast<std::size_t>(t - 1)] + 1; i <= l; ++i) {
            var_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] =
                static_cast<int>(vars.size());
            vars.emplace_back(t, i);
        }

    std::vector<std::vector<std::pair<int, std::int64_t>>> rows;
    std::vector<__int128> rhs;
    bool negative_rhs = false;

    // Pivoted variables stay nonnegative: sum of the free group <= level mass.
    for (int t = 1; t <= l; ++t) {
        std::vector<std::pair<int, std::int64_t>> row;
        for (int i = d[static_cast<std::size_t>(t - 1)] + 1; i <= l; ++i)
            row.emplace_back(var_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)], 1);
        if (row.empty()) continue;
        rows.push_back(std::move(row));
        rhs.push_back(static_cast<__int128>(1) << (l - t));
    }

    // Krawtchouk bound on every level's (relaxed) distribution: transformed
    // sums must stay above -C(l,k).
    for (int phi = 0; phi < l; ++phi) {
        for (int k = 1; k <= l; ++k) {
            std::vector<std::pair<int, std::int64_t>> row;
            __int128 r = p[static_cast<std::size_t>(k)][0] + binom64(l, k);
            for (int t = phi + 1; t <= l; ++t) {
                const std::int64_t pd =
                    p[static_cast<std::size_t>(k)][static_cast<std::size_t>(d[static_cast<std::size_t>(t - 1)])];
                r += static_cast<__int128>(pd) << (l - t);
                for (int i = d[static_cast<std::size_t>(t - 1)] + 1; i <= l; ++i) {
                    const std::int64_t c =
                        -(p[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] - pd);
                    if (c != 0)
                        row.emplace_back(var_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)], c);
                }
            }
            if (r < 0) {
                negative_rhs = true;
                if (row.empty()) return false;  // violated and nothing to adjust
            }
            if (!row.empty()) {
                rows.push_back(std::move(row));
                rhs.push_back(r);
            }
        }
    }

    if (!negative_rhs) return true;  // the all-mass-at-D ladder already works
    // Exact arithmetic where the instance is small enough for it to be cheap;
    // beyond that the screen runs in floating point, whose worst case is
    // letting a borderline profile through for the search itself to settle.
    if (l <= 12) return phase1_feasible<Rational>(static_cast<int>(vars.size()), rows, rhs, 20000);
    return phase1_feasible<double>(static_cast<int>(vars.size()), rows, rhs, 200000);
}

namespace {

struct GenState {
    int l;
    double min_e, lnl;
    const GenOptions* opts;
    const std::function<bool(const PDPCandidate&)>* emit;
    std::vector<int> dmax;
    std::vector<double> suffix_ln;  // suffix_ln[phi] = sum of ln dmax over phi..l-1
    PDProfile d;
    std::uint64_t emitted = 0;
    unsigned filters = 0;
    bool stop = false;
};

void gen_rec(GenState& g, int phi, std::int64_t tsum, std::int64_t mbound, double sum_ln) {
    if (g.stop) return;
    const int prev = phi == 0 ? 1 : g.d[static_cast<std::size_t>(phi - 1)];
    const bool even_required =
        g.opts->use_lemma4 && phi >= 2 && g.d[1] == 2;
    for (int v = prev; v <= g.dmax[static_cast<std::size_t>(phi)]; ++v) {
        if (even_required && (v & 1)) continue;
        const std::int64_t term = (std::int64_t{1} << (g.l - phi - 1)) * v;
        const std::int64_t tnew = tsum + term;
        const std::int64_t mnew =
            std::min(mbound, (std::int64_t{1} << (g.l - phi - 1)) * g.l + tsum);
        if (g.opts->use_lemma5 &&
            tnew + static_cast<std::int64_t>(v) * ((std::int64_t{1} << (g.l - phi - 1)) - 1) > mnew)
            continue;
        const double sln = sum_ln + std::log(static_cast<double>(v));
        if ((sln + g.suffix_ln[static_cast<std::size_t>(phi) + 1]) / (g.l * g.lnl) <
            g.min_e - 1e-12)
            continue;  // larger v only helps, but the loop is ascending anyway
        g.d[static_cast<std::size_t>(phi)] = v;
        if (phi + 1 == g.l) {
            const double e = sln / (g.l * g.lnl);
            if (e < g.min_e - 1e-12) continue;
            PDPCandidate cand{g.d, e, g.filters};
            if (g.opts->use_lp) {
                try {
                    if (!lp_feasible(g.d)) continue;
                    cand.filters |= 8;
                } catch (const SolverBudgetExceeded&) {
                    // undecided: keep the candidate but do not claim the screen
                }
            }
            ++g.emitted;
            if (!(*g.emit)(cand) || (g.opts->limit && g.emitted >= g.opts->limit)) {
                g.stop = true;
                return;
            }
        } else {
            gen_rec(g, phi + 1, tnew, mnew, sln);
            if (g.stop) return;
        }
    }
}

}  // namespace

void generate_candidates(int l, double min_exponent, const DistanceBoundTable& bounds,
                         const GenOptions& opts,
                         const std::function<bool(const PDPCandidate&)>& emit) {
    if (l < 2 || l > 32) throw ParseError("length out of range");
    GenState g;
    g.l = l;
    g.min_e = min_exponent;
    g.lnl = std::log(static_cast<double>(l));
    g.opts = &opts;
    g.emit = &emit;
    g.filters = (opts.use_dist_bound ? 1u : 0u) | (opts.use_lemma4 ? 2u : 0u) |
                (opts.use_lemma5 ? 4u : 0u);
    g.dmax.resize(static_cast<std::size_t>(l));
    for (int phi = 0; phi < l; ++phi)
        g.dmax[static_cast<std::size_t>(phi)] =
            opts.use_dist_bound ? bounds.bound(l, l - phi) : l;
    g.suffix_ln.assign(static_cast<std::size_t>(l) + 1, 0.0);
    for (int phi = l - 1; phi >= 0; --phi)
        g.suffix_ln[static_cast<std::size_t>(phi)] =
            g.suffix_ln[static_cast<std::size_t>(phi) + 1] +
            std::log(static_cast<double>(g.dmax[static_cast<std::size_t>(phi)]));
    g.d.assign(static_cast<std::size_t>(l), 1);
    gen_rec(g, 0, 0, INT64_MAX, 0.0);
}

std::vector<PDPCandidate> generate_candidates_vec(int l, double min_exponent,
                                                  const DistanceBoundTable& bounds,
                                                  const GenOptions& opts) {
    std::vector<PDPCandidate> out;
    generate_candidates(l, min_exponent, bounds, opts,
                        [&](const PDPCandidate& c) {
                            out.push_back(c);
                            return true;
                        });
    return out;
}

}  // namespace pkern
