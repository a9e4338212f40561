#include "pkern/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace pkern {

BlockPartition BlockPartition::default_for(int l) {
    BlockPartition b;
    int rest = l;
    while (rest >= 2) { b.sizes.push_back(2); rest -= 2; }
    if (rest) b.sizes.push_back(1);
    return b;
}

BlockPartition BlockPartition::all_ones(int l) {
    BlockPartition b;
    b.sizes.assign(static_cast<std::size_t>(l), 1);
    return b;
}

void BlockPartition::validate(int l) const {
    int sum = 0;
    for (int s : sizes) {
        if (s < 1) throw ParseError("block sizes must be positive");
        sum += s;
    }
    if (sum != l) throw ParseError("block sizes must sum to the kernel size");
}

int BlockPartition::phi_start(int l, int psi) const {
    int phi = l;
    for (int j = 0; j <= psi; ++j) phi -= sizes[static_cast<std::size_t>(j)];
    return phi;
}

std::vector<std::uint32_t> candidate_rows(int l, int w) {
    std::vector<std::uint32_t> out;
    if (w < 0 || w > l) return out;
    if (w == 0) { out.push_back(0); return out; }
    const std::uint64_t limit = std::uint64_t{1} << l;
    std::uint64_t x = (std::uint64_t{1} << w) - 1;
    while (x < limit) {
        out.push_back(static_cast<std::uint32_t>(x));
        const std::uint64_t u = x & (~x + 1);
        const std::uint64_t y = x + u;
        x = y | (((x ^ y) >> 2) / u);
    }
    return out;
}

bool verify_kernel(const Kernel& k, const PDProfile& target) {
    if (static_cast<std::size_t>(k.size()) != target.size()) return false;
    return is_polarization_kernel(k.m) && partial_distance_profile(k) == target;
}

namespace {

void validate_profile(const PDProfile& d) {
    const int l = static_cast<int>(d.size());
    if (l < 2 || l > 32) throw ParseError("profile length out of range");
    for (int di : d)
        if (di < 1 || di > l) throw DistanceOutOfRange("distance outside [1, l]");
}

struct BasicSearcher {
    const PDProfile* d;
    int l;
    std::uint64_t budget;
    SearchStats stats;
    bool out_of_budget = false;
    std::vector<std::uint32_t> rows;
    std::vector<Kernel> found;

    // Fills rows from the bottom; phase phi is chosen after all phases below.
    void rec(int phi) {
        if (!found.empty() || out_of_budget) return;
        if (phi < 0) {
            Kernel k{BitMatrix(l, rows)};
            if (is_polarization_kernel(k.m)) found.push_back(std::move(k));
            return;
        }
        BitMatrix below(l);
        for (int j = phi + 1; j < l; ++j) below.rows.push_back(rows[static_cast<std::size_t>(j)]);
        const LinearCode code = LinearCode::from_generator(below);
        // Candidate rows can be limited to weight D_phi: a row at distance
        // D_phi from the code below has a weight-D_phi coset mate, and
        // swapping them changes neither the span nor any partial distance.
        for (std::uint32_t v : candidate_rows(l, (*d)[static_cast<std::size_t>(phi)])) {
            ++stats.tuples_examined;
            if (budget && stats.tuples_examined > budget) { out_of_budget = true; return; }
            if (distance_to_code(BitVector(v, l), code) != (*d)[static_cast<std::size_t>(phi)])
                continue;
            ++stats.nodes_visited;
            rows[static_cast<std::size_t>(phi)] = v;
            rec(phi - 1);
            if (!found.empty() || out_of_budget) return;
        }
    }
};

}  // namespace

SearchOutcome basic_search(const PDProfile& target, std::uint64_t budget) {
    validate_profile(target);
    BasicSearcher s;
    s.d = &target;
    s.l = static_cast<int>(target.size());
    s.budget = budget;
    s.rows.assign(target.size(), 0);
    s.rec(s.l - 1);
    SearchOutcome out;
    out.kernels = std::move(s.found);
    out.stats = s.stats;
    out.termination = s.out_of_budget
                          ? Termination::budget
                          : (out.kernels.empty() ? Termination::exhausted : Termination::limit);
    return out;
}

namespace {

// State shared between worker threads of one enhanced search.
struct Shared {
    const SearchConfig* cfg;
    int l = 0, nblocks = 0;
    std::vector<int> phi_start;                 // per block
    std::vector<std::vector<int>> elem_d;       // per block, element order bottom-up
    std::vector<std::unordered_set<Fingerprint, FingerprintHash>> inv_sets;
    std::mutex inv_mtx;
    std::vector<std::vector<std::uint32_t>> found;
    std::mutex found_mtx;
    std::atomic<std::uint64_t> work{0};         // tables + examined tuples
    std::atomic<bool> stop{false};
    std::atomic<bool> hit_budget{false};

    bool budget_left(std::uint64_t add) {
        if (!cfg->budget) return true;
        if (work.fetch_add(add) + add <= cfg->budget) return true;
        hit_budget.store(true);
        stop.store(true);
        return false;
    }

    // True when the kernel was recorded and the search should continue.
    void record(std::vector<std::uint32_t> rows) {
        std::lock_guard lock(found_mtx);
        if (cfg->max_kernels && static_cast<int>(found.size()) >= cfg->max_kernels) return;
        found.push_back(std::move(rows));
        if (cfg->max_kernels && static_cast<int>(found.size()) >= cfg->max_kernels)
            stop.store(true);
    }
};

struct Worker {
    Shared* sh;
    SearchStats stats;
    std::vector<std::uint32_t> rows;

    void place(int psi, const SyndromeTuple& tup) {
        const int b = sh->cfg->blocks.sizes[static_cast<std::size_t>(psi)];
        const int phi = sh->phi_start[static_cast<std::size_t>(psi)];
        for (int i = 0; i < b; ++i)
            rows[static_cast<std::size_t>(phi + b - 1 - i)] = tup.leaders[static_cast<std::size_t>(i)];
    }

    // Handles everything after a full tuple for block psi is placed.
    void extend(int psi, const CLWTTable& table) {
        ++stats.nodes_visited;
        if (psi + 1 == sh->nblocks) {
            Kernel k{BitMatrix(sh->l, rows)};
            if (verify_kernel(k, sh->cfg->target)) sh->record(rows);
            return;
        }
        const int phi = sh->phi_start[static_cast<std::size_t>(psi)];
        BitMatrix g(sh->l);
        for (int j = phi; j < sh->l; ++j) g.rows.push_back(rows[static_cast<std::size_t>(j)]);
        if (!sh->budget_left(1)) return;
        const LinearCode code = LinearCode::from_generator(g);
        // First table after the zero-code base comes from a fresh trellis
        // sweep (refining the implicit table would scan all 2^l words);
        // later tables are cheaper to refine from the previous block's.
        const CLWTTable next =
            table.implicit_identity ? build_clwt(code) : refine_to_supercode(table, code);
        ++stats.tables_built;
        const WDCLVector w = wdcl(next);
        if (!check_necessary_condition(w, std::span(sh->cfg->target.data(),
                                                    static_cast<std::size_t>(phi)))) {
            ++stats.prunes_prop2;
            return;
        }
        if (sh->cfg->invariants != InvariantKind::none) {
            const InvariantValue v = compute_invariant(code, sh->cfg->invariants, &w);
            const Fingerprint fp = fingerprint(v, sh->cfg->fingerprint_seed);
            std::lock_guard lock(sh->inv_mtx);
            if (!sh->inv_sets[static_cast<std::size_t>(psi)].insert(fp).second) {
                ++stats.prunes_invariant;
                return;
            }
        }
        run_block(psi + 1, next);
    }

    void run_block(int psi, const CLWTTable& table) {
        std::uint64_t examined = 0;
        TupleStream ts(table, sh->elem_d[static_cast<std::size_t>(psi)], &examined);
        for (;;) {
            const std::uint64_t before = examined;
            const std::optional<SyndromeTuple> tup = ts.next();
            stats.tuples_examined += examined - before;
            if (!sh->budget_left(examined - before)) return;
            if (!tup || sh->stop.load()) return;
            place(psi, *tup);
            extend(psi, table);
            if (sh->stop.load()) return;
        }
    }
};

}  // namespace

SearchOutcome enhanced_search(const SearchConfig& cfg) {
    validate_profile(cfg.target);
    const int l = static_cast<int>(cfg.target.size());
    SearchConfig local = cfg;
    if (local.blocks.sizes.empty()) local.blocks = BlockPartition::default_for(l);
    local.blocks.validate(l);
    if (local.threads < 1) throw ParseError("thread count must be positive");

    Shared sh;
    sh.cfg = &local;
    sh.l = l;
    sh.nblocks = local.blocks.count();
    sh.inv_sets.resize(static_cast<std::size_t>(sh.nblocks));
    for (int psi = 0; psi < sh.nblocks; ++psi) {
        const int phi = local.blocks.phi_start(l, psi);
        sh.phi_start.push_back(phi);
        std::vector<int> d;
        const int b = local.blocks.sizes[static_cast<std::size_t>(psi)];
        for (int i = 0; i < b; ++i)
            d.push_back(local.target[static_cast<std::size_t>(phi + b - 1 - i)]);
        sh.elem_d.push_back(std::move(d));
    }

    const CLWTTable base = CLWTTable::identity(l);
    SearchStats total;

    if (local.threads == 1 || sh.nblocks == 1) {
        Worker w{&sh, {}, std::vector<std::uint32_t>(static_cast<std::size_t>(l), 0)};
        w.run_block(0, base);
        total = w.stats;
    } else {
        // Fan out over accepted block-0 tuples; the remaining tree is run
        // per-tuple by a small pool sharing invariant sets and budget.
        std::vector<SyndromeTuple> first;
        {
            std::uint64_t examined = 0;
            TupleStream ts(base, sh.elem_d[0], &examined);
            while (auto t = ts.next()) first.push_back(std::move(*t));
            total.tuples_examined += examined;
            sh.work.fetch_add(examined);
        }
        std::atomic<std::size_t> cursor{0};
        std::vector<SearchStats> per(static_cast<std::size_t>(local.threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < local.threads; ++t) {
            pool.emplace_back([&, t] {
                Worker w{&sh, {}, std::vector<std::uint32_t>(static_cast<std::size_t>(l), 0)};
                for (;;) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= first.size() || sh.stop.load()) break;
                    w.place(0, first[i]);
                    w.extend(0, base);
                }
                per[static_cast<std::size_t>(t)] = w.stats;
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& s : per) {
            total.nodes_visited += s.nodes_visited;
            total.tuples_examined += s.tuples_examined;
            total.tables_built += s.tables_built;
            total.prunes_prop2 += s.prunes_prop2;
            total.prunes_invariant += s.prunes_invariant;
        }
    }

    SearchOutcome out;
    out.stats = total;
    std::sort(sh.found.begin(), sh.found.end());
    for (auto& rows : sh.found) out.kernels.emplace_back(BitMatrix(l, std::move(rows)));
    if (sh.hit_budget.load())
        out.termination = Termination::budget;
    else if (local.max_kernels && static_cast<int>(out.kernels.size()) >= local.max_kernels)
        out.termination = Termination::limit;
    else
        out.termination = Termination::exhausted;
    return out;
}

}  // namespace pkern
