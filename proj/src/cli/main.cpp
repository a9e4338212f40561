// pkern: inspect, verify, search for, and generate profiles of binary
// polarization kernels.  Every command is a thin adapter over the library;
// all exponents print with six decimals (ties to even).
//
// Exit codes: 0 success / found / match, 1 negative result (mismatch, empty
// search, failed fixture), 2 invalid input or usage.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pkern/chain.hpp"
#include "pkern/clwt.hpp"
#include "pkern/errors.hpp"
#include "pkern/fixtures.hpp"
#include "pkern/invariants.hpp"
#include "pkern/io.hpp"
#include "pkern/kernel.hpp"
#include "pkern/pdpgen.hpp"
#include "pkern/search.hpp"

using nlohmann::json;

namespace {

std::string fingerprint_hex(const pkern::Fingerprint& f) {
    char buf[34];
    std::snprintf(buf, sizeof buf, "%016llx%016llx",
                  static_cast<unsigned long long>(f.a),
                  static_cast<unsigned long long>(f.b));
    return buf;
}

// Minimal glob: '*' matches any run, '?' any single character.
bool glob_match(const char* p, const char* s) {
    for (; *p; ++p) {
        if (*p == '*') {
            while (*p == '*') ++p;
            if (!*p) return true;
            for (; *s; ++s)
                if (glob_match(p, s)) return true;
            return false;
        }
        if (!*s || (*p != '?' && *p != *s)) return false;
        ++s;
    }
    return *s == '\0';
}

const char* termination_name(pkern::Termination t) {
    switch (t) {
        case pkern::Termination::budget: return "budget";
        case pkern::Termination::limit: return "limit";
        default: return "exhausted";
    }
}

struct PdpOpts {
    std::string file;
    bool as_json = false;
};

int run_pdp(const PdpOpts& o) {
    const pkern::Kernel k(pkern::read_matrix_file(o.file));
    const pkern::PDProfile d = pkern::partial_distance_profile(k);
    const double e = pkern::error_exponent(d);
    if (o.as_json) {
        json out;
        out["pdp"] = d;
        out["exponent"] = e;
        out["exponent_printed"] = pkern::format_exponent(e);
        out["polarizing"] = pkern::is_polarization_kernel(k.m);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "D: " << pkern::pdp_to_string(d) << "\n";
        std::cout << "E: " << pkern::format_exponent(e) << "\n";
    }
    return 0;
}

struct VerifyOpts {
    std::string file;
    std::string expect_pdp;
    double expect_exponent = -1;
    bool has_expect_exponent = false;
    double tol = 5e-6;
    bool as_json = false;
};

int run_verify(const VerifyOpts& o) {
    const pkern::Kernel k(pkern::read_matrix_file(o.file));
    const pkern::PDProfile expected = pkern::parse_pdp_string(o.expect_pdp);
    const pkern::PDProfile computed = pkern::partial_distance_profile(k);
    const double e = pkern::error_exponent(computed);

    const bool pdp_ok = pkern::verify_kernel(k, expected);
    bool exp_ok = true;
    if (o.has_expect_exponent) exp_ok = std::abs(e - o.expect_exponent) <= o.tol;
    const bool ok = pdp_ok && exp_ok;

    if (o.as_json) {
        json out;
        out["match"] = ok;
        out["pdp_match"] = pdp_ok;
        out["exponent_match"] = exp_ok;
        out["expected_pdp"] = expected;
        out["pdp"] = computed;
        out["exponent"] = e;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "D: " << pkern::pdp_to_string(computed) << "\n";
        std::cout << "E: " << pkern::format_exponent(e) << "\n";
        std::cout << (ok ? "match" : "mismatch") << "\n";
    }
    return ok ? 0 : 1;
}

struct SearchOpts {
    int length = 0;
    std::string pdp;
    std::string blocks;
    std::string inv = "aw";
    int max_kernels = 1;
    std::uint64_t budget = 0;
    std::uint64_t seed = pkern::kDefaultFingerprintSeed;
    int threads = 1;
    std::string out_dir = ".";
    bool as_json = false;
};

int run_search(const SearchOpts& o) {
    pkern::SearchConfig cfg;
    cfg.target = pkern::parse_pdp_string(o.pdp);
    if (static_cast<int>(cfg.target.size()) != o.length)
        throw pkern::ParseError("profile has " + std::to_string(cfg.target.size()) +
                                " entries but --length is " + std::to_string(o.length));
    if (!o.blocks.empty()) {
        cfg.blocks.sizes = pkern::parse_pdp_string(o.blocks);
        cfg.blocks.validate(o.length);
    }
    cfg.invariants = pkern::parse_invariant_kind(o.inv);
    cfg.max_kernels = o.max_kernels;
    cfg.budget = o.budget;
    cfg.fingerprint_seed = o.seed;
    cfg.threads = o.threads;

    const pkern::SearchOutcome out = pkern::enhanced_search(cfg);

    std::vector<std::string> files;
    if (!out.kernels.empty()) {
        std::filesystem::create_directories(o.out_dir);
        for (std::size_t i = 0; i < out.kernels.size(); ++i) {
            const std::string path =
                (std::filesystem::path(o.out_dir) /
                 ("kernel_l" + std::to_string(o.length) + "_" + std::to_string(i) + ".txt"))
                    .string();
            pkern::write_matrix_file(path, out.kernels[i].m,
                                     std::to_string(o.length) + "x" + std::to_string(o.length) +
                                         " kernel with profile " + o.pdp);
            files.push_back(path);
        }
    }

    if (o.as_json) {
        json j;
        j["found"] = out.kernels.size();
        j["termination"] = termination_name(out.termination);
        j["stats"] = {{"nodes_visited", out.stats.nodes_visited},
                      {"tuples_examined", out.stats.tuples_examined},
                      {"tables_built", out.stats.tables_built},
                      {"prunes_prop2", out.stats.prunes_prop2},
                      {"prunes_invariant", out.stats.prunes_invariant}};
        j["files"] = files;
        json rows = json::array();
        for (const auto& k : out.kernels) rows.push_back(k.m.to_strings());
        j["kernels"] = rows;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "found: " << out.kernels.size() << "\n";
        std::cout << "termination: " << termination_name(out.termination) << "\n";
        std::cout << "nodes: " << out.stats.nodes_visited
                  << " tuples: " << out.stats.tuples_examined
                  << " tables: " << out.stats.tables_built
                  << " prop2-prunes: " << out.stats.prunes_prop2
                  << " invariant-prunes: " << out.stats.prunes_invariant << "\n";
        for (const auto& f : files) std::cout << "wrote: " << f << "\n";
    }
    return out.kernels.empty() ? 1 : 0;
}

struct GenOpts {
    int length = 0;
    double min_exponent = 0;
    std::string dtable;
    bool no_lp = false;
    std::uint64_t limit = 0;
    bool as_json = false;
};

int run_gen(const GenOpts& o) {
    const pkern::DistanceBoundTable bounds = o.dtable.empty()
                                                 ? pkern::DistanceBoundTable::builtin()
                                                 : pkern::DistanceBoundTable::from_file(o.dtable);
    pkern::GenOptions opts;
    opts.use_lp = !o.no_lp;
    opts.limit = o.limit;

    json arr = json::array();
    pkern::generate_candidates(o.length, o.min_exponent, bounds, opts,
                               [&](const pkern::PDPCandidate& c) {
                                   if (o.as_json) {
                                       arr.push_back({{"pdp", c.d}, {"exponent", c.exponent}});
                                   } else {
                                       std::cout << pkern::pdp_to_string(c.d) << " "
                                                 << pkern::format_exponent(c.exponent) << "\n";
                                   }
                                   return true;
                               });
    if (o.as_json) {
        json out;
        out["length"] = o.length;
        out["min_exponent"] = o.min_exponent;
        out["count"] = arr.size();
        out["candidates"] = arr;
        std::cout << out.dump() << "\n";
    }
    return 0;
}

struct ClwtOpts {
    std::string file;
    bool as_json = false;
};

int run_clwt(const ClwtOpts& o) {
    const pkern::LinearCode c = pkern::LinearCode::from_generator(pkern::read_matrix_file(o.file));
    const pkern::CLWTTable t = pkern::build_clwt(c);
    const pkern::WDCLVector w = pkern::wdcl(t);
    const bool dump = t.r <= 16;

    if (o.as_json) {
        json out;
        out["n"] = c.n;
        out["k"] = c.k;
        out["r"] = t.r;
        out["wdcl"] = w;
        if (dump) {
            json entries = json::array();
            for (std::uint64_t s = 0; s < t.syndrome_count(); ++s) {
                const auto sv = static_cast<std::uint32_t>(s);
                char hex[16];
                std::snprintf(hex, sizeof hex, "%x", sv);
                entries.push_back({{"syndrome", hex},
                                   {"weight", t.weight_of(sv)},
                                   {"leader", pkern::BitVector(t.leader_of(sv), t.n).to_string()}});
            }
            out["entries"] = entries;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n: " << c.n << "\nk: " << c.k << "\nr: " << t.r << "\n";
        std::cout << "wdcl: ";
        for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
        std::cout << "\n";
        if (dump) {
            for (std::uint64_t s = 0; s < t.syndrome_count(); ++s) {
                const auto sv = static_cast<std::uint32_t>(s);
                std::printf("%x %d %s\n", sv, t.weight_of(sv),
                            pkern::BitVector(t.leader_of(sv), t.n).to_string().c_str());
            }
        } else {
            std::cout << "(table with 2^" << t.r << " syndromes, per-entry dump skipped)\n";
        }
    }
    return 0;
}

struct InvOpts {
    std::string file;
    std::string kind = "aws";
    std::uint64_t seed = pkern::kDefaultFingerprintSeed;
    bool as_json = false;
};

int run_invariants(const InvOpts& o) {
    const pkern::LinearCode c = pkern::LinearCode::from_generator(pkern::read_matrix_file(o.file));
    const pkern::InvariantKind kind = pkern::parse_invariant_kind(o.kind);
    const pkern::InvariantValue v = pkern::compute_invariant(c, kind);
    const pkern::Fingerprint f = pkern::fingerprint(v, o.seed);

    if (o.as_json) {
        json out;
        out["n"] = c.n;
        out["k"] = c.k;
        out["kind"] = pkern::to_string(kind);
        if (kind != pkern::InvariantKind::none) {
            out["ia"] = {{"dual_side", v.dual_a}, {"values", v.ia}};
        }
        if (kind == pkern::InvariantKind::aw || kind == pkern::InvariantKind::aws)
            out["iw"] = v.iw;
        if (kind == pkern::InvariantKind::aws)
            out["is"] = {{"dual_side", v.dual_s}, {"values", v.is}};
        out["fingerprint"] = fingerprint_hex(f);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "kind: " << pkern::to_string(kind) << "\n";
        auto print_vec = [](const std::vector<std::int64_t>& vec) {
            for (std::size_t i = 0; i < vec.size(); ++i)
                std::cout << (i ? "," : "") << vec[i];
            std::cout << "\n";
        };
        if (kind != pkern::InvariantKind::none) {
            std::cout << "ia" << (v.dual_a ? " (dual side): " : ": ");
            print_vec(v.ia);
        }
        if (kind == pkern::InvariantKind::aw || kind == pkern::InvariantKind::aws) {
            std::cout << "iw: ";
            print_vec(v.iw);
        }
        if (kind == pkern::InvariantKind::aws) {
            for (std::size_t i = 0; i < v.is.size(); ++i) {
                std::cout << "is[" << i << "]" << (v.dual_s ? " (dual side): " : ": ");
                print_vec(v.is[i]);
            }
        }
        std::cout << "fingerprint: " << fingerprint_hex(f) << "\n";
    }
    return 0;
}

struct FixturesOpts {
    bool verify_all = false;
    std::string filter = "*";
    std::string data_dir;
    bool as_json = false;
};

int run_fixtures(const FixturesOpts& o) {
    const std::vector<std::string> names = pkern::catalog(o.data_dir);
    int pass = 0, total = 0;
    json results = json::array();

    for (const auto& name : names) {
        if (!glob_match(o.filter.c_str(), name.c_str())) continue;
        ++total;
        if (!o.verify_all) {
            try {
                const pkern::NamedKernel nk = pkern::load_named_kernel(name, o.data_dir);
                if (o.as_json) {
                    results.push_back({{"name", nk.name},
                                       {"l", nk.l},
                                       {"family", nk.family},
                                       {"published_pdp", nk.published_pdp},
                                       {"published_exponent", nk.published_exponent}});
                } else {
                    std::cout << nk.name << " l=" << nk.l << " " << nk.family
                              << " E=" << pkern::format_exponent(nk.published_exponent)
                              << " pdp=" << pkern::pdp_to_string(nk.published_pdp) << "\n";
                }
                ++pass;
            } catch (const pkern::Error& e) {
                if (o.as_json)
                    results.push_back({{"name", name}, {"error", e.what()}});
                else
                    std::cout << name << " ERROR " << e.what() << "\n";
            }
            continue;
        }
        std::string reason;
        double computed_e = 0;
        bool ok = false;
        try {
            const pkern::NamedKernel nk = pkern::load_named_kernel(name, o.data_dir);
            const pkern::PDProfile d = pkern::partial_distance_profile(nk.kernel);
            computed_e = pkern::error_exponent(d);
            if (!pkern::is_polarization_kernel(nk.kernel.m))
                reason = "not a polarization kernel";
            else if (d != nk.published_pdp)
                reason = "profile mismatch: got " + pkern::pdp_to_string(d);
            else if (std::abs(computed_e - nk.published_exponent) > 5e-6)
                reason = "exponent mismatch: got " + pkern::format_exponent(computed_e);
            else
                ok = true;
        } catch (const pkern::Error& e) {
            reason = e.what();
        }
        if (ok) ++pass;
        if (o.as_json) {
            json r = {{"name", name}, {"pass", ok}};
            if (ok) r["exponent"] = computed_e;
            else r["reason"] = reason;
            results.push_back(r);
        } else if (ok) {
            std::cout << "PASS " << name << " (E " << pkern::format_exponent(computed_e) << ")\n";
        } else {
            std::cout << "FAIL " << name << ": " << reason << "\n";
        }
    }

    if (o.as_json) {
        json out;
        out["verify"] = o.verify_all;
        out["total"] = total;
        out["pass"] = pass;
        out["all_pass"] = pass == total;
        out["results"] = results;
        std::cout << out.dump() << "\n";
    } else if (o.verify_all) {
        std::cout << pass << "/" << total << " pass\n";
    }
    if (total == 0) {
        std::cerr << "error: no fixture matches '" << o.filter << "'\n";
        return 2;
    }
    return pass == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary polarization kernel toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    PdpOpts pdp;
    auto* cmd_pdp = app.add_subcommand("pdp", "print the partial distance profile and exponent");
    cmd_pdp->add_option("kernel-file", pdp.file, "matrix file, one 0/1 row per line")->required();
    cmd_pdp->add_flag("--json", pdp.as_json, "emit one JSON object");
    cmd_pdp->callback([&] { rc = run_pdp(pdp); });

    VerifyOpts ver;
    auto* cmd_verify = app.add_subcommand("verify", "check a kernel against an expected profile");
    cmd_verify->add_option("kernel-file", ver.file)->required();
    auto* expect = cmd_verify->add_option("--expect-pdp", ver.expect_pdp,
                                          "comma-separated expected profile")->required();
    (void)expect;
    cmd_verify->add_option("--expect-exponent", ver.expect_exponent)
        ->each([&](const std::string&) { ver.has_expect_exponent = true; });
    cmd_verify->add_option("--tol", ver.tol, "exponent tolerance (default 5e-6)");
    cmd_verify->add_flag("--json", ver.as_json);
    cmd_verify->callback([&] { rc = run_verify(ver); });

    SearchOpts se;
    auto* cmd_search = app.add_subcommand("search", "search for kernels with a given profile");
    cmd_search->add_option("--length", se.length, "kernel size l")->required();
    cmd_search->add_option("--pdp", se.pdp, "target profile")->required();
    cmd_search->add_option("--blocks", se.blocks, "block sizes, bottom row group first");
    cmd_search->add_option("--inv", se.inv, "equivalence invariants: a|aw|aws|none");
    cmd_search->add_option("--max-kernels", se.max_kernels, "0 collects every kernel");
    cmd_search->add_option("--budget", se.budget, "node budget, 0 = unlimited");
    cmd_search->add_option("--seed", se.seed, "fingerprint hash seed");
    cmd_search->add_option("--threads", se.threads, "worker count over first-block branches");
    cmd_search->add_option("--out-dir", se.out_dir, "directory for found kernel files");
    cmd_search->add_flag("--json", se.as_json);
    cmd_search->callback([&] { rc = run_search(se); });

    GenOpts gen;
    auto* cmd_gen = app.add_subcommand("gen-pdps", "enumerate candidate profiles");
    cmd_gen->add_option("--length", gen.length)->required();
    cmd_gen->add_option("--min-exponent", gen.min_exponent)->required();
    cmd_gen->add_option("--dtable", gen.dtable, "file of 'n k d' distance bounds");
    cmd_gen->add_flag("--no-lp", gen.no_lp, "skip the LP feasibility screen");
    cmd_gen->add_option("--limit", gen.limit, "stop after N candidates");
    cmd_gen->add_flag("--json", gen.as_json);
    cmd_gen->callback([&] { rc = run_gen(gen); });

    ClwtOpts cl;
    auto* cmd_clwt = app.add_subcommand("clwt", "coset-leader weight table of a code");
    cmd_clwt->add_option("code-file", cl.file, "generator matrix file")->required();
    cmd_clwt->add_flag("--json", cl.as_json);
    cmd_clwt->callback([&] { rc = run_clwt(cl); });

    InvOpts inv;
    auto* cmd_inv = app.add_subcommand("invariants", "equivalence invariants of a code");
    cmd_inv->add_option("code-file", inv.file, "generator matrix file")->required();
    cmd_inv->add_option("--kind", inv.kind, "a|aw|aws (default aws)");
    cmd_inv->add_option("--seed", inv.seed, "fingerprint hash seed");
    cmd_inv->add_flag("--json", inv.as_json);
    cmd_inv->callback([&] { rc = run_invariants(inv); });

    FixturesOpts fx;
    auto* cmd_fx = app.add_subcommand("fixtures", "list or verify the bundled kernels");
    cmd_fx->add_flag("--verify-all", fx.verify_all, "recompute every profile and exponent");
    cmd_fx->add_option("filter", fx.filter, "name glob, e.g. 'K18*'");
    cmd_fx->add_option("--data-dir", fx.data_dir, "kernel data directory override");
    cmd_fx->add_flag("--json", fx.as_json);
    cmd_fx->callback([&] { rc = run_fixtures(fx); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const pkern::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
