#pragma once

// Command line front end. run_cli takes argv-style tokens (program name not
// included) so tests can drive it in process; the binary under tools/ is a
// thin wrapper. Every subcommand emits CSV with a header row, LF endings,
// shortest round-trip doubles. Exit codes: 0 ok, 2 usage or domain error,
// 3 stabilization check failed, 4 numeric failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pisum/asymptotics.hpp"
#include "pisum/aux_sums.hpp"
#include "pisum/csv.hpp"
#include "pisum/grid.hpp"
#include "pisum/kconstants.hpp"
#include "pisum/li.hpp"
#include "pisum/sieve.hpp"

namespace pisum::cli {

namespace detail {

// exact-sum oracle over a fixed grid, one sieve pass for all points
inline std::map<std::uint64_t, double> oracle_over_grid(const std::vector<std::uint64_t>& grid,
                                                        std::uint64_t segment_size,
                                                        unsigned threads) {
    SieveConfig cfg;
    cfg.limit = grid.back();
    cfg.segment_size = segment_size;
    cfg.threads = threads;
    std::map<std::uint64_t, double> out;
    for (const auto& r : exact_recip_sum_checkpoints(grid, cfg)) out[r.x] = r.value;
    return out;
}

// max/min of |scaled_diff| with the fit anchor (last grid point) excluded;
// the fit pins diff to zero there, which would make any ratio meaningless
inline bool scaled_ratio_ok(const std::vector<ErrorRow>& rows, double* ratio_out) {
    if (rows.size() < 3) {
        *ratio_out = 1.0;
        return true;
    }
    double lo = 0, hi = 0;
    bool first = true;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const double v = std::abs(rows[i].scaled_diff);
        lo = first ? v : std::min(lo, v);
        hi = first ? v : std::max(hi, v);
        first = false;
    }
    if (lo == 0.0) {
        *ratio_out = hi == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    } else {
        *ratio_out = hi / lo;
    }
    return *ratio_out <= 10.0;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"reciprocal prime-count partial sums and their asymptotics"};
    app.name("pisum");
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout")
        ->envname("PISUM_OUT");
    std::uint64_t segment_size = std::uint64_t{1} << 20;
    app.add_option("--segment-size", segment_size, "sieve segment size in odd flags")
        ->envname("PISUM_SEGMENT_SIZE")
        ->check(CLI::Range(std::uint64_t{1024}, std::uint64_t{1} << 31));
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for sieving and block sums")
        ->envname("PISUM_THREADS")
        ->check(CLI::Range(1u, 1024u));
    double tolerance = 0.1;
    app.add_option("--tolerance", tolerance, "stabilization tolerance for constant fits")
        ->envname("PISUM_TOLERANCE")
        ->check(CLI::PositiveNumber);

    auto* sc_exact = app.add_subcommand("exact", "exact partial sum of 1/pi(n) up to x");
    std::uint64_t exact_x = 0;
    sc_exact->add_option("--x", exact_x, "upper limit, inclusive")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));

    auto* sc_li = app.add_subcommand("li", "logarithmic integral and its expansions");
    double li_x = 0;
    sc_li->add_option("--x", li_x, "evaluation point")->required();
    bool li_use_quad = false;
    sc_li->add_flag("--quad", li_use_quad, "evaluate by adaptive quadrature instead");
    int li_expansion_m = -1;
    auto* li_exp_opt =
        sc_li->add_option("--expansion", li_expansion_m, "emit the li expansion of order m")
            ->check(CLI::Range(0, 64));
    int li_recip_m = -1;
    auto* li_recip_opt =
        sc_li->add_option("--recip", li_recip_m, "emit the reciprocal-li expansion of order m")
            ->check(CLI::Range(1, 64));
    li_exp_opt->excludes(li_recip_opt);
    li_recip_opt->excludes(li_exp_opt);

    auto* sc_kconst = app.add_subcommand("kconst", "exact recurrence constants k_1..k_m");
    int kconst_m = 0;
    sc_kconst->add_option("--m", kconst_m, "table length")->required()->check(CLI::Range(1, 4096));

    auto* sc_auxsum = app.add_subcommand("auxsum", "auxiliary partial sums and their constants");
    std::string aux_kind;
    sc_auxsum
        ->add_option("--kind", aux_kind,
                     "one of log-over-n, recip-n, recip-n-log, recip-n-log-r")
        ->required()
        ->check(CLI::IsMember({"log-over-n", "recip-n", "recip-n-log", "recip-n-log-r"}));
    int aux_r = 0;
    sc_auxsum->add_option("--r", aux_r, "log power for recip-n-log-r")->check(CLI::Range(2, 64));
    double aux_x = 0;
    sc_auxsum->add_option("--x", aux_x, "upper limit")->required();

    auto* sc_verify = app.add_subcommand("verify", "fit C and emit the error-decay table");
    std::string verify_grid = "1e4:1e8:x10";
    sc_verify->add_option("--grid", verify_grid, "grid spec <start>:<stop>:x<factor>");
    int verify_m = 3;
    sc_verify->add_option("--m", verify_m, "truncation order")->check(CLI::Range(2, 64));

    auto* sc_f12 = app.add_subcommand("formula12", "li-form sum: fit B and emit the table");
    std::string f12_grid = "1e4:1e7:x10";
    sc_f12->add_option("--grid", f12_grid, "grid spec <start>:<stop>:x<factor>");
    double f12_b = 0;
    auto* f12_b_opt = sc_f12->add_option("--b", f12_b, "use this B instead of fitting");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    std::ofstream ofs;
    std::ostream* os = &out;
    if (!out_path.empty()) {
        ofs.open(out_path, std::ios::binary);
        if (!ofs) {
            err << "error: cannot open output file '" << out_path << "'\n";
            return 2;
        }
        os = &ofs;
    }
    CsvWriter w(*os);

    try {
        if (app.got_subcommand(sc_exact)) {
            SieveConfig cfg;
            cfg.limit = exact_x;
            cfg.segment_size = segment_size;
            cfg.threads = threads;
            const auto r = exact_recip_sum(exact_x, cfg);
            w.row({"x", "value", "comp_error_bound", "n_terms"});
            w.row({format_u64(r.x), format_double(r.value), format_double(r.comp_error_bound),
                   format_u64(r.n_terms)});
            return 0;
        }

        if (app.got_subcommand(sc_li)) {
            if (li_recip_opt->count() > 0) {
                const auto k = k_constants(static_cast<unsigned>(li_recip_m));
                const auto e = recip_li_expansion(li_x, li_recip_m, k);
                w.row({"x", "m", "value", "last_term_magnitude"});
                w.row({format_double(e.x), format_u64(static_cast<std::uint64_t>(e.m)),
                       format_double(e.value), format_double(e.last_term_magnitude)});
            } else if (li_exp_opt->count() > 0) {
                const auto e = li_expansion(li_x, li_expansion_m);
                w.row({"x", "m", "value", "last_term_magnitude"});
                w.row({format_double(e.x), format_u64(static_cast<std::uint64_t>(e.m)),
                       format_double(e.value), format_double(e.last_term_magnitude)});
            } else {
                const auto r = li_use_quad ? li_quad(li_x) : li(li_x);
                w.row({"x", "value", "abs_err_estimate"});
                w.row({format_double(li_x), format_double(r.value),
                       format_double(r.abs_err_estimate)});
            }
            return 0;
        }

        if (app.got_subcommand(sc_kconst)) {
            const auto t = k_constants(static_cast<unsigned>(kconst_m));
            w.row({"r", "k_r"});
            for (unsigned r = 1; r <= t.m(); ++r) w.row({format_u64(r), t.k(r).to_string()});
            return 0;
        }

        if (app.got_subcommand(sc_auxsum)) {
            AuxSumOptions opt;
            opt.threads = threads;
            AuxSumResult res;
            std::string kind_label = aux_kind;
            if (aux_kind == "recip-n-log-r") {
                if (aux_r < 2) {
                    err << "error: --kind recip-n-log-r requires --r >= 2\n";
                    return 2;
                }
                res = aux_sum(AuxSumKind::recip_n_log_r(aux_r),
                              aux_x, k_constants(static_cast<unsigned>(aux_r)), opt);
                kind_label += ":" + std::to_string(aux_r);
            } else if (aux_kind == "log-over-n") {
                res = aux_sum(AuxSumKind::log_over_n(), aux_x, opt);
            } else if (aux_kind == "recip-n") {
                res = aux_sum(AuxSumKind::recip_n(), aux_x, opt);
            } else {
                res = aux_sum(AuxSumKind::recip_n_log(), aux_x, opt);
            }
            w.row({"kind", "x", "value", "main_term", "constant_estimate"});
            w.row({kind_label, format_double(res.x), format_double(res.value),
                   format_double(res.main_term), format_double(res.constant_estimate)});
            return 0;
        }

        if (app.got_subcommand(sc_verify)) {
            const auto grid = parse_grid(verify_grid);
            const auto sums = detail::oracle_over_grid(grid, segment_size, threads);
            const SumOracle oracle = [&](std::uint64_t x) { return sums.at(x); };
            const auto k = k_constants(static_cast<unsigned>(std::max(verify_m, 5)));
            const auto fit = fit_constant_c(grid, verify_m, k, oracle, tolerance);
            const auto rows = error_table(grid, verify_m, fit.central_value, k, oracle);
            double ratio = 0;
            const bool ratio_ok = detail::scaled_ratio_ok(rows, &ratio);

            w.comment("fit " + fit.constant_name + " m=" + std::to_string(fit.m) +
                      " central=" + format_double(fit.central_value) +
                      " spread=" + format_double(fit.spread) +
                      " stabilized=" + (fit.stabilized ? "true" : "false") +
                      " tol=" + format_double(tolerance));
            w.comment("scaled_diff ratio over decades (fit anchor excluded) = " +
                      format_double(ratio) + " limit = 10");
            w.row({"x", "exact", "approx", "diff", "scaled_diff"});
            for (const auto& r : rows)
                w.row({format_double(r.x), format_double(r.exact), format_double(r.approx),
                       format_double(r.diff), format_double(r.scaled_diff)});
            return (fit.stabilized && ratio_ok) ? 0 : 3;
        }

        if (app.got_subcommand(sc_f12)) {
            const auto grid = parse_grid(f12_grid);
            const auto sums = detail::oracle_over_grid(grid, segment_size, threads);
            const SumOracle oracle = [&](std::uint64_t x) { return sums.at(x); };
            double b = f12_b;
            bool stabilized = true;
            if (f12_b_opt->count() == 0) {
                const auto fit = fit_constant_b(grid, oracle, tolerance);
                b = fit.central_value;
                stabilized = fit.stabilized;
                w.comment("fit " + fit.constant_name + " central=" +
                          format_double(fit.central_value) + " spread=" +
                          format_double(fit.spread) + " stabilized=" +
                          (fit.stabilized ? "true" : "false") + " tol=" +
                          format_double(tolerance));
            } else {
                w.comment("B given = " + format_double(b));
            }
            w.row({"x", "exact", "approx", "diff"});
            for (auto x : grid) {
                const double exact = oracle(x);
                const double approx = li_form_sum(double(x), b);
                w.row({format_u64(x), format_double(exact), format_double(approx),
                       format_double(exact - approx)});
            }
            return stabilized ? 0 : 3;
        }
    } catch (const quadrature_error& e) {
        err << "error: numeric failure: " << e.what() << '\n';
        return 4;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    }
    return 2;  // unreachable with require_subcommand(1)
}

}  // namespace pisum::cli
