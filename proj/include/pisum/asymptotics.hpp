#pragma once

// Asymptotic forms of the reciprocal prime-count partial sum S(x), the
// fitted additive constants they leave undetermined, and error-decay tables.
//
// Two approximations are provided:
//   log_expansion_sum   half log^2 x - log x - loglog x + C
//                       + sum_{r=2}^{m} k_r/((r-1) log^{r-1} x)
//   li_form_sum         log x * log(li x) - int_3^x log(li t)/t dt + B
// C and B have no closed form; fit_constant_* estimate them against an exact
// oracle on an ascending grid, taking the estimate at the largest grid point
// as canonical and the spread over the retained upper half as the drift.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pisum/kconstants.hpp"
#include "pisum/li.hpp"
#include "pisum/quadrature.hpp"

namespace pisum {

// (log x)^{3/5} * (loglog x)^{-1/5}; the exponent scale of the best
// unconditional prime-counting error envelope
inline double delta(double x) {
    static const double kE = std::exp(1.0);
    if (!(x > kE)) throw std::domain_error("delta: requires x > e");
    const double L = std::log(x);
    return std::pow(L, 0.6) * std::pow(std::log(L), -0.2);
}

struct ErrorEnvelope {
    double x;
    double delta;
    double envelope;  // x * exp(-c_env * delta); diagnostic overlay only
};

inline ErrorEnvelope error_envelope(double x, double c_env = 1.0) {
    if (!(c_env > 0)) throw std::domain_error("error_envelope: requires c_env > 0");
    const double d = delta(x);
    return {x, d, x * std::exp(-c_env * d)};
}

struct LogExpansionEval {
    double x;
    int m;  // >= 2
    double c;
    double value;
};

inline LogExpansionEval log_expansion_sum(double x, int m, double c, const KTable& k) {
    if (!(x >= 3)) throw std::domain_error("log_expansion_sum: requires x >= 3");
    if (m < 2) throw std::domain_error("log_expansion_sum: requires m >= 2");
    if (k.m() < static_cast<unsigned>(m))
        throw std::domain_error("log_expansion_sum: k table too short");
    const double L = std::log(x);
    double v = 0.5 * L * L - L - std::log(L) + c;
    double pow_l = L;  // L^{r-1}
    for (int r = 2; r <= m; ++r) {
        v += k.k_double(static_cast<unsigned>(r)) / ((r - 1) * pow_l);
        pow_l *= L;
    }
    return {x, m, c, v};
}

struct LiFormOptions {
    double quad_rel_tol = 1e-11;
    std::size_t max_panels = 1000000;
};

inline double li_form_sum(double x, double b, LiFormOptions opt = {}) {
    if (!(x > 3)) throw std::domain_error("li_form_sum: requires x > 3");
    const double head = std::log(x) * std::log(li(x).value);
    const double tail = integrate([](double t) { return std::log(li(t).value) / t; }, 3.0, x,
                                  {opt.quad_rel_tol, 0.0, opt.max_panels})
                            .value;
    return head - tail + b;
}

struct FitSample {
    double x;
    double estimate;
};

struct FitReport {
    std::string constant_name;  // "C" or "B"
    int m;                      // 0 when not applicable
    std::vector<FitSample> samples;
    double central_value;  // estimate at the largest grid point
    double spread;         // max - min over the retained upper half
    bool stabilized;       // spread <= caller tolerance
};

using SumOracle = std::function<double(std::uint64_t)>;

namespace detail {

inline void check_fit_grid(const std::vector<std::uint64_t>& grid) {
    if (grid.size() < 3) throw std::domain_error("fit: grid needs at least 3 points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 1000) throw std::domain_error("fit: grid points must be >= 1000");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw std::domain_error("fit: grid must be strictly ascending");
    }
}

inline FitReport assemble_fit(std::string name, int m, std::vector<FitSample> samples,
                              double stabilize_tol) {
    const std::size_t n = samples.size();
    const std::size_t retained = (n + 1) / 2;  // upper half, rounding up
    double lo = samples[n - retained].estimate;
    double hi = lo;
    for (std::size_t i = n - retained; i < n; ++i) {
        lo = std::min(lo, samples[i].estimate);
        hi = std::max(hi, samples[i].estimate);
    }
    FitReport r;
    r.constant_name = std::move(name);
    r.m = m;
    r.central_value = samples.back().estimate;
    r.samples = std::move(samples);
    r.spread = hi - lo;
    r.stabilized = r.spread <= stabilize_tol;
    return r;
}

}  // namespace detail

inline FitReport fit_constant_c(const std::vector<std::uint64_t>& grid, int m, const KTable& k,
                                const SumOracle& oracle, double stabilize_tol) {
    detail::check_fit_grid(grid);
    if (m < 2) throw std::domain_error("fit_constant_c: requires m >= 2");
    std::vector<FitSample> samples;
    samples.reserve(grid.size());
    for (auto x : grid) {
        const double est = oracle(x) - log_expansion_sum(double(x), m, 0.0, k).value;
        samples.push_back({double(x), est});
    }
    return detail::assemble_fit("C", m, std::move(samples), stabilize_tol);
}

inline FitReport fit_constant_b(const std::vector<std::uint64_t>& grid, const SumOracle& oracle,
                                double stabilize_tol) {
    detail::check_fit_grid(grid);
    std::vector<FitSample> samples;
    samples.reserve(grid.size());
    for (auto x : grid) {
        const double est = oracle(x) - li_form_sum(double(x), 0.0);
        samples.push_back({double(x), est});
    }
    return detail::assemble_fit("B", 0, std::move(samples), stabilize_tol);
}

struct ErrorRow {
    double x;
    double exact;
    double approx;
    double diff;         // exact - approx
    double scaled_diff;  // diff * log^m x
};

inline std::vector<ErrorRow> error_table(const std::vector<std::uint64_t>& grid, int m, double c,
                                         const KTable& k, const SumOracle& oracle) {
    if (m < 2) throw std::domain_error("error_table: requires m >= 2");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1])
            throw std::domain_error("error_table: grid must be strictly ascending");
    std::vector<ErrorRow> rows;
    rows.reserve(grid.size());
    for (auto x : grid) {
        const double exact = oracle(x);
        const double approx = log_expansion_sum(double(x), m, c, k).value;
        const double diff = exact - approx;
        rows.push_back({double(x), exact, approx, diff, diff * std::pow(std::log(double(x)), m)});
    }
    return rows;
}

}  // namespace pisum
