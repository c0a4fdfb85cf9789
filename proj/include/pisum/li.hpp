#pragma once

// Logarithmic integral li(x) = integral_2^x dt/log t (offset convention,
// no principal value), by two independent routes:
//   li       difference of exponential-integral values at log x and log 2
//   li_quad  adaptive quadrature of 1/log t, kept as an in-tree cross-check
// plus the truncated asymptotic expansions of li(x) and of 1/li(x).

#include <cmath>
#include <stdexcept>

#include "pisum/expint.hpp"
#include "pisum/kconstants.hpp"
#include "pisum/quadrature.hpp"

namespace pisum {

struct ExpansionEval {
    double x;
    int m;                       // retained correction terms, per operation
    double value;
    double last_term_magnitude;  // |final retained term|
};

inline QuadratureResult li(double x) {
    if (!(x >= 2)) throw std::domain_error("li: requires x >= 2");
    const double ei_hi = expint_ei(std::log(x));
    const double ei_lo = expint_ei(std::log(2.0));
    // series truncation is ~1 ulp per branch; the subtraction adds one more
    const double err = 8 * CompensatedSum::kEpsHalf * (std::abs(ei_hi) + std::abs(ei_lo));
    return {ei_hi - ei_lo, err};
}

inline QuadratureResult li_quad(double x) {
    if (!(x >= 2)) throw std::domain_error("li_quad: requires x >= 2");
    return integrate([](double t) { return 1.0 / std::log(t); }, 2.0, x,
                     {1e-13, 0.0, 1000000});
}

// value = x * sum_{r=0}^{m} r! / log^{r+1} x
inline ExpansionEval li_expansion(double x, int m) {
    if (!(x > 1)) throw std::domain_error("li_expansion: requires x > 1");
    if (m < 0) throw std::domain_error("li_expansion: requires m >= 0");
    const double L = std::log(x);
    double term = 1.0 / L;  // r!/L^{r+1} at r = 0
    double sum = term;
    for (int r = 1; r <= m; ++r) {
        term *= r / L;
        sum += term;
    }
    return {x, m, x * sum, x * term};
}

// value = (1/x) * (log x - 1 - sum_{r=1}^{m} k_r / log^r x),
// the reciprocal-li expansion with its remainder term dropped
inline ExpansionEval recip_li_expansion(double x, int m, const KTable& k) {
    if (!(x > 1)) throw std::domain_error("recip_li_expansion: requires x > 1");
    if (m < 1) throw std::domain_error("recip_li_expansion: requires m >= 1");
    if (k.m() < static_cast<unsigned>(m))
        throw std::domain_error("recip_li_expansion: k table too short");
    const double L = std::log(x);
    double s = L - 1.0;
    double pow_l = 1.0;
    double last = 0.0;
    for (int r = 1; r <= m; ++r) {
        pow_l *= L;
        last = k.k_double(static_cast<unsigned>(r)) / pow_l;
        s -= last;
    }
    return {x, m, s / x, last / x};
}

}  // namespace pisum
