#pragma once

// First-order Euler-Maclaurin: for continuously differentiable f,
//   sum_{X < n <= Y} f(n) = int_X^Y f dt - psi(Y) f(Y) + psi(X) f(X)
//                           + int_X^Y psi(t) f'(t) dt
// with psi(t) = t - floor(t) - 1/2. The sawtooth jumps at integers, so the
// psi integral is taken per unit interval between integer breakpoints; the
// quadrature nodes are interior and never sample a jump. Work is O(Y - X),
// capped; callers with huge ranges want a smooth-tail variant instead.

#include <cmath>
#include <stdexcept>

#include "pisum/compensated.hpp"
#include "pisum/quadrature.hpp"

namespace pisum {

// range [-1/2, 1/2)
inline double psi(double x) { return x - std::floor(x) - 0.5; }

template <typename F, typename G>
inline double euler_maclaurin_sum(F&& f, G&& f_deriv, double X, double Y) {
    if (!(X < Y)) throw std::domain_error("euler_maclaurin_sum: requires X < Y");
    if (Y - X > 5e6)
        throw quadrature_error("euler_maclaurin_sum: range too wide for unit panels", X, Y, 0,
                               0.0, 0.0);

    const double main = integrate(f, X, Y, {1e-13, 0.0, 1000000}).value;

    CompensatedSum corr;
    const QuadratureOptions unit_opt{1e-13, 1e-16, 64};
    double a = X;
    while (a < Y) {
        double b = std::min(std::floor(a) + 1.0, Y);
        if (b <= a) b = Y;  // guards a already at an integer-rounding edge
        corr.add(integrate([&](double t) { return psi(t) * f_deriv(t); }, a, b, unit_opt).value);
        a = b;
    }

    return main - psi(Y) * f(Y) + psi(X) * f(X) + corr.value();
}

}  // namespace pisum
