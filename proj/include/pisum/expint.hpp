#pragma once

// Exponential integral Ei(z) for z > 0.
// Power series  Ei(z) = gamma + ln z + sum_{k>=1} z^k/(k*k!)  below the
// crossover, asymptotic series  e^z/z * sum_k k!/z^k  truncated at its
// smallest term above it. At z = 40 the asymptotic truncation floor is
// ~7e-17 relative, so both branches are full double accuracy there.

#include <cmath>
#include <stdexcept>

namespace pisum {

inline constexpr double kEulerGamma = 0.5772156649015328606065121;

inline double expint_ei(double z) {
    if (!(z > 0)) throw std::domain_error("expint_ei: requires z > 0");

    if (z < 40.0) {
        double term = 1.0;
        double sum = 0.0;
        for (int k = 1; k <= 400; ++k) {
            term *= z / k;
            const double contrib = term / k;
            sum += contrib;
            if (contrib < sum * 1e-17) break;
        }
        return kEulerGamma + std::log(z) + sum;
    }

    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 200; ++k) {
        const double next = term * k / z;
        if (next >= term) break;  // divergence onset, stop at smallest term
        term = next;
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return std::exp(z) / z * sum;
}

}  // namespace pisum
