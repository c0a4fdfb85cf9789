#pragma once

// Neumaier-style compensated accumulator with a running error bound.
// The branchful two-sum captures the exact rounding error of sum + term;
// only the fold of that error into comp (one rounding, <= eps/2 * |comp|)
// and the formation of the submitted term itself (<= eps/2 * |term|) leak.
// error_bound() therefore dominates the true accumulated error even after
// ~1e9 additions, which plain summation cannot promise.

#include <cmath>

namespace pisum {

struct CompensatedSum {
    static constexpr double kEpsHalf = 1.1102230246251565e-16;  // 2^-53

    double sum = 0.0;
    double comp = 0.0;
    double bound = 0.0;

    void add(double term) {
        const double s = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - s) + term;
        else
            comp += (term - s) + sum;
        sum = s;
        bound += kEpsHalf * (std::abs(term) + std::abs(comp));
    }

    // Folds a partial accumulator in; order of merges is the caller's contract.
    void merge(const CompensatedSum& part) {
        add(part.sum);
        add(part.comp);
        bound += part.bound;
    }

    double value() const { return sum + comp; }

    double error_bound() const { return bound + kEpsHalf * std::abs(value()); }
};

}  // namespace pisum
