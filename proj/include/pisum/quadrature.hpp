#pragma once

// Globally adaptive quadrature over [a, b]: each panel is evaluated with
// paired 7- and 15-point Gauss-Legendre rules, the panel error taken as
// |G15 - G7|, and the worst panel bisected until the summed estimate meets
// tolerance. Worst-first refinement avoids the tolerance starvation that
// plain recursive bisection hits on very wide ranges. All nodes are interior,
// so integrands may be singular or discontinuous exactly at panel boundaries.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pisum/compensated.hpp"

namespace pisum {

struct QuadratureResult {
    double value;
    double abs_err_estimate;  // >= 0
};

class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double a, double b, std::size_t panels,
                     double value, double err)
        : std::runtime_error(what + " [a=" + std::to_string(a) + " b=" + std::to_string(b) +
                             " panels=" + std::to_string(panels) +
                             " value=" + std::to_string(value) + " err=" + std::to_string(err) +
                             "]"),
          a_(a), b_(b), panels_(panels), value_(value), err_(err) {}

    double a() const { return a_; }
    double b() const { return b_; }
    std::size_t panels() const { return panels_; }
    double best_value() const { return value_; }
    double best_err() const { return err_; }

private:
    double a_, b_;
    std::size_t panels_;
    double value_, err_;
};

struct QuadratureOptions {
    double rel_tol = 1e-13;
    double abs_tol = 0.0;
    std::size_t max_panels = 1000000;
};

namespace detail {

// Gauss-Legendre abscissas/weights on [-1, 1], positive half (rules are symmetric).
inline constexpr double kG7X[4] = {
    0.0,
    0.4058451513773971669066,
    0.7415311855993944398639,
    0.9491079123427585245262,
};
inline constexpr double kG7W[4] = {
    0.4179591836734693877551,
    0.3818300505051189449504,
    0.2797053914892766679015,
    0.1294849661688696932706,
};
inline constexpr double kG15X[8] = {
    0.0,
    0.2011940939974345223006,
    0.3941513470775633698972,
    0.5709721726085388475372,
    0.7244177313601700474162,
    0.8482065834104272162006,
    0.9372733924007059043078,
    0.9879925180204854284896,
};
inline constexpr double kG15W[8] = {
    0.2025782419255612728806,
    0.1984314853271115764561,
    0.1861610000155622110268,
    0.1662692058169939335532,
    0.1395706779261543144478,
    0.1071592204671719350119,
    0.07036604748810812470927,
    0.03075324199611726835463,
};

struct QuadPanel {
    double a, b;
    double value;  // G15
    double err;    // |G15 - G7|
};

// ordering for the max-heap: largest error first, ties by position
inline bool panel_less(const QuadPanel& x, const QuadPanel& y) {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;
}

template <typename F>
inline QuadPanel eval_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double g7 = kG7W[0] * f(c);
    for (int i = 1; i < 4; ++i)
        g7 += kG7W[i] * (f(c - h * kG7X[i]) + f(c + h * kG7X[i]));
    double g15 = kG15W[0] * f(c);
    for (int i = 1; i < 8; ++i)
        g15 += kG15W[i] * (f(c - h * kG15X[i]) + f(c + h * kG15X[i]));
    g7 *= h;
    g15 *= h;
    return {a, b, g15, std::abs(g15 - g7)};
}

}  // namespace detail

template <typename F>
inline QuadratureResult integrate(F&& f, double a, double b, QuadratureOptions opt = {}) {
    if (!(a <= b)) throw std::domain_error("integrate: requires a <= b");
    if (a == b) return {0.0, 0.0};

    std::vector<detail::QuadPanel> heap;
    heap.push_back(detail::eval_panel(f, a, b));
    double total_value = heap[0].value;
    double total_err = heap[0].err;
    if (!std::isfinite(total_value))
        throw quadrature_error("integrate: non-finite integrand sample", a, b, 1, total_value,
                               total_err);

    auto tolerance = [&] {
        return std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value));
    };

    while (total_err > tolerance()) {
        if (heap.size() >= opt.max_panels)
            throw quadrature_error("integrate: panel budget exhausted", a, b, heap.size(),
                                   total_value, total_err);
        std::pop_heap(heap.begin(), heap.end(), detail::panel_less);
        const detail::QuadPanel worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw quadrature_error("integrate: panel width at rounding floor", a, b,
                                   heap.size() + 1, total_value, total_err);

        const auto left = detail::eval_panel(f, worst.a, mid);
        const auto right = detail::eval_panel(f, mid, worst.b);
        if (!std::isfinite(left.value) || !std::isfinite(right.value))
            throw quadrature_error("integrate: non-finite integrand sample", a, b,
                                   heap.size() + 2, total_value, total_err);

        total_value += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), detail::panel_less);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), detail::panel_less);
    }

    // recompute totals left to right; the incremental running sums drift
    std::sort(heap.begin(), heap.end(),
              [](const detail::QuadPanel& x, const detail::QuadPanel& y) { return x.a < y.a; });
    CompensatedSum val, err;
    for (const auto& p : heap) {
        val.add(p.value);
        err.add(p.err);
    }
    return {val.value(), err.value()};
}

}  // namespace pisum
