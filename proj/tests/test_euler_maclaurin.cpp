#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "pisum/euler_maclaurin.hpp"
#include "pisum/quadrature.hpp"

using pisum::euler_maclaurin_sum;
using pisum::psi;

namespace {

template <class F>
double direct_sum(F f, std::uint64_t lo, std::uint64_t hi) {
    long double acc = 0.0L;
    for (std::uint64_t n = lo; n <= hi; ++n) acc += f(static_cast<double>(n));
    return static_cast<double>(acc);
}

}  // namespace

TEST_CASE("sawtooth values and periodicity") {
    CHECK(psi(0.5) == 0.0);
    CHECK(psi(1.0) == -0.5);
    CHECK(psi(3.25) == -0.25);
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dist(0.0, 1000.0);
    for (int i = 0; i < 10000; ++i) {
        const double t = dist(rng);
        CHECK(std::abs(psi(t)) <= 0.5);
        CHECK(psi(t + 1.0) == doctest::Approx(psi(t)).epsilon(1e-12));
    }
}

TEST_CASE("constant and linear integrands") {
    // f = 1 over (0.5, 5.5] covers n = 1..5
    const double c = euler_maclaurin_sum([](double) { return 1.0; },
                                         [](double) { return 0.0; }, 0.5, 5.5);
    CHECK(c == doctest::Approx(5.0).epsilon(1e-13));
    // f = t over (0.5, 4.5] covers 1+2+3+4 = 10
    const double l = euler_maclaurin_sum([](double t) { return t; },
                                         [](double) { return 1.0; }, 0.5, 4.5);
    CHECK(l == doctest::Approx(10.0).epsilon(1e-13));
}

TEST_CASE("harmonic style sums match direct evaluation") {
    const double X = 2.5, Y = 10000.5;
    SUBCASE("1/t") {
        const double em = euler_maclaurin_sum(
            [](double t) { return 1.0 / t; },
            [](double t) { return -1.0 / (t * t); }, X, Y);
        const double dir = direct_sum([](double t) { return 1.0 / t; }, 3, 10000);
        CHECK(std::abs(em - dir) <= 1e-9);
    }
    SUBCASE("log t / t") {
        const double em = euler_maclaurin_sum(
            [](double t) { return std::log(t) / t; },
            [](double t) { return (1.0 - std::log(t)) / (t * t); }, X, Y);
        const double dir =
            direct_sum([](double t) { return std::log(t) / t; }, 3, 10000);
        CHECK(std::abs(em - dir) <= 1e-9);
    }
    SUBCASE("1/(t log t)") {
        const double em = euler_maclaurin_sum(
            [](double t) { return 1.0 / (t * std::log(t)); },
            [](double t) {
                const double L = std::log(t);
                return -(L + 1.0) / (t * t * L * L);
            },
            X, Y);
        const double dir =
            direct_sum([](double t) { return 1.0 / (t * std::log(t)); }, 3, 10000);
        CHECK(std::abs(em - dir) <= 1e-9);
    }
    SUBCASE("1/(t log^2 t)") {
        const double em = euler_maclaurin_sum(
            [](double t) {
                const double L = std::log(t);
                return 1.0 / (t * L * L);
            },
            [](double t) {
                const double L = std::log(t);
                return -(L + 2.0) / (t * t * L * L * L);
            },
            X, Y);
        const double dir = direct_sum(
            [](double t) {
                const double L = std::log(t);
                return 1.0 / (t * L * L);
            },
            3, 10000);
        CHECK(std::abs(em - dir) <= 1e-9);
    }
}

TEST_CASE("domain checks") {
    auto f = [](double t) { return 1.0 / t; };
    auto df = [](double t) { return -1.0 / (t * t); };
    CHECK_THROWS_AS(euler_maclaurin_sum(f, df, 5.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(euler_maclaurin_sum(f, df, 9.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(euler_maclaurin_sum(f, df, 2.5, 2.5 + 6e6), pisum::quadrature_error);
}
