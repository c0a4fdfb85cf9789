#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "pisum/kconstants.hpp"

using pisum::BigUint;
using pisum::KTable;
using pisum::factorial;
using pisum::k_constants;
using pisum::verify_recurrence;

TEST_CASE("first constants have their known values") {
    const auto t = k_constants(10);
    const std::uint64_t expected[] = {1,     3,      13,     71,      461,
                                      3447, 29093,  273343, 2829325, 31998903};
    REQUIRE(t.m() == 10);
    for (unsigned r = 1; r <= 10; ++r) CHECK(t.k(r) == BigUint{expected[r - 1]});
}

TEST_CASE("single entry table") {
    const auto t = k_constants(1);
    REQUIRE(t.m() == 1);
    CHECK(t.k(1) == BigUint{1});
}

TEST_CASE("deep entries, exact decimal digits") {
    const auto t = k_constants(64);
    CHECK(t.k(30).to_string() == "7682002790499533568011331441585447");
    CHECK(t.k(64).to_string() ==
          "7991757560892815227511341063617954885468340691336572621866580637062312108381"
          "351660033320703");
}

TEST_CASE("recurrence identity holds exactly through m = 64") {
    for (unsigned m : {1u, 2u, 3u, 5u, 13u, 30u, 64u}) CHECK(verify_recurrence(k_constants(m)));
}

TEST_CASE("perturbed table fails verification") {
    KTable bad;
    bad.values = {BigUint{1}, BigUint{3}, BigUint{14}};
    CHECK_FALSE(verify_recurrence(bad));

    KTable good;
    good.values = {BigUint{1}, BigUint{3}, BigUint{13}};
    CHECK(verify_recurrence(good));
}

TEST_CASE("prefix stability") {
    const auto small = k_constants(5);
    const auto large = k_constants(12);
    for (unsigned r = 1; r <= 5; ++r) CHECK(small.k(r) == large.k(r));
}

TEST_CASE("growth bound k_m < m * m!") {
    const auto t = k_constants(64);
    for (unsigned m = 2; m <= 64; ++m) {
        CHECK(t.k(m) >= BigUint{1});
        CHECK(t.k(m) < BigUint{m} * factorial(m));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(k_constants(0), std::domain_error);
    CHECK_THROWS_AS(k_constants(3).k(4), std::domain_error);
    CHECK_THROWS_AS(k_constants(3).k(0), std::domain_error);
}

TEST_CASE("factorial helper") {
    CHECK(factorial(0) == BigUint{1});
    CHECK(factorial(1) == BigUint{1});
    CHECK(factorial(10) == BigUint{3628800});
    CHECK(factorial(25).to_string() == "15511210043330985984000000");
}
