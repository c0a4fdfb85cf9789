#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pisum/sieve.hpp"

using pisum::ExactSumResult;
using pisum::SieveConfig;
using pisum::exact_recip_sum;
using pisum::exact_recip_sum_checkpoints;
using pisum::pi_stream;
using pisum::primes_up_to;

namespace {

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("primes_up_to small limits") {
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(11) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
    CHECK_THROWS_AS(primes_up_to(1), std::domain_error);
}

TEST_CASE("primes_up_to matches trial division at 1e4") {
    const auto primes = primes_up_to(10000);
    CHECK(primes.size() == 1229);
    std::size_t count = 0;
    for (std::uint64_t n = 2; n <= 10000; ++n)
        if (is_prime_trial(n)) ++count;
    CHECK(count == primes.size());
    for (std::uint64_t p : primes) CHECK(is_prime_trial(p));
}

TEST_CASE("pi_stream visits every n with the running prime count") {
    SUBCASE("tiny") {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> seen;
        pi_stream(5, [&](std::uint64_t n, std::uint64_t pi) { seen.emplace_back(n, pi); });
        const std::vector<std::pair<std::uint64_t, std::uint64_t>> want = {
            {2, 1}, {3, 2}, {4, 2}, {5, 3}};
        CHECK(seen == want);
    }
    SUBCASE("limit 2") {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> seen;
        pi_stream(2, [&](std::uint64_t n, std::uint64_t pi) { seen.emplace_back(n, pi); });
        REQUIRE(seen.size() == 1);
        CHECK(seen[0] == std::pair<std::uint64_t, std::uint64_t>{2, 1});
    }
    SUBCASE("unit steps and known counts") {
        std::uint64_t prev = 0, last = 0, count = 0;
        pi_stream(100000, [&](std::uint64_t n, std::uint64_t pi) {
            CHECK(pi - prev <= 1);
            CHECK(pi >= 1);
            prev = pi;
            last = pi;
            ++count;
            (void)n;
        });
        CHECK(count == 100000 - 1);
        CHECK(last == 9592);
    }
    SUBCASE("final value matches primes_up_to") {
        std::uint64_t last = 0;
        pi_stream(1000000, [&](std::uint64_t, std::uint64_t pi) { last = pi; });
        CHECK(last == 78498);
        CHECK(last == primes_up_to(1000000).size());
    }
}

TEST_CASE("exact sum tiny closed forms") {
    // n=2: 1/pi(2) = 1
    CHECK(exact_recip_sum(2).value == 1.0);
    // n<=4: 1 + 1/2 + 1/2 = 2
    CHECK(exact_recip_sum(4).value == 2.0);
    // n<=10: 1 + 1/2 + 1/2 + 1/3 + 1/3 + 1/4 + 1/4 + 1/4 + 1/4 = 11/3
    CHECK(exact_recip_sum(10).value == doctest::Approx(11.0 / 3.0).epsilon(1e-15));
    CHECK(exact_recip_sum(10).n_terms == 9);
    CHECK_THROWS_AS(exact_recip_sum(1), std::domain_error);
}

TEST_CASE("exact sum matches a naive oracle at 1e5") {
    long double ref = 0.0L;
    std::uint64_t pi = 0;
    for (std::uint64_t n = 2; n <= 100000; ++n) {
        if (is_prime_trial(n)) ++pi;
        ref += 1.0L / static_cast<long double>(pi);
    }
    const auto got = exact_recip_sum(100000);
    CHECK(std::abs(got.value - static_cast<double>(ref)) <= 1e-12);
    CHECK(got.n_terms == 100000 - 1);
}

TEST_CASE("frozen checkpoint values") {
    const auto r4 = exact_recip_sum(10000);
    CHECK(r4.value == doctest::Approx(37.902679999490054).epsilon(1e-12));
    const auto r6 = exact_recip_sum(1000000);
    CHECK(r6.value == doctest::Approx(85.95308758355011).epsilon(1e-12));
    CHECK(r6.comp_error_bound < 1e-9);
    CHECK(r6.n_terms == 1000000 - 1);
}

TEST_CASE("increment property at a checkpoint pair") {
    // S(n) - S(n-1) == 1/pi(n)
    std::vector<std::uint64_t> xs = {999, 1000};
    const auto rs = exact_recip_sum_checkpoints(xs, SieveConfig{});
    REQUIRE(rs.size() == 2);
    CHECK(rs[1].value - rs[0].value == doctest::Approx(1.0 / 168.0).epsilon(1e-12));
}

TEST_CASE("one checkpoint pass equals standalone runs bitwise") {
    std::vector<std::uint64_t> xs = {10, 100, 1000};
    SieveConfig cfg;
    cfg.limit = 1000;
    const auto rs = exact_recip_sum_checkpoints(xs, cfg);
    REQUIRE(rs.size() == 3);
    for (const auto& r : rs) {
        const auto solo = exact_recip_sum(r.x);
        CHECK(r.value == solo.value);
        CHECK(r.n_terms == solo.n_terms);
    }
}

TEST_CASE("checkpoint input is sorted and deduplicated") {
    std::vector<std::uint64_t> xs = {1000, 10, 10, 100};
    const auto rs = exact_recip_sum_checkpoints(xs, SieveConfig{});
    REQUIRE(rs.size() == 3);
    CHECK(rs[0].x == 10);
    CHECK(rs[1].x == 100);
    CHECK(rs[2].x == 1000);
    CHECK_THROWS_AS(exact_recip_sum_checkpoints({}, SieveConfig{}), std::domain_error);
    CHECK_THROWS_AS(exact_recip_sum_checkpoints({1}, SieveConfig{}), std::domain_error);
}

TEST_CASE("thread count does not change the bits") {
    const std::uint64_t x = 1000000;
    ExactSumResult base{};
    bool first = true;
    for (unsigned threads : {1u, 2u, 4u}) {
        SieveConfig cfg;
        cfg.limit = x;
        cfg.segment_size = 1u << 20;
        cfg.threads = threads;
        const auto r = exact_recip_sum(x, cfg);
        if (first) {
            base = r;
            first = false;
        } else {
            CHECK(r.value == base.value);
            CHECK(r.comp_error_bound == base.comp_error_bound);
        }
    }
}

TEST_CASE("segment size changes stay within combined error bounds") {
    const std::uint64_t x = 1000000;
    SieveConfig a;
    a.limit = x;
    a.segment_size = 1u << 16;
    SieveConfig b;
    b.limit = x;
    b.segment_size = 1u << 20;
    const auto ra = exact_recip_sum(x, a);
    const auto rb = exact_recip_sum(x, b);
    CHECK(std::abs(ra.value - rb.value) <= ra.comp_error_bound + rb.comp_error_bound);
}

TEST_CASE("config validation") {
    SieveConfig cfg;
    cfg.limit = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SieveConfig{};
    cfg.segment_size = 512;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SieveConfig{};
    cfg.threads = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
