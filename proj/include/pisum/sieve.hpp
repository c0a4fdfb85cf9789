#pragma once

// Segmented odd-only sieve of Eratosthenes plus the exact reciprocal sum
//   S(x) = sum_{2 <= n <= x} 1/pi(n)
// accumulated with compensated summation in strictly ascending n order.
//
// Parallel layout keeps results bit-identical for any thread count:
//   phase A  sieve segments independently, record prime count per segment
//   phase B  per-segment compensated partial sums, seeded with the serial
//            prefix pi from phase A; segments holding a checkpoint are skipped
//   phase C  serial merge in segment order; checkpoint segments are walked
//            term by term so a capture at x sees exactly the ascending-order
//            accumulator state
// Segment boundaries depend only on segment_size, never on thread count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pisum/compensated.hpp"
#include "pisum/parallel.hpp"

namespace pisum {

struct SieveConfig {
    std::uint64_t limit = 2;                            // planned summation range
    std::uint64_t segment_size = std::uint64_t{1} << 20;  // odd flags per segment
    unsigned threads = 1;

    void validate() const {
        if (limit < 2) throw std::invalid_argument("SieveConfig: limit must be >= 2");
        if (segment_size < 1024)
            throw std::invalid_argument("SieveConfig: segment_size must be >= 1024");
        if (threads < 1) throw std::invalid_argument("SieveConfig: threads must be >= 1");
    }
};

struct ExactSumResult {
    std::uint64_t x;
    double value;
    double comp_error_bound;  // upper bound on accumulated rounding error
    std::uint64_t n_terms;    // = x - 1
};

namespace detail {

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// flags[i] <-> odd number 3 + 2i, for odds in [3, limit]
inline std::vector<std::uint8_t> simple_odd_sieve(std::uint64_t limit) {
    if (limit < 3) return {};
    const std::uint64_t n = (limit - 3) / 2 + 1;
    std::vector<std::uint8_t> flags(n, 1);
    for (std::uint64_t p = 3; p * p <= limit; p += 2) {
        if (!flags[(p - 3) / 2]) continue;
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p) flags[(m - 3) / 2] = 0;
    }
    return flags;
}

inline std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
    const std::uint64_t b = isqrt_u64(limit);
    const auto flags = simple_odd_sieve(b);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < flags.size(); ++i)
        if (flags[i]) out.push_back(3 + 2 * i);
    return out;
}

// flags[i] <-> odd number lo + 2i; lo odd, lo >= 3; base ascending odd primes
inline void sieve_segment(std::uint64_t lo, std::uint64_t count,
                          const std::vector<std::uint64_t>& base,
                          std::vector<std::uint8_t>& flags) {
    flags.assign(count, 1);
    const std::uint64_t hi = lo + 2 * count;  // exclusive
    for (std::uint64_t p : base) {
        if (p * p >= hi) break;
        std::uint64_t m = p * p;
        if (m < lo) {
            m = (lo + p - 1) / p * p;
            if (m % 2 == 0) m += p;
        }
        for (; m < hi; m += 2 * p) flags[(m - lo) >> 1] = 0;
    }
}

}  // namespace detail

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    if (limit < 2) throw std::domain_error("primes_up_to: limit must be >= 2");
    std::vector<std::uint64_t> out{2};
    const auto flags = detail::simple_odd_sieve(limit);
    for (std::uint64_t i = 0; i < flags.size(); ++i)
        if (flags[i]) out.push_back(3 + 2 * i);
    return out;
}

// Calls visit(n, pi(n)) for every n = 2..limit in ascending order.
template <typename Visit>
inline void pi_stream(std::uint64_t limit, Visit&& visit) {
    if (limit < 2) throw std::domain_error("pi_stream: limit must be >= 2");
    visit(std::uint64_t{2}, std::uint64_t{1});
    if (limit < 3) return;

    const std::uint64_t W = std::uint64_t{1} << 20;
    const std::uint64_t odd_count = (limit - 3) / 2 + 1;
    const auto base = detail::base_primes(limit);
    std::vector<std::uint8_t> flags;
    std::uint64_t pi = 1;
    for (std::uint64_t done = 0; done < odd_count; done += W) {
        const std::uint64_t lo = 3 + 2 * done;
        const std::uint64_t cnt = std::min(W, odd_count - done);
        detail::sieve_segment(lo, cnt, base, flags);
        for (std::uint64_t i = 0; i < cnt; ++i) {
            const std::uint64_t o = lo + 2 * i;
            pi += flags[i];
            visit(o, pi);
            if (o + 1 <= limit) visit(o + 1, pi);
        }
    }
}

// Exact partial sums at each checkpoint in xs, one sieve pass total.
// Results are ascending in x. Reduction order is fixed by segment_size alone,
// so a standalone run at x equals the checkpoint run bit for bit.
inline std::vector<ExactSumResult> exact_recip_sum_checkpoints(std::vector<std::uint64_t> xs,
                                                               SieveConfig cfg) {
    cfg.validate();
    if (xs.empty()) throw std::domain_error("exact_recip_sum_checkpoints: empty checkpoint list");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.front() < 2) throw std::domain_error("exact_recip_sum: x must be >= 2");

    const std::uint64_t X = std::max(cfg.limit, xs.back());
    std::vector<ExactSumResult> out;
    out.reserve(xs.size());

    CompensatedSum acc;
    acc.add(1.0);  // n = 2, pi = 1
    std::size_t next_cp = 0;
    auto capture = [&](std::uint64_t xc) {
        out.push_back({xc, acc.value(), acc.error_bound(), xc - 1});
        ++next_cp;
    };
    if (xs[next_cp] == 2) capture(2);

    if (X < 3 || next_cp == xs.size()) return out;

    const std::uint64_t W = cfg.segment_size;
    const std::uint64_t odd_count = (X - 3) / 2 + 1;
    const std::size_t nseg = static_cast<std::size_t>((odd_count + W - 1) / W);
    const auto base = detail::base_primes(X);

    auto seg_lo = [&](std::size_t s) { return 3 + 2 * W * static_cast<std::uint64_t>(s); };
    auto seg_cnt = [&](std::size_t s) {
        return std::min(W, odd_count - W * static_cast<std::uint64_t>(s));
    };

    // phase A
    std::vector<std::uint64_t> seg_count(nseg);
    detail::parallel_for(cfg.threads, nseg, [&](std::size_t s) {
        std::vector<std::uint8_t> flags;
        detail::sieve_segment(seg_lo(s), seg_cnt(s), base, flags);
        std::uint64_t c = 0;
        for (auto f : flags) c += f;
        seg_count[s] = c;
    });

    std::vector<std::uint64_t> pi_before(nseg);
    {
        std::uint64_t pi = 1;
        for (std::size_t s = 0; s < nseg; ++s) {
            pi_before[s] = pi;
            pi += seg_count[s];
        }
    }

    std::vector<std::uint8_t> has_cp(nseg, 0);
    for (std::size_t i = next_cp; i < xs.size(); ++i) {
        const std::uint64_t o = (xs[i] % 2 == 1) ? xs[i] : xs[i] - 1;  // covering odd
        has_cp[((o - 3) / 2) / W] = 1;
    }

    // phase B
    std::vector<CompensatedSum> part(nseg);
    detail::parallel_for(cfg.threads, nseg, [&](std::size_t s) {
        if (has_cp[s]) return;
        std::vector<std::uint8_t> flags;
        const std::uint64_t lo = seg_lo(s), cnt = seg_cnt(s);
        detail::sieve_segment(lo, cnt, base, flags);
        std::uint64_t pi = pi_before[s];
        CompensatedSum a;
        for (std::uint64_t i = 0; i < cnt; ++i) {
            const std::uint64_t o = lo + 2 * i;
            pi += flags[i];
            const double term = 1.0 / static_cast<double>(pi);
            a.add(term);
            if (o + 1 <= X) a.add(term);
        }
        part[s] = a;
    });

    // phase C
    std::vector<std::uint8_t> flags;
    for (std::size_t s = 0; s < nseg; ++s) {
        if (!has_cp[s]) {
            acc.merge(part[s]);
            continue;
        }
        const std::uint64_t lo = seg_lo(s), cnt = seg_cnt(s);
        detail::sieve_segment(lo, cnt, base, flags);
        std::uint64_t pi = pi_before[s];
        for (std::uint64_t i = 0; i < cnt; ++i) {
            const std::uint64_t o = lo + 2 * i;
            pi += flags[i];
            const double term = 1.0 / static_cast<double>(pi);
            acc.add(term);
            if (next_cp < xs.size() && xs[next_cp] == o) capture(o);
            if (o + 1 <= X) {
                acc.add(term);
                if (next_cp < xs.size() && xs[next_cp] == o + 1) capture(o + 1);
            }
        }
    }
    return out;
}

inline ExactSumResult exact_recip_sum(std::uint64_t x, const SieveConfig& cfg) {
    return exact_recip_sum_checkpoints({x}, cfg).front();
}

inline ExactSumResult exact_recip_sum(std::uint64_t x) {
    SieveConfig cfg;
    cfg.limit = std::max<std::uint64_t>(x, 2);
    return exact_recip_sum(x, cfg);
}

}  // namespace pisum
