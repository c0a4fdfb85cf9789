#pragma once

// The four auxiliary partial sums over 3 <= n <= x:
//   log n / n,  1/n,  1/(n log n),  k_r/(n log^r n)
// summed directly up to a cutoff (default 1e8 terms) and by a smooth-tail
// Euler-Maclaurin step beyond it. The tail runs between half-integer
// endpoints where the sawtooth psi vanishes, and replaces the oscillatory
// psi*f' integral by its periodic antiderivative at the endpoints:
//   sigma(t) = ({t}^2 - {t})/2 + 1/12,  sigma(n + 1/2) = -1/24,  |sigma| <= 1/12
// leaving a residual below (1/12)(|f'(T)| + |f'(Y)|), ~1e-15 at T >= 1e8.
//
// Each sum equals (main term) + (empirical constant) + o(1); the constant has
// no closed form, so constant_estimate reports the value observed at this x
// and main_term carries the x-dependent part per kind.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pisum/compensated.hpp"
#include "pisum/kconstants.hpp"
#include "pisum/parallel.hpp"
#include "pisum/quadrature.hpp"

namespace pisum {

enum class AuxKindTag { log_over_n, recip_n, recip_n_log, recip_n_log_r };

struct AuxSumKind {
    AuxKindTag tag = AuxKindTag::recip_n;
    int r = 0;  // order for recip_n_log_r, >= 2

    static AuxSumKind log_over_n() { return {AuxKindTag::log_over_n, 0}; }
    static AuxSumKind recip_n() { return {AuxKindTag::recip_n, 0}; }
    static AuxSumKind recip_n_log() { return {AuxKindTag::recip_n_log, 0}; }
    static AuxSumKind recip_n_log_r(int r) {
        if (r < 2) throw std::domain_error("AuxSumKind: requires r >= 2");
        return {AuxKindTag::recip_n_log_r, r};
    }
};

struct AuxSumResult {
    AuxSumKind kind;
    double x;
    double value;
    double main_term;
    double constant_estimate;
};

struct AuxSumOptions {
    std::uint64_t direct_cutoff = 100000000;  // largest n summed term by term
    unsigned threads = 1;
    std::uint64_t block = std::uint64_t{1} << 22;  // terms per parallel block
};

namespace detail {

struct AuxIntegrand {
    AuxKindTag tag;
    int r;
    double kr;  // coefficient for recip_n_log_r, 1 otherwise

    double f(double t) const {
        const double L = std::log(t);
        switch (tag) {
            case AuxKindTag::log_over_n: return L / t;
            case AuxKindTag::recip_n: return 1.0 / t;
            case AuxKindTag::recip_n_log: return 1.0 / (t * L);
            case AuxKindTag::recip_n_log_r: return kr / (t * std::pow(L, r));
        }
        return 0.0;
    }

    double df(double t) const {
        const double L = std::log(t);
        switch (tag) {
            case AuxKindTag::log_over_n: return (1.0 - L) / (t * t);
            case AuxKindTag::recip_n: return -1.0 / (t * t);
            case AuxKindTag::recip_n_log: return -(L + 1.0) / (t * t * L * L);
            case AuxKindTag::recip_n_log_r:
                return -kr * (L + r) / (t * t * std::pow(L, r + 1));
        }
        return 0.0;
    }
};

template <typename Term>
inline CompensatedSum aux_direct_sum(std::uint64_t n_lo, std::uint64_t n_hi, Term&& term,
                                     const AuxSumOptions& opt) {
    CompensatedSum acc;
    if (n_hi < n_lo) return acc;
    const std::uint64_t count = n_hi - n_lo + 1;
    const std::size_t nblocks = static_cast<std::size_t>((count + opt.block - 1) / opt.block);
    std::vector<CompensatedSum> part(nblocks);
    parallel_for(opt.threads, nblocks, [&](std::size_t b) {
        const std::uint64_t lo = n_lo + opt.block * static_cast<std::uint64_t>(b);
        const std::uint64_t hi = std::min(n_hi, lo + opt.block - 1);
        CompensatedSum a;
        for (std::uint64_t n = lo; n <= hi; ++n) a.add(term(n));
        part[b] = a;
    });
    for (const auto& p : part) acc.merge(p);  // block order fixed by block size
    return acc;
}

}  // namespace detail

inline AuxSumResult aux_sum(AuxSumKind kind, double x, const KTable& k,
                            AuxSumOptions opt = {}) {
    if (!(x >= 3)) throw std::domain_error("aux_sum: requires x >= 3");
    if (kind.tag == AuxKindTag::recip_n_log_r) {
        if (kind.r < 2) throw std::domain_error("aux_sum: requires r >= 2");
        if (k.m() < static_cast<unsigned>(kind.r))
            throw std::domain_error("aux_sum: k table too short");
    }
    if (opt.threads < 1) throw std::invalid_argument("aux_sum: threads must be >= 1");
    if (opt.block < 1024) throw std::invalid_argument("aux_sum: block must be >= 1024");

    const detail::AuxIntegrand g{
        kind.tag, kind.r,
        kind.tag == AuxKindTag::recip_n_log_r ? k.k_double(static_cast<unsigned>(kind.r)) : 1.0};

    const auto n_max = static_cast<std::uint64_t>(std::floor(x));
    const std::uint64_t n_direct = std::min(n_max, opt.direct_cutoff);

    CompensatedSum acc =
        detail::aux_direct_sum(3, n_direct, [&](std::uint64_t n) { return g.f(double(n)); }, opt);

    if (n_max > n_direct) {
        // tail over (n_direct, n_max] between half-integer endpoints; psi
        // vanishes there and the sigma endpoint values are both -1/24
        const double T = static_cast<double>(n_direct) + 0.5;
        const double Yp = static_cast<double>(n_max) + 0.5;
        const double tail_int =
            integrate([&](double t) { return g.f(t); }, T, Yp, {1e-12, 0.0, 1000000}).value;
        acc.add(tail_int);
        acc.add((-1.0 / 24.0) * (g.df(Yp) - g.df(T)));
    }

    const double L = std::log(x);
    AuxSumResult res;
    res.kind = kind;
    res.x = x;
    res.value = acc.value();
    switch (kind.tag) {
        case AuxKindTag::log_over_n:
            res.main_term = 0.5 * L * L;
            res.constant_estimate = res.value - res.main_term;
            break;
        case AuxKindTag::recip_n:
            res.main_term = L;
            res.constant_estimate = res.value - res.main_term;
            break;
        case AuxKindTag::recip_n_log:
            res.main_term = std::log(L);
            res.constant_estimate = res.value - res.main_term;
            break;
        case AuxKindTag::recip_n_log_r: {
            // value = D_r - k_r/((r-1) log^{r-1} x) + o(1); the x-dependent
            // part is the negative drop term
            const double drop = g.kr / ((kind.r - 1) * std::pow(L, kind.r - 1));
            res.constant_estimate = res.value + drop;
            res.main_term = -drop;
            break;
        }
    }
    return res;
}

inline AuxSumResult aux_sum(AuxSumKind kind, double x, AuxSumOptions opt = {}) {
    if (kind.tag == AuxKindTag::recip_n_log_r)
        throw std::domain_error("aux_sum: this kind needs a k table");
    return aux_sum(kind, x, KTable{}, opt);
}

}  // namespace pisum
