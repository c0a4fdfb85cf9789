#pragma once

// Exact integer constants k_1, k_2, ... from the recurrence
//   k_j = j*j! - sum_{i=1}^{j-1} i! * k_{j-i}
// equivalently sum_{i=0}^{j-1} i! * k_{j-i} = j*j! with 0! = 1.
// The values grow almost like j*j! (k_20 already overflows 64 bits), so the
// table is kept in exact big integers and converted to double on demand.

#include <stdexcept>
#include <vector>

#include "pisum/bigint.hpp"

namespace pisum {

struct KTable {
    std::vector<BigUint> values;  // values[j-1] = k_j

    unsigned m() const { return static_cast<unsigned>(values.size()); }

    // r is 1-based
    const BigUint& k(unsigned r) const {
        if (r < 1 || r > values.size())
            throw std::domain_error("KTable: index outside 1..m");
        return values[r - 1];
    }

    double k_double(unsigned r) const { return k(r).to_double(); }
};

inline BigUint factorial(unsigned n) {
    BigUint f{1};
    for (unsigned i = 2; i <= n; ++i) f = f * BigUint{i};
    return f;
}

inline KTable k_constants(unsigned m) {
    if (m < 1) throw std::domain_error("k_constants: m must be >= 1");
    std::vector<BigUint> fact(m + 1);  // memoized i!, i = 0..m
    fact[0] = BigUint{1};
    for (unsigned i = 1; i <= m; ++i) fact[i] = fact[i - 1] * BigUint{i};

    KTable t;
    t.values.reserve(m);
    for (unsigned j = 1; j <= m; ++j) {
        BigUint kj = BigUint{j} * fact[j];  // j*j!
        for (unsigned i = 1; i < j; ++i) kj -= fact[i] * t.values[j - i - 1];
        t.values.push_back(kj);
    }
    return t;
}

// True iff sum_{i=0}^{j-1} i! * k_{j-i} == j*j! holds exactly for every j <= m.
// Works on arbitrary tables, not just ones built by k_constants.
inline bool verify_recurrence(const KTable& t) {
    const unsigned m = t.m();
    std::vector<BigUint> fact(m + 1);
    fact[0] = BigUint{1};
    for (unsigned i = 1; i <= m; ++i) fact[i] = fact[i - 1] * BigUint{i};

    for (unsigned j = 1; j <= m; ++j) {
        BigUint lhs;
        for (unsigned i = 0; i < j; ++i) lhs += fact[i] * t.values[j - i - 1];
        if (lhs != BigUint{j} * fact[j]) return false;
    }
    return true;
}

}  // namespace pisum
