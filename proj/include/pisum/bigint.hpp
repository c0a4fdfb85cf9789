#pragma once

// Minimal unsigned big integer on uint32 limbs, little endian, value type.
// Just enough for exact integer recurrences: add, subtract (no underflow),
// schoolbook multiply, compare, decimal round trip, lossy to_double.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pisum {

class BigUint {
public:
    BigUint() = default;

    BigUint(std::uint64_t v) {
        while (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
            v >>= 32;
        }
    }

    static BigUint from_decimal(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigUint: empty decimal string");
        BigUint r;
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("BigUint: bad decimal digit");
            r.mul_small_add(10, static_cast<std::uint32_t>(ch - '0'));
        }
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    // -1, 0, +1 for <, ==, >
    int compare(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

    BigUint& operator+=(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t s = carry + limbs_[i];
            if (i < o.limbs_.size()) s += o.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    // requires *this >= o
    BigUint& operator-=(const BigUint& o) {
        if (compare(o) < 0) throw std::logic_error("BigUint: subtraction underflow");
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow;
            if (i < o.limbs_.size()) d -= o.limbs_[i];
            borrow = 0;
            if (d < 0) {
                d += (std::int64_t{1} << 32);
                borrow = 1;
            }
            limbs_[i] = static_cast<std::uint32_t>(d);
        }
        trim();
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return BigUint{};
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + carry +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> tmp = limbs_;
        std::string out;
        while (!tmp.empty()) {
            // divide by 1e9, collecting 9 decimal digits per pass
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            std::string chunk = std::to_string(rem);
            if (!tmp.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        return out;
    }

    // round toward zero; fine for magnitude checks, not for exact work
    double to_double() const {
        double v = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
        return v;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigUint& v) {
        return os << v.to_string();
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    void mul_small_add(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }

    std::vector<std::uint32_t> limbs_;  // little endian, no trailing zero limbs
};

}  // namespace pisum
