#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oddmorph {

/// Unsigned arbitrary-precision integer, base 2^32 little-endian. Covers
/// exactly what homomorphism counting needs: add, multiply, compare, decimal
/// formatting. Counts grow like n^k, so fixed-width accumulators would
/// overflow silently and corrupt indistinguishability verdicts.
class BigUint {
public:
    BigUint() = default;
    BigUint(unsigned long long v) { // NOLINT: implicit by design
        while (v) {
            limbs_.push_back(static_cast<uint32_t>(v));
            v >>= 32;
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size())
            limbs_.resize(o.limbs_.size(), 0);
        uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t sum = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<uint32_t>(sum);
            carry = sum >> 32;
        }
        if (carry)
            limbs_.push_back(static_cast<uint32_t>(carry));
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        BigUint out;
        if (a.is_zero() || b.is_zero())
            return out;
        out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = out.limbs_[i + j] +
                               static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                out.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = out.limbs_[k] + carry;
                out.limbs_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        out.trim();
        return out;
    }

    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }

    friend bool operator<(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i])
                return a.limbs_[i] < b.limbs_[i];
        return false;
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        // Repeated divmod by 10^9.
        std::vector<uint32_t> work(limbs_.rbegin(), limbs_.rend()); // big-endian
        std::string out;
        while (!work.empty()) {
            uint64_t rem = 0;
            std::vector<uint32_t> quot;
            for (uint32_t limb : work) {
                uint64_t cur = (rem << 32) | limb;
                uint32_t q = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
                if (!quot.empty() || q != 0)
                    quot.push_back(q);
            }
            std::string chunk = std::to_string(rem);
            if (!quot.empty())
                chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
            work = std::move(quot);
        }
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0)
            limbs_.pop_back();
    }

    std::vector<uint32_t> limbs_;
};

} // namespace oddmorph
