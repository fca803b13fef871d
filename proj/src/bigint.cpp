#include "smorder/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smorder {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

void BigUint::add_mul(const BigUint& a, const BigUint& b) {
    if (a.limbs_.empty() || b.limbs_.empty()) return;
    if (limbs_.size() < a.limbs_.size() + b.limbs_.size())
        limbs_.resize(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = limbs_[i + j] + ai * b.limbs_[j] + carry;
            limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        for (std::size_t j = i + b.limbs_.size(); carry; ++j) {
            if (j == limbs_.size()) limbs_.push_back(0);
            std::uint64_t cur = limbs_[j] + carry;
            limbs_[j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
    }
    trim();
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
    BigUint out;
    out.add_mul(lhs, rhs);
    return out;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value exceeds 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::to_decimal() const {
    if (limbs_.empty()) return "0";
    // repeated divmod by 1e9 on a scratch copy
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string chunk = std::to_string(rem);
        if (work.empty()) {
            out.insert(0, chunk);
        } else {
            out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
        }
    }
    return out;
}

double BigUint::to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        v = v * 4294967296.0 + static_cast<double>(limbs_[i]);
        if (std::isinf(v)) return v;
    }
    return v;
}

}  // namespace smorder
