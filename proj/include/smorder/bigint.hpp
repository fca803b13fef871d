#ifndef SMORDER_BIGINT_HPP
#define SMORDER_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace smorder {

// Unsigned arbitrary-precision integer, little-endian base-2^32 limbs.
// Covers everything the moment kernels need: add, multiply, compare,
// exact decimal printing. No subtraction or division by design; all
// quantities here are counts.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);

    // *this += a * b, without allocating a temporary product.
    void add_mul(const BigUint& a, const BigUint& b);

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const = default;

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // throws if it does not fit

    // Exact base-10 rendering, no separators, "0" for zero.
    std::string to_decimal() const;

    // Nearest double; +inf on overflow. Diagnostics only.
    double to_double() const;

private:
    std::vector<std::uint32_t> limbs_;  // no trailing zero limbs

    void trim();
};

}  // namespace smorder

#endif
