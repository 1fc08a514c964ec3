#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace watercells {

/// Arbitrary-precision signed integer (sign + magnitude, 32-bit limbs).
///
/// Counting sequences in this library grow past 64 bits (Fibonacci numbers
/// do so near n = 93), so every count in the public API is a BigInt.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    static BigInt from_string(std::string_view text);
    std::string to_string() const;

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
    BigInt abs() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

    /// Truncated division: quotient rounds toward zero, remainder takes the
    /// sign of the dividend. Throws std::domain_error on division by zero.
    struct DivMod;
    static DivMod divmod(const BigInt& dividend, const BigInt& divisor);
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow2(int exponent);

    bool operator==(const BigInt& rhs) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    /// Converts when the value fits in long long; throws std::overflow_error
    /// otherwise.
    long long to_long_long() const;

private:
    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zero limbs

    void trim();
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    std::uint32_t div_small(std::uint32_t divisor);  // in place, returns remainder
    void mul_small_add(std::uint32_t factor, std::uint32_t addend);
    std::size_t bit_length() const;
    bool bit(std::size_t index) const;
    void set_bit(std::size_t index);
    void shift_left_one();
};

struct BigInt::DivMod {
    BigInt quotient;
    BigInt remainder;
};

inline BigInt BigInt::operator/(const BigInt& rhs) const {
    return divmod(*this, rhs).quotient;
}

inline BigInt BigInt::operator%(const BigInt& rhs) const {
    return divmod(*this, rhs).remainder;
}

}  // namespace watercells
