#include "watercells/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace watercells {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    negative_ = value < 0;
    // Avoid overflow on LLONG_MIN by widening before negation.
    unsigned long long magnitude =
        negative_ ? ~static_cast<unsigned long long>(value) + 1ull
                  : static_cast<unsigned long long>(value);
    while (magnitude != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(magnitude & 0xffffffffull));
        magnitude >>= 32;
    }
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("BigInt::from_string: no digits");
    }
    BigInt result;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw std::invalid_argument("BigInt::from_string: bad digit");
        }
        result.mul_small_add(10, static_cast<std::uint32_t>(text[pos] - '0'));
    }
    result.negative_ = negative;
    result.trim();
    return result;
}

std::string BigInt::to_string() const {
    if (is_zero()) {
        return "0";
    }
    BigInt magnitude = abs();
    std::string digits;
    while (!magnitude.is_zero()) {
        std::uint32_t chunk = magnitude.div_small(1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
    }
    if (negative_) {
        digits.push_back('-');
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::abs() const {
    BigInt result = *this;
    result.negative_ = false;
    return result;
}

BigInt BigInt::operator-() const {
    BigInt result = *this;
    if (!result.is_zero()) {
        result.negative_ = !result.negative_;
    }
    return result;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
    if (limbs_.empty()) {
        negative_ = false;
    }
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) {
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    }
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) {
            return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffull));
        carry = sum >> 32;
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    while (!out.empty() && out.back() == 0) {
        out.pop_back();
    }
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        limbs_ = add_magnitude(limbs_, rhs.limbs_);
    } else {
        int cmp = compare_magnitude(*this, rhs);
        if (cmp == 0) {
            limbs_.clear();
            negative_ = false;
        } else if (cmp > 0) {
            limbs_ = sub_magnitude(limbs_, rhs.limbs_);
        } else {
            limbs_ = sub_magnitude(rhs.limbs_, limbs_);
            negative_ = rhs.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    return *this += -rhs;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (is_zero() || rhs.is_zero()) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    limbs_ = std::move(out);
    negative_ = negative_ != rhs.negative_;
    trim();
    return *this;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) {
        return 0;
    }
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::bit(std::size_t index) const {
    std::size_t limb = index / 32;
    if (limb >= limbs_.size()) {
        return false;
    }
    return (limbs_[limb] >> (index % 32)) & 1u;
}

void BigInt::set_bit(std::size_t index) {
    std::size_t limb = index / 32;
    if (limb >= limbs_.size()) {
        limbs_.resize(limb + 1, 0);
    }
    limbs_[limb] |= 1u << (index % 32);
}

void BigInt::shift_left_one() {
    std::uint32_t carry = 0;
    for (std::uint32_t& limb : limbs_) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) {
        limbs_.push_back(carry);
    }
}

BigInt::DivMod BigInt::divmod(const BigInt& dividend, const BigInt& divisor) {
    if (divisor.is_zero()) {
        throw std::domain_error("BigInt: division by zero");
    }
    BigInt magnitude_divisor = divisor.abs();
    BigInt remainder;
    BigInt quotient;
    for (std::size_t i = dividend.bit_length(); i-- > 0;) {
        remainder.shift_left_one();
        if (dividend.bit(i)) {
            if (remainder.limbs_.empty()) {
                remainder.limbs_.push_back(1);
            } else {
                remainder.limbs_[0] |= 1u;
            }
        }
        if (compare_magnitude(remainder, magnitude_divisor) >= 0) {
            remainder.limbs_ = sub_magnitude(remainder.limbs_, magnitude_divisor.limbs_);
            quotient.set_bit(i);
        }
    }
    quotient.trim();
    remainder.trim();
    quotient.negative_ = !quotient.is_zero() && (dividend.negative_ != divisor.negative_);
    remainder.negative_ = !remainder.is_zero() && dividend.negative_;
    return {std::move(quotient), std::move(remainder)};
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow2(int exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("BigInt::pow2: negative exponent");
    }
    BigInt result;
    result.set_bit(static_cast<std::size_t>(exponent));
    return result;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign() != rhs.sign()) {
        return sign() <=> rhs.sign();
    }
    int cmp = compare_magnitude(*this, rhs);
    if (negative_) {
        cmp = -cmp;
    }
    return cmp <=> 0;
}

long long BigInt::to_long_long() const {
    unsigned long long magnitude = 0;
    if (limbs_.size() > 2) {
        throw std::overflow_error("BigInt::to_long_long: out of range");
    }
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        magnitude = (magnitude << 32) | limbs_[i];
    }
    if (!negative_ && magnitude > 0x7fffffffffffffffull) {
        throw std::overflow_error("BigInt::to_long_long: out of range");
    }
    if (negative_ && magnitude > 0x8000000000000000ull) {
        throw std::overflow_error("BigInt::to_long_long: out of range");
    }
    return negative_ ? -static_cast<long long>(magnitude) : static_cast<long long>(magnitude);
}

std::uint32_t BigInt::div_small(std::uint32_t divisor) {
    std::uint64_t remainder = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (remainder << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        remainder = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(remainder);
}

void BigInt::mul_small_add(std::uint32_t factor, std::uint32_t addend) {
    std::uint64_t carry = addend;
    for (std::uint32_t& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur & 0xffffffffull);
        carry = cur >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffull));
        carry >>= 32;
    }
}

}  // namespace watercells
