#pragma once

#include <initializer_list>
#include <vector>

#include "watercells/bigint.hpp"

namespace watercells {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, kept canonical (no trailing zero coefficients).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> coefficients);
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    static IntPolynomial monomial(int degree, BigInt coefficient = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    const BigInt& coefficient(int exponent) const;
    const std::vector<BigInt>& coefficients() const { return coefficients_; }

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

    /// Multiplies by x^amount.
    IntPolynomial shifted(int amount) const;

    bool operator==(const IntPolynomial& rhs) const = default;

    /// gcd of the coefficients; 0 for the zero polynomial.
    BigInt content() const;
    IntPolynomial primitive_part() const;

    /// Exact quotient; throws std::domain_error when the divisor does not
    /// divide exactly.
    static IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

    /// gcd over the integers, normalized primitive with positive leading
    /// coefficient (content gcd included).
    static IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

private:
    std::vector<BigInt> coefficients_;

    void trim();
};

/// Ratio of two integer polynomials with nonzero denominator constant term,
/// expandable as an exact integer power series.
class RationalGF {
public:
    RationalGF(IntPolynomial numerator, IntPolynomial denominator);

    const IntPolynomial& numerator() const { return numerator_; }
    const IntPolynomial& denominator() const { return denominator_; }

    RationalGF operator+(const RationalGF& rhs) const;
    RationalGF operator-(const RationalGF& rhs) const;
    RationalGF operator*(const RationalGF& rhs) const;

    /// Taylor coefficients 0..order via the linear recurrence induced by the
    /// denominator; throws std::domain_error if any coefficient would be
    /// non-integral.
    std::vector<BigInt> series(int order) const;

    /// Cancels the polynomial gcd and the shared content, then signs the
    /// denominator so its constant term is positive. Canonical.
    RationalGF reduced() const;

private:
    IntPolynomial numerator_;
    IntPolynomial denominator_;
};

/// Exact symbolic equality by cross-multiplication; no reduction required.
bool rgf_equal(const RationalGF& f, const RationalGF& g);

/// Truncated expansion of 1/(1-q) + q^2(1-zq)/((1-q)^2(1-zq-q^2)); the
/// coefficient of q^n z^k is w(n,k).
class BivariateSeries {
public:
    explicit BivariateSeries(std::vector<IntPolynomial> rows);

    int order() const { return static_cast<int>(rows_.size()) - 1; }
    /// Coefficient of q^n as a polynomial in z.
    const IntPolynomial& row(int n) const;
    const BigInt& coefficient(int n, int k) const { return row(n).coefficient(k); }

private:
    std::vector<IntPolynomial> rows_;
};

BivariateSeries bivariate_expand(int order);

/// 1/(1-q-q^2).
RationalGF fibonacci_gf();

/// Column k of the w(n,k) triangle: (1-q+q^3)/(1-2q+2q^3-q^4) for k = 0,
/// q^(k+4)/((1-q)^2 (1-q^2)^(k+1)) for k >= 1.
RationalGF column_gf(int k);

/// 1/(1-q) + q^2/((1-q)^2(1-q^2)), assembled by rational arithmetic: the
/// all-ones composition plus the two-colored-partition count of the other
/// waterless compositions.
RationalGF w0_split_gf();

/// Lower-triangular array described by a pair (d, h): column j has
/// generating function d(t) * (t h(t))^j. Requires h(0) != 0.
struct RiordanArray {
    RationalGF d;
    RationalGF h;

    RiordanArray(RationalGF d_gf, RationalGF h_gf);
};

BigInt riordan_entry(const RiordanArray& array, int i, int j);
std::vector<std::vector<BigInt>> riordan_rows(const RiordanArray& array, int max_i);
RationalGF riordan_row_sums(const RiordanArray& array);   // d / (1 - t h)
RationalGF riordan_diag_sums(const RiordanArray& array);  // d / (1 - t^2 h)

/// (1/((1-t)^2(1-t^2)^2), 1/(1-t^2)): entry(i,j) = w(i+5, j+1), the
/// subtriangle of compositions with a positive number of water cells.
RiordanArray positive_water_riordan();

/// 1/((1-t)^2(1-t^2)(1-t-t^2)), the product form of the row sums of
/// positive_water_riordan(); series begins 1,3,8,17,34,63,113,196,334.
RationalGF row_sums_product_gf();

/// 1/((1-t)^3(1+t)(1-2t^2)), the product form of the diagonal sums of
/// positive_water_riordan(); series begins 1,2,6,10,21,32,58,84,141.
RationalGF diag_sums_product_gf();

/// (1-q^2+q^3)/(1-q-2q^2+2q^3), the closed form of the diagonal-sum
/// generating function sum_n d(n) q^n.
RationalGF diagonal_gf();

/// column_gf(0) + t^6 * riordan_diag_sums(positive_water_riordan()),
/// reduced; equals diagonal_gf(). The t^6 shift aligns the subtriangle's
/// diagonals with d(n), whose first two-summand value is d(6).
RationalGF dgf_assemble();

/// fibonacci_gf() - t^5 * riordan_row_sums(positive_water_riordan()),
/// reduced; recovers column_gf(0) because the triangle's row sums are
/// Fibonacci numbers. The series is pinned against the brute-force column;
/// the check fixes the numerator as 1 - q + q^3 (sum form and product
/// manipulations admit a sign slip that the series test rejects).
RationalGF w0_from_fibonacci();

}  // namespace watercells
