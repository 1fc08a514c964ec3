#include "watercells/genfunc.hpp"

#include <stdexcept>
#include <utility>

namespace watercells {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
    coefficients_.reserve(coefficients.size());
    for (long long c : coefficients) {
        coefficients_.emplace_back(c);
    }
    trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coefficient) {
    if (degree < 0) {
        throw std::invalid_argument("IntPolynomial::monomial: negative degree");
    }
    std::vector<BigInt> coefficients(static_cast<std::size_t>(degree) + 1, BigInt(0));
    coefficients.back() = std::move(coefficient);
    return IntPolynomial(std::move(coefficients));
}

void IntPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) {
        coefficients_.pop_back();
    }
}

const BigInt& IntPolynomial::coefficient(int exponent) const {
    if (exponent < 0 || exponent >= static_cast<int>(coefficients_.size())) {
        return kZero;
    }
    return coefficients_[static_cast<std::size_t>(exponent)];
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (BigInt& c : out.coefficients_) {
        c = -c;
    }
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coefficients_.size() < rhs.coefficients_.size()) {
        coefficients_.resize(rhs.coefficients_.size(), BigInt(0));
    }
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
        coefficients_[i] += rhs.coefficients_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    return *this += -rhs;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<BigInt> out(coefficients_.size() + rhs.coefficients_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
            out[i + j] += coefficients_[i] * rhs.coefficients_[j];
        }
    }
    coefficients_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial IntPolynomial::shifted(int amount) const {
    if (amount < 0) {
        throw std::invalid_argument("IntPolynomial::shifted: negative shift");
    }
    if (is_zero()) {
        return {};
    }
    std::vector<BigInt> out(static_cast<std::size_t>(amount), BigInt(0));
    out.insert(out.end(), coefficients_.begin(), coefficients_.end());
    return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const BigInt& c : coefficients_) {
        g = BigInt::gcd(g, c);
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) {
        return {};
    }
    BigInt g = content();
    std::vector<BigInt> out;
    out.reserve(coefficients_.size());
    for (const BigInt& c : coefficients_) {
        out.push_back(c / g);
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) {
        throw std::domain_error("IntPolynomial::exact_divide: division by zero");
    }
    if (a.is_zero()) {
        return {};
    }
    if (a.degree() < b.degree()) {
        throw std::domain_error("IntPolynomial::exact_divide: not divisible");
    }
    std::vector<BigInt> remainder = a.coefficients_;
    std::vector<BigInt> quotient(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    const BigInt& lead = b.coefficients_.back();
    for (std::size_t step = quotient.size(); step-- > 0;) {
        const BigInt& top = remainder[step + b.coefficients_.size() - 1];
        if (top.is_zero()) {
            continue;
        }
        auto [q, r] = BigInt::divmod(top, lead);
        if (!r.is_zero()) {
            throw std::domain_error("IntPolynomial::exact_divide: not divisible");
        }
        quotient[step] = q;
        for (std::size_t i = 0; i < b.coefficients_.size(); ++i) {
            remainder[step + i] -= q * b.coefficients_[i];
        }
    }
    for (const BigInt& c : remainder) {
        if (!c.is_zero()) {
            throw std::domain_error("IntPolynomial::exact_divide: not divisible");
        }
    }
    return IntPolynomial(std::move(quotient));
}

namespace {

IntPolynomial positive_leading(IntPolynomial p) {
    if (!p.is_zero() && p.coefficients().back().sign() < 0) {
        return -p;
    }
    return p;
}

// Pseudo-remainder: repeatedly scale by the divisor's leading coefficient so
// every elimination step stays integral.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const IntPolynomial lead = IntPolynomial::monomial(0, b.coefficients().back());
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        IntPolynomial top = IntPolynomial::monomial(shift, a.coefficients().back());
        a = a * lead - b * top;
    }
    return a;
}

}  // namespace

IntPolynomial IntPolynomial::gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) {
        return positive_leading(std::move(b));
    }
    if (b.is_zero()) {
        return positive_leading(std::move(a));
    }
    BigInt shared_content = BigInt::gcd(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b);
        if (!r.is_zero()) {
            r = r.primitive_part();
        }
        a = std::move(b);
        b = std::move(r);
    }
    a = positive_leading(std::move(a));
    return a * IntPolynomial::monomial(0, shared_content);
}

RationalGF::RationalGF(IntPolynomial numerator, IntPolynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_.coefficient(0).is_zero()) {
        throw std::invalid_argument("RationalGF: denominator constant term must be nonzero");
    }
}

RationalGF RationalGF::operator+(const RationalGF& rhs) const {
    return RationalGF(numerator_ * rhs.denominator_ + rhs.numerator_ * denominator_,
                      denominator_ * rhs.denominator_);
}

RationalGF RationalGF::operator-(const RationalGF& rhs) const {
    return RationalGF(numerator_ * rhs.denominator_ - rhs.numerator_ * denominator_,
                      denominator_ * rhs.denominator_);
}

RationalGF RationalGF::operator*(const RationalGF& rhs) const {
    return RationalGF(numerator_ * rhs.numerator_, denominator_ * rhs.denominator_);
}

std::vector<BigInt> RationalGF::series(int order) const {
    if (order < 0) {
        throw std::invalid_argument("RationalGF::series: negative order");
    }
    const BigInt& d0 = denominator_.coefficient(0);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        BigInt value = numerator_.coefficient(n);
        int reach = std::min(n, denominator_.degree());
        for (int j = 1; j <= reach; ++j) {
            value -= denominator_.coefficient(j) * out[static_cast<std::size_t>(n - j)];
        }
        auto [q, r] = BigInt::divmod(value, d0);
        if (!r.is_zero()) {
            throw std::domain_error("RationalGF::series: non-integral coefficient");
        }
        out.push_back(std::move(q));
    }
    return out;
}

RationalGF RationalGF::reduced() const {
    if (numerator_.is_zero()) {
        return RationalGF({}, {1});
    }
    IntPolynomial g = IntPolynomial::gcd(numerator_, denominator_);
    IntPolynomial num = IntPolynomial::exact_divide(numerator_, g);
    IntPolynomial den = IntPolynomial::exact_divide(denominator_, g);
    if (den.coefficient(0).sign() < 0) {
        num = -num;
        den = -den;
    }
    return RationalGF(std::move(num), std::move(den));
}

bool rgf_equal(const RationalGF& f, const RationalGF& g) {
    return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

BivariateSeries::BivariateSeries(std::vector<IntPolynomial> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw std::invalid_argument("BivariateSeries: needs at least order 0");
    }
}

const IntPolynomial& BivariateSeries::row(int n) const {
    if (n < 0 || n > order()) {
        throw std::out_of_range("BivariateSeries::row: index beyond truncation order");
    }
    return rows_[static_cast<std::size_t>(n)];
}

namespace {

// Polynomial in q whose coefficients are polynomials in z.
using QPoly = std::vector<IntPolynomial>;

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

BivariateSeries bivariate_expand(int order) {
    if (order < 0) {
        throw std::invalid_argument("bivariate_expand: negative order");
    }
    const IntPolynomial one({1});
    const IntPolynomial z = IntPolynomial::monomial(1);

    // (1-q)^2 * (1-zq-q^2), the denominator of the positive-water summand.
    QPoly one_minus_q = {one, -one};
    QPoly den = qpoly_mul(qpoly_mul(one_minus_q, one_minus_q), QPoly{one, -z, -one});
    // q^2 (1 - zq).
    QPoly num = {IntPolynomial{}, IntPolynomial{}, one, -z};

    std::vector<IntPolynomial> rows(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        IntPolynomial value = n < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(n)]
                                                               : IntPolynomial{};
        for (int j = 1; j < static_cast<int>(den.size()) && j <= n; ++j) {
            value -= den[static_cast<std::size_t>(j)] * rows[static_cast<std::size_t>(n - j)];
        }
        rows[static_cast<std::size_t>(n)] = std::move(value);
    }
    // The 1/(1-q) summand contributes 1 to the constant (z^0) term of every row.
    for (IntPolynomial& row : rows) {
        row += one;
    }
    return BivariateSeries(std::move(rows));
}

RationalGF fibonacci_gf() {
    return RationalGF({1}, {1, -1, -1});
}

RationalGF column_gf(int k) {
    if (k < 0) {
        throw std::invalid_argument("column_gf: k must be >= 0");
    }
    if (k == 0) {
        return RationalGF({1, -1, 0, 1}, {1, -2, 0, 2, -1});
    }
    IntPolynomial den = IntPolynomial{1, -1} * IntPolynomial{1, -1};
    IntPolynomial one_minus_q2{1, 0, -1};
    for (int i = 0; i <= k; ++i) {
        den *= one_minus_q2;
    }
    return RationalGF(IntPolynomial::monomial(k + 4), std::move(den));
}

RationalGF w0_split_gf() {
    RationalGF all_ones({1}, {1, -1});
    IntPolynomial den = IntPolynomial{1, -1} * IntPolynomial{1, -1} * IntPolynomial{1, 0, -1};
    RationalGF with_twos(IntPolynomial::monomial(2), std::move(den));
    return all_ones + with_twos;
}

RiordanArray::RiordanArray(RationalGF d_gf, RationalGF h_gf)
    : d(std::move(d_gf)), h(std::move(h_gf)) {
    if (h.series(0)[0].is_zero()) {
        throw std::invalid_argument("RiordanArray: h(0) must be nonzero");
    }
}

BigInt riordan_entry(const RiordanArray& array, int i, int j) {
    if (i < 0 || j < 0) {
        throw std::invalid_argument("riordan_entry: indices must be >= 0");
    }
    if (j > i) {
        return 0;
    }
    RationalGF column = array.d;
    RationalGF th(array.h.numerator().shifted(1), array.h.denominator());
    for (int step = 0; step < j; ++step) {
        column = column * th;
    }
    return column.series(i)[static_cast<std::size_t>(i)];
}

std::vector<std::vector<BigInt>> riordan_rows(const RiordanArray& array, int max_i) {
    if (max_i < 0) {
        throw std::invalid_argument("riordan_rows: max_i must be >= 0");
    }
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(max_i) + 1);
    for (int i = 0; i <= max_i; ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i) + 1, BigInt(0));
    }
    RationalGF column = array.d;
    RationalGF th(array.h.numerator().shifted(1), array.h.denominator());
    for (int j = 0; j <= max_i; ++j) {
        std::vector<BigInt> coefficients = column.series(max_i);
        for (int i = j; i <= max_i; ++i) {
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                coefficients[static_cast<std::size_t>(i)];
        }
        if (j < max_i) {
            column = column * th;
        }
    }
    return rows;
}

RationalGF riordan_row_sums(const RiordanArray& array) {
    IntPolynomial den = array.h.denominator() - array.h.numerator().shifted(1);
    return RationalGF(array.d.numerator() * array.h.denominator(),
                      array.d.denominator() * den);
}

RationalGF riordan_diag_sums(const RiordanArray& array) {
    IntPolynomial den = array.h.denominator() - array.h.numerator().shifted(2);
    return RationalGF(array.d.numerator() * array.h.denominator(),
                      array.d.denominator() * den);
}

RiordanArray positive_water_riordan() {
    IntPolynomial one_minus_t2{1, 0, -1};
    IntPolynomial d_den = IntPolynomial{1, -1} * IntPolynomial{1, -1} * one_minus_t2 * one_minus_t2;
    return RiordanArray(RationalGF({1}, std::move(d_den)), RationalGF({1}, one_minus_t2));
}

RationalGF row_sums_product_gf() {
    IntPolynomial den = IntPolynomial{1, -1} * IntPolynomial{1, -1} * IntPolynomial{1, 0, -1} *
                        IntPolynomial{1, -1, -1};
    return RationalGF({1}, std::move(den));
}

RationalGF diag_sums_product_gf() {
    IntPolynomial den = IntPolynomial{1, -1} * IntPolynomial{1, -1} * IntPolynomial{1, -1} *
                        IntPolynomial{1, 1} * IntPolynomial{1, 0, -2};
    return RationalGF({1}, std::move(den));
}

RationalGF diagonal_gf() {
    return RationalGF({1, 0, -1, 1}, {1, -1, -2, 2});
}

RationalGF dgf_assemble() {
    RationalGF tail = riordan_diag_sums(positive_water_riordan());
    RationalGF shifted(tail.numerator().shifted(6), tail.denominator());
    return (column_gf(0) + shifted).reduced();
}

RationalGF w0_from_fibonacci() {
    RationalGF tail = riordan_row_sums(positive_water_riordan());
    RationalGF shifted(tail.numerator().shifted(5), tail.denominator());
    return (fibonacci_gf() - shifted).reduced();
}

}  // namespace watercells
