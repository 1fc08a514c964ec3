#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "watercells/bigint.hpp"
#include "watercells/composition.hpp"

namespace watercells {

enum class TableMethod { Bruteforce, Recurrence, Series };

std::string to_string(TableMethod method);
TableMethod parse_method(std::string_view name);  // throws std::invalid_argument

/// The irregular triangle w(n,k): compositions of n with parts in {1,2} and
/// exactly k water cells. Row n covers 0 <= k <= max(0, n-4); entries outside
/// that range are zero, since the smallest composition with k water cells is
/// (2,1^k,2) of size k+4.
class WaterTable {
public:
    WaterTable(int max_n, TableMethod method, std::vector<std::vector<BigInt>> rows);

    static int row_width(int n) { return std::max(1, n - 3); }

    int max_n() const { return max_n_; }
    TableMethod method() const { return method_; }
    const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

    /// Zero-extended lookup: valid for 0 <= n <= max_n and k >= 0; entries
    /// above the staircase are zero.
    const BigInt& at(int n, int k) const;

    BigInt row_sum(int n) const;

    bool same_entries(const WaterTable& other) const;

private:
    int max_n_;
    TableMethod method_;
    std::vector<std::vector<BigInt>> rows_;
};

WaterTable build_table(int max_n, TableMethod method);

/// |{c in C_12(n) : water_cells(c) = k}| by direct enumeration.
BigInt w_bruteforce(int n, int k);

/// floor(n^2/4) + 1.
BigInt w0_closed(int n);

enum class W0Variant {
    Nonhomogeneous,  // w(n,0) = w(n-2,0) + n - 1,                n >= 2
    Homogeneous,     // w(n,0) = 2w(n-1,0) - 2w(n-3,0) + w(n-4,0), n >= 4
};

BigInt w0_recurrence(int n, W0Variant variant);

/// w(n,1) = w(n-2,1) + w(n-3,0) - 1 for n >= 5; zero below n = 5.
BigInt w1_recurrence(int n);

/// w(n,k) = w(n-1,k-1) + w(n-2,k) for k >= 2, filled upward from the column
/// heads w(k+4,k) = 1.
BigInt wk_recurrence(int n, int k);

/// d(n) = sum_k w(n-k, k) for 0 <= n <= table.max_n().
std::vector<BigInt> diagonal_sums(const WaterTable& table);

/// d(n) in closed form: 2^m - 1 when n = 2m-1, 3*2^(m-1) - 1 when n = 2m.
/// Requires n >= 1.
BigInt d_closed(int n);

/// Members of W(n,0) equal to (1^n) or whose last two parts are (2,1); the
/// compositions whose last part can grow by one without creating a water
/// cell. Requires n >= 1.
BigInt increasable_count(int n);

std::string to_csv(const WaterTable& table);
std::string to_json(const WaterTable& table);

}  // namespace watercells
