#include "watercells/watertable.hpp"

#include <stdexcept>
#include <utility>

#include "watercells/genfunc.hpp"

namespace watercells {

namespace {
const BigInt kZero = 0;
}

std::string to_string(TableMethod method) {
    switch (method) {
        case TableMethod::Bruteforce: return "bruteforce";
        case TableMethod::Recurrence: return "recurrence";
        case TableMethod::Series: return "series";
    }
    throw std::invalid_argument("to_string: unknown table method");
}

TableMethod parse_method(std::string_view name) {
    if (name == "bruteforce") return TableMethod::Bruteforce;
    if (name == "recurrence") return TableMethod::Recurrence;
    if (name == "series") return TableMethod::Series;
    throw std::invalid_argument("unknown table method: " + std::string(name));
}

WaterTable::WaterTable(int max_n, TableMethod method, std::vector<std::vector<BigInt>> rows)
    : max_n_(max_n), method_(method), rows_(std::move(rows)) {
    if (max_n_ < 0) {
        throw std::invalid_argument("WaterTable: max_n must be >= 0");
    }
    if (static_cast<int>(rows_.size()) != max_n_ + 1) {
        throw std::invalid_argument("WaterTable: expected max_n + 1 rows");
    }
    for (int n = 0; n <= max_n_; ++n) {
        if (static_cast<int>(rows_[static_cast<std::size_t>(n)].size()) != row_width(n)) {
            throw std::invalid_argument("WaterTable: row " + std::to_string(n) +
                                        " has the wrong width");
        }
        for (const BigInt& value : rows_[static_cast<std::size_t>(n)]) {
            if (value.sign() < 0) {
                throw std::invalid_argument("WaterTable: entries are counts, must be >= 0");
            }
        }
    }
}

const BigInt& WaterTable::at(int n, int k) const {
    if (n < 0 || n > max_n_ || k < 0) {
        throw std::out_of_range("WaterTable::at: index out of range");
    }
    const auto& row = rows_[static_cast<std::size_t>(n)];
    if (k >= static_cast<int>(row.size())) {
        return kZero;
    }
    return row[static_cast<std::size_t>(k)];
}

BigInt WaterTable::row_sum(int n) const {
    if (n < 0 || n > max_n_) {
        throw std::out_of_range("WaterTable::row_sum: index out of range");
    }
    BigInt sum = 0;
    for (const BigInt& value : rows_[static_cast<std::size_t>(n)]) {
        sum += value;
    }
    return sum;
}

bool WaterTable::same_entries(const WaterTable& other) const {
    return max_n_ == other.max_n_ && rows_ == other.rows_;
}

namespace {

std::vector<BigInt> bruteforce_row(int n) {
    std::vector<BigInt> row(static_cast<std::size_t>(WaterTable::row_width(n)), BigInt(0));
    CompositionStream stream(FamilyKind::Parts12, n);
    while (auto c = stream.next()) {
        long long k = water_cells(*c);
        if (k >= static_cast<long long>(row.size())) {
            throw std::logic_error("bruteforce_row: water count beyond the staircase");
        }
        row[static_cast<std::size_t>(k)] += 1;
    }
    return row;
}

std::vector<std::vector<BigInt>> bruteforce_rows(int max_n) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        rows.push_back(bruteforce_row(n));
    }
    return rows;
}

std::vector<std::vector<BigInt>> recurrence_rows(int max_n) {
    // Rows n <= 5 are seeded by brute force (at most 20 compositions) and the
    // head of every column is pinned to w(k+4,k) = 1, the lone composition
    // (2,1^k,2). Everything else comes from the three column recurrences with
    // zero extension outside the staircase.
    std::vector<std::vector<BigInt>> rows = bruteforce_rows(std::min(max_n, 5));
    rows.resize(static_cast<std::size_t>(max_n) + 1);
    auto at = [&rows](int n, int k) -> const BigInt& {
        if (n < 0) {
            return kZero;
        }
        const auto& row = rows[static_cast<std::size_t>(n)];
        if (k < 0 || k >= static_cast<int>(row.size())) {
            return kZero;
        }
        return row[static_cast<std::size_t>(k)];
    };
    for (int n = 6; n <= max_n; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(WaterTable::row_width(n)));
        for (int k = 0; k <= n - 4; ++k) {
            if (k == 0) {
                row[0] = at(n - 2, 0) + BigInt(n - 1);
            } else if (k == n - 4) {
                row[static_cast<std::size_t>(k)] = 1;
            } else if (k == 1) {
                row[1] = at(n - 2, 1) + at(n - 3, 0) - BigInt(1);
            } else {
                row[static_cast<std::size_t>(k)] = at(n - 1, k - 1) + at(n - 2, k);
            }
        }
    }
    return rows;
}

std::vector<std::vector<BigInt>> series_rows(int max_n) {
    BivariateSeries series = bivariate_expand(max_n);
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        const IntPolynomial& row_poly = series.row(n);
        int width = WaterTable::row_width(n);
        if (row_poly.degree() >= width) {
            throw std::logic_error("series_rows: coefficient beyond the staircase");
        }
        std::vector<BigInt> row(static_cast<std::size_t>(width), BigInt(0));
        for (int k = 0; k < width; ++k) {
            row[static_cast<std::size_t>(k)] = row_poly.coefficient(k);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

WaterTable build_table(int max_n, TableMethod method) {
    if (max_n < 0) {
        throw std::invalid_argument("build_table: max_n must be >= 0");
    }
    switch (method) {
        case TableMethod::Bruteforce:
            return WaterTable(max_n, method, bruteforce_rows(max_n));
        case TableMethod::Recurrence:
            return WaterTable(max_n, method, recurrence_rows(max_n));
        case TableMethod::Series:
            return WaterTable(max_n, method, series_rows(max_n));
    }
    throw std::invalid_argument("build_table: unknown table method");
}

BigInt w_bruteforce(int n, int k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("w_bruteforce: n and k must be >= 0");
    }
    BigInt count = 0;
    CompositionStream stream(FamilyKind::Parts12, n);
    while (auto c = stream.next()) {
        if (water_cells(*c) == k) {
            count += 1;
        }
    }
    return count;
}

BigInt w0_closed(int n) {
    if (n < 0) {
        throw std::invalid_argument("w0_closed: n must be >= 0");
    }
    BigInt n_big(n);
    return (n_big * n_big) / BigInt(4) + BigInt(1);
}

BigInt w0_recurrence(int n, W0Variant variant) {
    if (n < 0) {
        throw std::invalid_argument("w0_recurrence: n must be >= 0");
    }
    std::vector<BigInt> column;
    column.reserve(static_cast<std::size_t>(n) + 1);
    if (variant == W0Variant::Nonhomogeneous) {
        column = {1, 1};
        for (int m = 2; m <= n; ++m) {
            column.push_back(column[static_cast<std::size_t>(m - 2)] + BigInt(m - 1));
        }
    } else {
        column = {1, 1, 2, 3};
        for (int m = 4; m <= n; ++m) {
            BigInt value = BigInt(2) * column[static_cast<std::size_t>(m - 1)] -
                           BigInt(2) * column[static_cast<std::size_t>(m - 3)] +
                           column[static_cast<std::size_t>(m - 4)];
            column.push_back(std::move(value));
        }
    }
    return column[static_cast<std::size_t>(n)];
}

BigInt w1_recurrence(int n) {
    if (n < 0) {
        throw std::invalid_argument("w1_recurrence: n must be >= 0");
    }
    if (n < 5) {
        return 0;  // the smallest composition with one water cell is (2,1,2)
    }
    std::vector<BigInt> column(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int m = 5; m <= n; ++m) {
        column[static_cast<std::size_t>(m)] =
            column[static_cast<std::size_t>(m - 2)] + w0_closed(m - 3) - BigInt(1);
    }
    return column[static_cast<std::size_t>(n)];
}

BigInt wk_recurrence(int n, int k) {
    if (k < 2) {
        throw std::invalid_argument("wk_recurrence: requires k >= 2");
    }
    if (n < 0) {
        throw std::invalid_argument("wk_recurrence: n must be >= 0");
    }
    if (k > n - 4) {
        return 0;
    }
    // Fill columns 2..k upward; columns 0 and 1 come from their own
    // recurrences, everything outside the staircase is zero.
    std::vector<std::vector<BigInt>> columns(static_cast<std::size_t>(k) + 1);
    for (int col = 2; col <= k; ++col) {
        auto& values = columns[static_cast<std::size_t>(col)];
        values.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
        for (int m = col + 4; m <= n; ++m) {
            BigInt previous_column = col == 2 ? w1_recurrence(m - 1)
                                              : columns[static_cast<std::size_t>(col - 1)]
                                                       [static_cast<std::size_t>(m - 1)];
            values[static_cast<std::size_t>(m)] =
                previous_column + values[static_cast<std::size_t>(m - 2)];
        }
    }
    return columns[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

std::vector<BigInt> diagonal_sums(const WaterTable& table) {
    std::vector<BigInt> sums;
    sums.reserve(static_cast<std::size_t>(table.max_n()) + 1);
    for (int n = 0; n <= table.max_n(); ++n) {
        BigInt d = 0;
        for (int k = 0; n - k >= 0; ++k) {
            d += table.at(n - k, k);
        }
        sums.push_back(std::move(d));
    }
    return sums;
}

BigInt d_closed(int n) {
    if (n < 1) {
        throw std::invalid_argument("d_closed: requires n >= 1");
    }
    if (n % 2 == 1) {
        int m = (n + 1) / 2;
        return BigInt::pow2(m) - BigInt(1);
    }
    int m = n / 2;
    return BigInt(3) * BigInt::pow2(m - 1) - BigInt(1);
}

BigInt increasable_count(int n) {
    if (n < 1) {
        throw std::invalid_argument("increasable_count: requires n >= 1");
    }
    // W(n,0) is exactly the weakly unimodal family (1^a, 2^b, 1^c); walk it
    // and apply the membership test literally.
    BigInt count = 1;  // (1^n)
    for (int b = 1; 2 * b <= n; ++b) {
        for (int a = 0; a + 2 * b <= n; ++a) {
            int c = n - a - 2 * b;
            if (c == 1) {  // last two parts are (2,1)
                count += 1;
            }
        }
    }
    return count;
}

std::string to_csv(const WaterTable& table) {
    std::string out = "n,k,w\n";
    for (int n = 0; n <= table.max_n(); ++n) {
        const auto& row = table.rows()[static_cast<std::size_t>(n)];
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            out += std::to_string(n);
            out += ',';
            out += std::to_string(k);
            out += ',';
            out += row[static_cast<std::size_t>(k)].to_string();
            out += '\n';
        }
    }
    return out;
}

std::string to_json(const WaterTable& table) {
    std::string out = "{\n  \"max_n\": " + std::to_string(table.max_n()) + ",\n  \"rows\": [";
    for (int n = 0; n <= table.max_n(); ++n) {
        out += n == 0 ? "\n    [" : ",\n    [";
        const auto& row = table.rows()[static_cast<std::size_t>(n)];
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) {
                out += ", ";
            }
            out += row[k].to_string();
        }
        out += ']';
    }
    out += "\n  ],\n  \"method\": \"" + to_string(table.method()) + "\"\n}\n";
    return out;
}

}  // namespace watercells
