#include "watercells/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "watercells/bijections.hpp"
#include "watercells/genfunc.hpp"

namespace watercells {

namespace {

std::string element_string(const Composition& c) {
    return c.to_string();
}

std::string element_string(const TaggedComposition& c) {
    return c.to_string();
}

// Certifies a finite bijection: forward lands in the codomain, is injective
// and surjective, and composes with backward to the identity both ways.
template <typename Element, typename Fwd, typename Bwd>
CheckResult check_bijection(std::string name, std::string params,
                            const std::vector<Element>& domain,
                            const std::vector<Element>& codomain, Fwd&& forward,
                            Bwd&& backward) {
    CheckResult result{std::move(name), std::move(params), true, ""};
    auto fail = [&result](std::string witness) {
        result.pass = false;
        result.witness = std::move(witness);
    };
    try {
        std::set<Element> domain_set(domain.begin(), domain.end());
        std::set<Element> codomain_set(codomain.begin(), codomain.end());
        if (domain_set.size() != domain.size() || codomain_set.size() != codomain.size()) {
            fail("enumerated side contains duplicates");
            return result;
        }
        std::set<Element> image;
        for (const Element& x : domain) {
            Element y = forward(x);
            if (!codomain_set.count(y)) {
                fail("image " + element_string(y) + " of " + element_string(x) +
                     " lies outside the codomain");
                return result;
            }
            if (!image.insert(y).second) {
                fail("not injective at " + element_string(x) + " -> " + element_string(y));
                return result;
            }
            Element back = backward(y);
            if (!(back == x)) {
                fail("backward(forward(" + element_string(x) + ")) = " + element_string(back));
                return result;
            }
        }
        if (image.size() != codomain_set.size()) {
            fail("not surjective: image covers " + std::to_string(image.size()) + " of " +
                 std::to_string(codomain_set.size()) + " codomain elements");
            return result;
        }
        for (const Element& y : codomain) {
            Element x = backward(y);
            if (!domain_set.count(x)) {
                fail("preimage " + element_string(x) + " of " + element_string(y) +
                     " lies outside the domain");
                return result;
            }
            Element forth = forward(x);
            if (!(forth == y)) {
                fail("forward(backward(" + element_string(y) + ")) = " + element_string(forth));
                return result;
            }
        }
    } catch (const std::exception& error) {
        fail(std::string("exception: ") + error.what());
    }
    return result;
}

}  // namespace

bool VerificationReport::overall() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& check) { return check.pass; });
}

CheckResult check_tables_equal(const WaterTable& reference, const WaterTable& candidate) {
    CheckResult result{"table equivalence",
                       to_string(candidate.method()) + " vs " + to_string(reference.method()) +
                           ", max_n=" + std::to_string(reference.max_n()),
                       true,
                       ""};
    if (reference.max_n() != candidate.max_n()) {
        result.pass = false;
        result.witness = "tables cover different ranges";
        return result;
    }
    for (int n = 0; n <= reference.max_n(); ++n) {
        for (int k = 0; k < WaterTable::row_width(n); ++k) {
            if (reference.at(n, k) != candidate.at(n, k)) {
                result.pass = false;
                result.witness = "first mismatch at (n=" + std::to_string(n) +
                                 ", k=" + std::to_string(k) + "): " +
                                 reference.at(n, k).to_string() + " vs " +
                                 candidate.at(n, k).to_string();
                return result;
            }
        }
    }
    return result;
}

CheckResult check_row_sums_fibonacci(const WaterTable& table) {
    CheckResult result{"row sums are Fibonacci",
                       "n <= " + std::to_string(table.max_n()), true, ""};
    for (int n = 0; n <= table.max_n(); ++n) {
        BigInt expected = fibonacci(n + 1);
        BigInt actual = table.row_sum(n);
        if (actual != expected) {
            result.pass = false;
            result.witness = "row " + std::to_string(n) + " sums to " + actual.to_string() +
                             ", expected F_" + std::to_string(n + 1) + " = " +
                             expected.to_string();
            return result;
        }
    }
    return result;
}

CheckResult check_column_fixtures(const WaterTable& table) {
    // Pinned prefixes of columns 0..5; as sequences these are OEIS A033638,
    // A006918, A096338, A177747, A299337 and A178440.
    static const std::vector<std::vector<long long>> kPrefixes = {
        {1, 1, 2, 3, 5, 7, 10, 13, 17, 21, 26, 31, 37, 43, 50},
        {1, 2, 5, 8, 14, 20, 30, 40, 55, 70},
        {1, 2, 6, 10, 20, 30, 50, 70, 105},
        {1, 2, 7, 12, 27, 42, 77, 112},
        {1, 2, 8, 14, 35, 56, 112},
        {1, 2, 9, 16, 44, 72},
    };
    CheckResult result{"column prefixes match pinned fixtures", "k <= 5", true, ""};
    for (int k = 0; k < static_cast<int>(kPrefixes.size()); ++k) {
        int start = k == 0 ? 0 : k + 4;
        const auto& prefix = kPrefixes[static_cast<std::size_t>(k)];
        for (int offset = 0; offset < static_cast<int>(prefix.size()); ++offset) {
            int n = start + offset;
            if (n > table.max_n()) {
                break;
            }
            BigInt expected(prefix[static_cast<std::size_t>(offset)]);
            if (table.at(n, k) != expected) {
                result.pass = false;
                result.witness = "column " + std::to_string(k) + " at n=" + std::to_string(n) +
                                 ": " + table.at(n, k).to_string() + ", expected " +
                                 expected.to_string();
                return result;
            }
        }
    }
    return result;
}

CheckResult check_thm1d(int max_n) {
    for (int n = 4; n <= max_n; ++n) {
        CheckResult result = check_bijection(
            "thm1d bijection", "n=" + std::to_string(n), thm1d_domain(n), thm1d_codomain(n),
            [n](const TaggedComposition& x) { return thm1d_map(x, n, MapDirection::Forward); },
            [n](const TaggedComposition& y) { return thm1d_map(y, n, MapDirection::Backward); });
        if (!result.pass) {
            return result;
        }
    }
    return {"thm1d bijection", "4 <= n <= " + std::to_string(max_n), true, ""};
}

CheckResult check_wc1(int max_n) {
    for (int n = 5; n <= max_n; ++n) {
        CheckResult result = check_bijection(
            "wc1 bijection", "n=" + std::to_string(n), wc1_domain(n), wc1_codomain(n),
            [n](const TaggedComposition& x) { return wc1_map(x, n, MapDirection::Forward); },
            [n](const TaggedComposition& y) { return wc1_map(y, n, MapDirection::Backward); });
        if (!result.pass) {
            return result;
        }
    }
    return {"wc1 bijection", "5 <= n <= " + std::to_string(max_n), true, ""};
}

CheckResult check_wck(int max_n, int max_k) {
    for (int n = 6; n <= max_n; ++n) {
        for (int k = 2; k <= std::min(max_k, n - 4); ++k) {
            CheckResult result = check_bijection(
                "wck bijection", "n=" + std::to_string(n) + ", k=" + std::to_string(k),
                wck_domain(n, k), wck_codomain(n, k),
                [n, k](const TaggedComposition& x) {
                    return wck_map(x, n, k, MapDirection::Forward);
                },
                [n, k](const TaggedComposition& y) {
                    return wck_map(y, n, k, MapDirection::Backward);
                });
            if (!result.pass) {
                return result;
            }
        }
    }
    return {"wck bijection",
            "6 <= n <= " + std::to_string(max_n) + ", 2 <= k <= " + std::to_string(max_k), true,
            ""};
}

CheckResult check_colored_partition(int max_n, int max_k) {
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 0; k <= std::min(max_k, std::max(0, n - 4)); ++k) {
            std::vector<ColoredPartition> partitions = colored_partitions(n, k);
            std::vector<Composition> codomain = water_class(n, k);
            if (k == 0) {
                std::erase_if(codomain, [](const Composition& c) {
                    return std::all_of(c.parts().begin(), c.parts().end(),
                                       [](int p) { return p == 1; });
                });
            }
            CheckResult result{"colored-partition bijection",
                               "n=" + std::to_string(n) + ", k=" + std::to_string(k), true, ""};
            auto fail = [&result](std::string witness) {
                result.pass = false;
                result.witness = std::move(witness);
            };
            try {
                std::set<Composition> codomain_set(codomain.begin(), codomain.end());
                std::set<Composition> image;
                for (const ColoredPartition& p : partitions) {
                    Composition c = colored_partition_map(p, n, k);
                    if (!codomain_set.count(c)) {
                        fail("image " + c.to_string() + " of " + p.to_string() +
                             " lies outside W(n,k)");
                        break;
                    }
                    if (!image.insert(c).second) {
                        fail("not injective at " + p.to_string());
                        break;
                    }
                    if (!(colored_partition_map_back(c, n, k) == p)) {
                        fail("roundtrip failed at " + p.to_string());
                        break;
                    }
                }
                if (result.pass && image.size() != codomain_set.size()) {
                    fail("not surjective: " + std::to_string(image.size()) + " of " +
                         std::to_string(codomain_set.size()));
                }
                if (result.pass) {
                    std::set<ColoredPartition> domain_set(partitions.begin(), partitions.end());
                    for (const Composition& c : codomain) {
                        ColoredPartition p = colored_partition_map_back(c, n, k);
                        if (!domain_set.count(p)) {
                            fail("preimage " + p.to_string() + " of " + c.to_string() +
                                 " lies outside the partition set");
                            break;
                        }
                        if (!(colored_partition_map(p, n, k) == c)) {
                            fail("roundtrip failed at " + c.to_string());
                            break;
                        }
                    }
                }
            } catch (const std::exception& error) {
                fail(std::string("exception: ") + error.what());
            }
            if (!result.pass) {
                return result;
            }
        }
    }
    return {"colored-partition bijection",
            "n <= " + std::to_string(max_n) + ", k <= " + std::to_string(max_k), true, ""};
}

CheckResult check_diagonal_cie(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        CheckResult result = check_bijection(
            "diagonal-cie bijection", "n=" + std::to_string(n), diagonal_cie_domain(n),
            enumerate(FamilyKind::InternalEven, n),
            [](const Composition& x) { return diagonal_cie_map(x, MapDirection::Forward); },
            [](const Composition& c) { return diagonal_cie_map(c, MapDirection::Backward); });
        if (!result.pass) {
            return result;
        }
    }
    return {"diagonal-cie bijection", "1 <= n <= " + std::to_string(max_n), true, ""};
}

CheckResult check_cie_powerof2(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<TaggedComposition> codomain;
        for (auto& c : enumerate(FamilyKind::InternalEven, n)) {
            codomain.push_back({std::move(c), 0});
        }
        CheckResult result = check_bijection(
            "cie-powerof2 bijection", "n=" + std::to_string(n), cie_powerof2_domain(n),
            std::move(codomain),
            [n](const TaggedComposition& x) {
                return cie_powerof2_map(x, n, MapDirection::Forward);
            },
            [n](const TaggedComposition& y) {
                return cie_powerof2_map(y, n, MapDirection::Backward);
            });
        if (!result.pass) {
            return result;
        }
    }
    return {"cie-powerof2 bijection", "1 <= n <= " + std::to_string(max_n), true, ""};
}

CheckResult check_cie_equals_diagonal(int max_n) {
    CheckResult result{"c_ie(n) equals diagonal sums",
                       "n <= " + std::to_string(max_n), true, ""};
    WaterTable table = build_table(max_n, TableMethod::Recurrence);
    std::vector<BigInt> diagonals = diagonal_sums(table);
    for (int n = 0; n <= max_n; ++n) {
        BigInt count = 0;
        CompositionStream stream(FamilyKind::InternalEven, n);
        while (stream.next()) {
            count += 1;
        }
        if (count != diagonals[static_cast<std::size_t>(n)]) {
            result.pass = false;
            result.witness = "n=" + std::to_string(n) + ": c_ie=" + count.to_string() +
                             ", d=" + diagonals[static_cast<std::size_t>(n)].to_string();
            return result;
        }
    }
    return result;
}

CheckResult check_d_closed_form(int max_n) {
    CheckResult result{"diagonal sums closed form",
                       "1 <= n <= " + std::to_string(max_n), true, ""};
    WaterTable table = build_table(max_n, TableMethod::Recurrence);
    std::vector<BigInt> diagonals = diagonal_sums(table);
    for (int n = 1; n <= max_n; ++n) {
        BigInt expected = d_closed(n);
        if (diagonals[static_cast<std::size_t>(n)] != expected) {
            result.pass = false;
            result.witness = "n=" + std::to_string(n) + ": d=" +
                             diagonals[static_cast<std::size_t>(n)].to_string() + ", closed form " +
                             expected.to_string();
            return result;
        }
    }
    return result;
}

CheckResult check_gf_identities() {
    CheckResult result{"generating function identities", "exact cross-multiplication", true, ""};
    RiordanArray array = positive_water_riordan();
    struct Identity {
        const char* name;
        RationalGF lhs;
        RationalGF rhs;
    };
    const Identity identities[] = {
        {"w0 split form vs closed form", w0_split_gf(), column_gf(0)},
        {"row sums vs product form", riordan_row_sums(array), row_sums_product_gf()},
        {"diag sums vs product form", riordan_diag_sums(array), diag_sums_product_gf()},
        {"assembled diagonal gf vs closed form", dgf_assemble(), diagonal_gf()},
        {"fibonacci minus shifted row sums vs column 0", w0_from_fibonacci(), column_gf(0)},
    };
    for (const Identity& identity : identities) {
        if (!rgf_equal(identity.lhs, identity.rhs)) {
            result.pass = false;
            result.witness = identity.name;
            return result;
        }
    }
    // Pin the column-0 series against brute force; this is the oracle that
    // fixes the closed form's numerator signs.
    std::vector<BigInt> series = column_gf(0).series(14);
    for (int n = 0; n <= 14; ++n) {
        if (series[static_cast<std::size_t>(n)] != w_bruteforce(n, 0)) {
            result.pass = false;
            result.witness = "column 0 series disagrees with brute force at n=" +
                             std::to_string(n);
            return result;
        }
    }
    return result;
}

CheckResult check_riordan_consistency(const WaterTable& table) {
    CheckResult result{"riordan array consistency",
                       "order " + std::to_string(table.max_n()), true, ""};
    RiordanArray array = positive_water_riordan();
    int max_i = table.max_n() - 5;
    if (max_i < 0) {
        return result;
    }
    std::vector<std::vector<BigInt>> rows = riordan_rows(array, max_i);
    for (int i = 0; i <= max_i; ++i) {
        for (int j = 0; j <= i; ++j) {
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                table.at(i + 5, j + 1)) {
                result.pass = false;
                result.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") disagrees with w(" + std::to_string(i + 5) + "," +
                                 std::to_string(j + 1) + ")";
                return result;
            }
        }
    }
    std::vector<BigInt> row_sum_series = riordan_row_sums(array).series(max_i);
    std::vector<BigInt> diag_sum_series = riordan_diag_sums(array).series(max_i);
    for (int i = 0; i <= max_i; ++i) {
        BigInt termwise_rows = 0;
        for (int j = 0; j <= i; ++j) {
            termwise_rows += rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        if (termwise_rows != row_sum_series[static_cast<std::size_t>(i)]) {
            result.pass = false;
            result.witness = "row sum at order " + std::to_string(i) + ": termwise " +
                             termwise_rows.to_string() + ", series " +
                             row_sum_series[static_cast<std::size_t>(i)].to_string();
            return result;
        }
        BigInt termwise_diag = 0;
        for (int j = 0; i - j >= j; ++j) {
            termwise_diag += rows[static_cast<std::size_t>(i - j)][static_cast<std::size_t>(j)];
        }
        if (termwise_diag != diag_sum_series[static_cast<std::size_t>(i)]) {
            result.pass = false;
            result.witness = "diagonal sum at order " + std::to_string(i) + ": termwise " +
                             termwise_diag.to_string() + ", series " +
                             diag_sum_series[static_cast<std::size_t>(i)].to_string();
            return result;
        }
    }
    // Each column generating function must reproduce its table column.
    for (int k = 0; k <= table.max_n() - 4; ++k) {
        std::vector<BigInt> column = column_gf(k).series(table.max_n());
        for (int n = 0; n <= table.max_n(); ++n) {
            if (column[static_cast<std::size_t>(n)] != table.at(n, k)) {
                result.pass = false;
                result.witness = "column gf k=" + std::to_string(k) +
                                 " disagrees at n=" + std::to_string(n);
                return result;
            }
        }
    }
    return result;
}

VerificationReport run_verification(int max_n) {
    if (max_n < 6) {
        throw std::invalid_argument("run_verification: max_n must be >= 6");
    }
    VerificationReport report;
    WaterTable brute = build_table(max_n, TableMethod::Bruteforce);
    WaterTable recurrence = build_table(max_n, TableMethod::Recurrence);
    WaterTable series = build_table(max_n, TableMethod::Series);
    report.checks.push_back(check_tables_equal(brute, recurrence));
    report.checks.push_back(check_tables_equal(brute, series));
    report.checks.push_back(check_row_sums_fibonacci(brute));
    report.checks.push_back(check_column_fixtures(brute));
    report.checks.push_back(check_thm1d(max_n));
    report.checks.push_back(check_wc1(max_n));
    report.checks.push_back(check_wck(max_n, std::max(2, max_n - 4)));
    report.checks.push_back(check_colored_partition(max_n, std::max(0, max_n - 4)));
    report.checks.push_back(check_diagonal_cie(max_n));
    report.checks.push_back(check_cie_powerof2(max_n));
    report.checks.push_back(check_cie_equals_diagonal(max_n));
    report.checks.push_back(check_d_closed_form(max_n));
    report.checks.push_back(check_gf_identities());
    report.checks.push_back(check_riordan_consistency(brute));
    return report;
}

std::string render(const VerificationReport& report) {
    std::string out;
    for (const CheckResult& check : report.checks) {
        if (check.pass) {
            out += "ok   " + check.name + " (" + check.params + ")\n";
        } else {
            out += "FAIL " + check.name + " (" + check.params + "): " + check.witness + "\n";
        }
    }
    out += report.overall() ? "all checks passed\n" : "verification failed\n";
    return out;
}

}  // namespace watercells
