#pragma once

#include <string>
#include <vector>

#include "watercells/watertable.hpp"

namespace watercells {

struct CheckResult {
    std::string name;
    std::string params;
    bool pass = true;
    std::string witness;  // first counterexample when pass is false
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool overall() const;
};

// Individual checks. Each stops at the first counterexample and records it.
CheckResult check_tables_equal(const WaterTable& reference, const WaterTable& candidate);
CheckResult check_row_sums_fibonacci(const WaterTable& table);
CheckResult check_column_fixtures(const WaterTable& table);
CheckResult check_thm1d(int max_n);
CheckResult check_wc1(int max_n);
CheckResult check_wck(int max_n, int max_k);
CheckResult check_colored_partition(int max_n, int max_k);
CheckResult check_diagonal_cie(int max_n);
CheckResult check_cie_powerof2(int max_n);
CheckResult check_cie_equals_diagonal(int max_n);
CheckResult check_d_closed_form(int max_n);
CheckResult check_gf_identities();
CheckResult check_riordan_consistency(const WaterTable& table);

/// Runs every check at ranges derived from max_n.
VerificationReport run_verification(int max_n);

std::string render(const VerificationReport& report);

}  // namespace watercells
