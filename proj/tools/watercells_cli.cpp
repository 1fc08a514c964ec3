#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "watercells/bijections.hpp"
#include "watercells/composition.hpp"
#include "watercells/genfunc.hpp"
#include "watercells/verify.hpp"
#include "watercells/watertable.hpp"

namespace {

using namespace watercells;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

std::string render_text_table(const WaterTable& table) {
    int columns = WaterTable::row_width(table.max_n());
    std::vector<std::size_t> widths(static_cast<std::size_t>(columns) + 1);
    widths[0] = std::max<std::size_t>(3, std::to_string(table.max_n()).size());
    for (int k = 0; k < columns; ++k) {
        std::size_t width = std::to_string(k).size();
        for (int n = 0; n <= table.max_n(); ++n) {
            if (k < WaterTable::row_width(n)) {
                width = std::max(width, table.at(n, k).to_string().size());
            }
        }
        widths[static_cast<std::size_t>(k) + 1] = width;
    }
    auto pad = [](const std::string& text, std::size_t width) {
        return std::string(width - std::min(width, text.size()), ' ') + text;
    };
    std::string out = pad("n\\k", widths[0]);
    for (int k = 0; k < columns; ++k) {
        out += "  " + pad(std::to_string(k), widths[static_cast<std::size_t>(k) + 1]);
    }
    out += '\n';
    for (int n = 0; n <= table.max_n(); ++n) {
        out += pad(std::to_string(n), widths[0]);
        for (int k = 0; k < WaterTable::row_width(n); ++k) {
            out += "  " + pad(table.at(n, k).to_string(),
                              widths[static_cast<std::size_t>(k) + 1]);
        }
        out += '\n';
    }
    return out;
}

int run_table(int max_n, const std::string& method_name, const std::string& format) {
    WaterTable table = build_table(max_n, parse_method(method_name));
    if (format == "text") {
        std::cout << render_text_table(table);
    } else if (format == "csv") {
        std::cout << to_csv(table);
    } else if (format == "json") {
        std::cout << to_json(table);
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sequence
// ---------------------------------------------------------------------------

struct SequenceTerms {
    std::vector<long long> indices;
    std::vector<BigInt> values;
};

SequenceTerms sequence_terms(const std::string& name, int count) {
    if (count < 1) {
        throw std::invalid_argument("count must be >= 1");
    }
    SequenceTerms terms;
    auto index_from = [&terms, count](int start) {
        for (int i = 0; i < count; ++i) {
            terms.indices.push_back(start + i);
        }
    };
    if (name.rfind("w-column:", 0) == 0) {
        int k = std::stoi(name.substr(9));
        if (k < 0) {
            throw std::invalid_argument("column index must be >= 0");
        }
        int start = k == 0 ? 0 : k + 4;
        index_from(start);
        std::vector<BigInt> series = column_gf(k).series(start + count - 1);
        terms.values.assign(series.begin() + start, series.end());
    } else if (name == "diagonal") {
        index_from(0);
        terms.values = diagonal_sums(build_table(count - 1, TableMethod::Recurrence));
    } else if (name == "row-sums") {
        index_from(0);
        WaterTable table = build_table(count - 1, TableMethod::Recurrence);
        for (int n = 0; n < count; ++n) {
            terms.values.push_back(table.row_sum(n));
        }
    } else if (name == "riordan-row-sums") {
        index_from(0);
        terms.values = riordan_row_sums(positive_water_riordan()).series(count - 1);
    } else if (name == "riordan-diag-sums") {
        index_from(0);
        terms.values = riordan_diag_sums(positive_water_riordan()).series(count - 1);
    } else if (name == "cie") {
        index_from(0);
        for (int n = 0; n < count; ++n) {
            BigInt total = 0;
            CompositionStream stream(FamilyKind::InternalEven, n);
            while (stream.next()) {
                total += 1;
            }
            terms.values.push_back(std::move(total));
        }
    } else if (name == "increasable") {
        index_from(1);
        for (int n = 1; n <= count; ++n) {
            terms.values.push_back(increasable_count(n));
        }
    } else if (name == "w0-complement") {
        index_from(1);
        for (int n = 1; n <= count; ++n) {
            terms.values.push_back(w0_closed(n) - increasable_count(n));
        }
    } else {
        throw std::invalid_argument("unknown sequence: " + name);
    }
    return terms;
}

int run_sequence(const std::string& name, int count, bool b_file) {
    SequenceTerms terms = sequence_terms(name, count);
    for (std::size_t i = 0; i < terms.values.size(); ++i) {
        if (b_file) {
            std::cout << terms.indices[i] << ' ';
        }
        std::cout << terms.values[i].to_string() << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bijection
// ---------------------------------------------------------------------------

void print_pair(const std::string& lhs, const std::string& rhs, const std::string& note) {
    std::cout << lhs << " -> " << rhs;
    if (!note.empty()) {
        std::cout << "   # " << note;
    }
    std::cout << '\n';
}

void demo_thm1d(int n) {
    std::cout << "# thm1d, n=" << n << ": W(n,0) + 2 W(n-3,0) <=> 2 W(n-1,0) + W(n-4,0)\n";
    std::cout << "# section W(" << n << ",0)\n";
    auto note_for = [n](const TaggedComposition& y) {
        switch (y.copy_tag) {
            case 0: return "W(" + std::to_string(n - 1) + ",0) copy 1";
            case 1: return "W(" + std::to_string(n - 1) + ",0) copy 2";
            default: return "W(" + std::to_string(n - 4) + ",0)";
        }
    };
    for (const TaggedComposition& x : thm1d_domain(n)) {
        if (x.copy_tag != 0) {
            continue;
        }
        TaggedComposition y = thm1d_map(x, n, MapDirection::Forward);
        print_pair(x.composition.to_string(), y.composition.to_string(), note_for(y));
    }
    std::cout << "# section 2 W(" << n - 3 << ",0)\n";
    for (const TaggedComposition& x : thm1d_domain(n)) {
        if (x.copy_tag == 0) {
            continue;
        }
        TaggedComposition y = thm1d_map(x, n, MapDirection::Forward);
        print_pair("[copy " + std::to_string(x.copy_tag) + "] " + x.composition.to_string(),
                   y.composition.to_string(), note_for(y));
    }
}

void demo_wc1(int n) {
    std::cout << "# wc1, n=" << n << ": W(n,1) <=> W(n-2,1) + (W(n-3,0) \\ (1^(n-3)))\n";
    for (const TaggedComposition& x : wc1_domain(n)) {
        TaggedComposition y = wc1_map(x, n, MapDirection::Forward);
        std::string note = y.copy_tag == 0 ? "W(" + std::to_string(n - 2) + ",1)"
                                           : "W(" + std::to_string(n - 3) + ",0)";
        print_pair(x.composition.to_string(), y.composition.to_string(), note);
    }
}

void demo_wck(int n, int k) {
    std::cout << "# wck, n=" << n << ", k=" << k
              << ": W(n,k) <=> W(n-1,k-1) + W(n-2,k)\n";
    for (const TaggedComposition& x : wck_domain(n, k)) {
        TaggedComposition y = wck_map(x, n, k, MapDirection::Forward);
        std::string note = y.copy_tag == 0
                               ? "W(" + std::to_string(n - 1) + "," + std::to_string(k - 1) + ")"
                               : "W(" + std::to_string(n - 2) + "," + std::to_string(k) + ")";
        print_pair(x.composition.to_string(), y.composition.to_string(), note);
    }
}

void demo_colored_partition(int n, int k) {
    std::cout << "# colored-partition, n=" << n << ", k=" << k << "\n";
    for (const ColoredPartition& p : colored_partitions(n, k)) {
        Composition c = colored_partition_map(p, n, k);
        print_pair(p.to_string(), c.to_string(), "");
    }
}

void demo_diagonal_cie(int n) {
    std::cout << "# diagonal-cie, n=" << n << ": union of W(n-k,k) <=> C_ie(n)\n";
    for (int k = 0; n - k >= 1; ++k) {
        std::vector<Composition> members = water_class(n - k, k);
        if (members.empty()) {
            continue;
        }
        std::cout << "# section W(" << n - k << "," << k << ")\n";
        for (const Composition& x : members) {
            print_pair(x.to_string(),
                       diagonal_cie_map(x, MapDirection::Forward).to_string(), "");
        }
    }
}

void demo_cie_powerof2(int n) {
    int m = n % 2 == 1 ? (n + 1) / 2 : n / 2;
    int copies = n % 2 == 1 ? 2 : 3;
    std::cout << "# cie-powerof2, n=" << n << ": " << copies << " copies of C(" << m
              << ") minus (m) in the last <=> C_ie(" << n << ")\n";
    int current_tag = -1;
    for (const TaggedComposition& x : cie_powerof2_domain(n)) {
        if (x.copy_tag != current_tag) {
            current_tag = x.copy_tag;
            std::cout << "# section C(" << m << ") copy " << current_tag + 1 << "\n";
        }
        TaggedComposition y = cie_powerof2_map(x, n, MapDirection::Forward);
        print_pair("[copy " + std::to_string(x.copy_tag + 1) + "] " + x.composition.to_string(),
                   y.composition.to_string(), "");
    }
}

int run_bijection(const std::string& name, int n, int k, bool has_k) {
    bool needs_k = name == "wck" || name == "colored-partition";
    if (needs_k && !has_k) {
        throw std::invalid_argument(name + " requires --k");
    }
    if (!needs_k && has_k) {
        throw std::invalid_argument(name + " does not take --k");
    }
    if (name == "thm1d") {
        demo_thm1d(n);
    } else if (name == "wc1") {
        demo_wc1(n);
    } else if (name == "wck") {
        demo_wck(n, k);
    } else if (name == "colored-partition") {
        demo_colored_partition(n, k);
    } else if (name == "diagonal-cie") {
        demo_diagonal_cie(n);
    } else if (name == "cie-powerof2") {
        demo_cie_powerof2(n);
    } else {
        throw std::invalid_argument("unknown bijection: " + name);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Water-cell statistics for compositions with parts 1 and 2"};
    app.require_subcommand(1);

    auto* table_cmd = app.add_subcommand(
        "table", "Print the w(n,k) triangle (bruteforce is exponential in max-n)");
    int table_max_n = 14;
    std::string table_method = "recurrence";
    std::string table_format = "text";
    table_cmd->add_option("--max-n", table_max_n, "Largest n")->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--method", table_method, "bruteforce | recurrence | series");
    table_cmd->add_option("--format", table_format, "text | csv | json");

    auto* verify_cmd =
        app.add_subcommand("verify", "Cross-validate tables, bijections and identities");
    int verify_max_n = 16;
    verify_cmd->add_option("--max-n", verify_max_n, "Range of the sweeps (>= 6)");

    auto* sequence_cmd = app.add_subcommand("sequence", "Emit terms of a named sequence");
    std::string sequence_name;
    int sequence_count = 10;
    bool b_file = false;
    sequence_cmd
        ->add_option("name", sequence_name,
                     "w-column:<k> | diagonal | row-sums | riordan-row-sums | "
                     "riordan-diag-sums | cie | increasable | w0-complement")
        ->required();
    sequence_cmd->add_option("count", sequence_count, "Number of terms")->required();
    sequence_cmd->add_flag("--b-file", b_file, "Prefix each value with its index");

    auto* bijection_cmd = app.add_subcommand("bijection", "Print one bijection as a mapping table");
    std::string bijection_name;
    int bijection_n = 0;
    int bijection_k = 0;
    bijection_cmd
        ->add_option("name", bijection_name,
                     "thm1d | wc1 | wck | colored-partition | diagonal-cie | cie-powerof2")
        ->required();
    auto* n_option = bijection_cmd->add_option("--n", bijection_n, "Size parameter")->required();
    auto* k_option = bijection_cmd->add_option("--k", bijection_k, "Water-cell parameter");
    (void)n_option;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0) {
            return app.exit(error);  // --help
        }
        app.exit(error);
        return kExitUsage;
    }

    try {
        if (table_cmd->parsed()) {
            return run_table(table_max_n, table_method, table_format);
        }
        if (verify_cmd->parsed()) {
            VerificationReport report = run_verification(verify_max_n);
            std::cout << render(report);
            return report.overall() ? 0 : kExitFailure;
        }
        if (sequence_cmd->parsed()) {
            return run_sequence(sequence_name, sequence_count, b_file);
        }
        if (bijection_cmd->parsed()) {
            return run_bijection(bijection_name, bijection_n, bijection_k,
                                 k_option->count() > 0);
        }
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
