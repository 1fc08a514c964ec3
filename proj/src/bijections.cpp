#include "watercells/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace watercells {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw std::invalid_argument(message);
    }
}

bool parts_in_12(const Composition& c) {
    return std::all_of(c.parts().begin(), c.parts().end(),
                       [](int p) { return p == 1 || p == 2; });
}

bool all_ones(const Composition& c) {
    return std::all_of(c.parts().begin(), c.parts().end(), [](int p) { return p == 1; });
}

void require_water_member(const Composition& c, int n, long long k, const std::string& who) {
    require(parts_in_12(c), who + ": parts must lie in {1,2}");
    require(c.total() == n, who + ": composition must sum to " + std::to_string(n));
    require(water_cells(c) == k,
            who + ": expected exactly " + std::to_string(k) + " water cells");
}

// Indices of the parts that carry water, via the depth scan.
std::vector<int> water_indices(const Composition& c) {
    std::vector<int> indices;
    std::vector<long long> depths = water_depths(c);
    for (int i = 0; i < static_cast<int>(depths.size()); ++i) {
        if (depths[static_cast<std::size_t>(i)] > 0) {
            indices.push_back(i);
        }
    }
    return indices;
}

std::vector<int> erased(const std::vector<int>& parts, int index, int count = 1) {
    std::vector<int> out = parts;
    out.erase(out.begin() + index, out.begin() + index + count);
    return out;
}

std::vector<int> inserted(const std::vector<int>& parts, int index, std::vector<int> values) {
    std::vector<int> out = parts;
    out.insert(out.begin() + index, values.begin(), values.end());
    return out;
}

int count_twos_after(const std::vector<int>& parts, int index) {
    int count = 0;
    for (std::size_t i = static_cast<std::size_t>(index) + 1; i < parts.size(); ++i) {
        if (parts[i] == 2) {
            ++count;
        }
    }
    return count;
}

int last_index_of(const std::vector<int>& parts, int value) {
    for (int i = static_cast<int>(parts.size()); i-- > 0;) {
        if (parts[static_cast<std::size_t>(i)] == value) {
            return i;
        }
    }
    return -1;
}

}  // namespace

std::string TaggedComposition::to_string() const {
    return "[copy " + std::to_string(copy_tag + 1) + "] " + composition.to_string();
}

std::vector<Composition> water_class(int n, int k) {
    std::vector<Composition> out;
    CompositionStream stream(FamilyKind::Parts12, n);
    while (auto c = stream.next()) {
        if (water_cells(*c) == k) {
            out.push_back(std::move(*c));
        }
    }
    return out;
}

bool in_increasable_subset(const Composition& c) {
    if (all_ones(c)) {
        return true;
    }
    const auto& parts = c.parts();
    return parts.size() >= 2 && parts[parts.size() - 2] == 2 && parts.back() == 1;
}

// ---------------------------------------------------------------------------
// thm1d
// ---------------------------------------------------------------------------

TaggedComposition thm1d_map(const TaggedComposition& x, int n, MapDirection direction) {
    require(n >= 4, "thm1d_map: requires n >= 4");
    const auto& parts = x.composition.parts();
    if (direction == MapDirection::Forward) {
        switch (x.copy_tag) {
            case 0: {
                require_water_member(x.composition, n, 0, "thm1d_map");
                require(!parts.empty(), "thm1d_map: W(n,0) member must be nonempty");
                if (parts.back() == 1) {
                    return {Composition(erased(parts, static_cast<int>(parts.size()) - 1)), 0};
                }
                std::vector<int> out = parts;
                out.back() = 1;
                return {Composition(std::move(out)), 1};
            }
            case 1: {
                require_water_member(x.composition, n - 3, 0, "thm1d_map");
                if (!parts.empty() && parts.back() == 2) {
                    std::vector<int> out = parts;
                    out.push_back(2);
                    return {Composition(std::move(out)), 1};
                }
                require(!parts.empty(), "thm1d_map: first copy of W(n-3,0) is empty only at n=3");
                return {Composition(erased(parts, static_cast<int>(parts.size()) - 1)), 2};
            }
            case 2: {
                require_water_member(x.composition, n - 3, 0, "thm1d_map");
                std::vector<int> out = parts;
                if (all_ones(x.composition)) {
                    out.push_back(2);
                } else {
                    out.push_back(1);
                    out.push_back(1);
                }
                return {Composition(std::move(out)), 1};
            }
            default:
                throw std::invalid_argument("thm1d_map: domain tag must be 0, 1 or 2");
        }
    }
    switch (x.copy_tag) {
        case 0: {
            require_water_member(x.composition, n - 1, 0, "thm1d_map");
            std::vector<int> out = parts;
            out.push_back(1);
            return {Composition(std::move(out)), 0};
        }
        case 1: {
            require_water_member(x.composition, n - 1, 0, "thm1d_map");
            if (in_increasable_subset(x.composition)) {
                std::vector<int> out = parts;
                out.back() += 1;
                return {Composition(std::move(out)), 0};
            }
            if (parts.back() == 2) {
                std::vector<int> shortened = erased(parts, static_cast<int>(parts.size()) - 1);
                if (all_ones(Composition(shortened))) {
                    // (1^(n-3),2) returns to (1^(n-3)) in the second copy.
                    return {Composition(std::move(shortened)), 2};
                }
                return {Composition(std::move(shortened)), 1};
            }
            // W^j member ending in (1,1): strip both trailing 1s.
            require(parts.size() >= 2 && parts[parts.size() - 2] == 1 && parts.back() == 1,
                    "thm1d_map: W^j member must end in a 2 or in (1,1)");
            return {Composition(erased(parts, static_cast<int>(parts.size()) - 2, 2)), 2};
        }
        case 2: {
            require_water_member(x.composition, n - 4, 0, "thm1d_map");
            std::vector<int> out = parts;
            out.push_back(1);
            return {Composition(std::move(out)), 1};
        }
        default:
            throw std::invalid_argument("thm1d_map: codomain tag must be 0, 1 or 2");
    }
}

std::vector<TaggedComposition> thm1d_domain(int n) {
    require(n >= 4, "thm1d_domain: requires n >= 4");
    std::vector<TaggedComposition> out;
    for (auto& c : water_class(n, 0)) {
        out.push_back({std::move(c), 0});
    }
    for (int tag : {1, 2}) {
        for (auto& c : water_class(n - 3, 0)) {
            out.push_back({std::move(c), tag});
        }
    }
    return out;
}

std::vector<TaggedComposition> thm1d_codomain(int n) {
    require(n >= 4, "thm1d_codomain: requires n >= 4");
    std::vector<TaggedComposition> out;
    for (int tag : {0, 1}) {
        for (auto& c : water_class(n - 1, 0)) {
            out.push_back({std::move(c), tag});
        }
    }
    for (auto& c : water_class(n - 4, 0)) {
        out.push_back({std::move(c), 2});
    }
    return out;
}

// ---------------------------------------------------------------------------
// wc1
// ---------------------------------------------------------------------------

TaggedComposition wc1_map(const TaggedComposition& x, int n, MapDirection direction) {
    require(n >= 5, "wc1_map: requires n >= 5");
    const auto& parts = x.composition.parts();
    if (direction == MapDirection::Forward) {
        require(x.copy_tag == 0, "wc1_map: domain tag must be 0");
        require_water_member(x.composition, n, 1, "wc1_map");
        int cell = water_indices(x.composition).front();
        if (count_twos_after(parts, cell) == 1) {
            if (parts[static_cast<std::size_t>(cell) + 1] != 2) {
                throw std::logic_error("wc1_map: expected a part 2 after the water cell");
            }
            return {Composition(erased(parts, cell, 2)), 1};
        }
        return {Composition(erased(parts, cell + 1)), 0};
    }
    switch (x.copy_tag) {
        case 0: {
            require_water_member(x.composition, n - 2, 1, "wc1_map");
            int cell = water_indices(x.composition).front();
            return {Composition(inserted(parts, cell + 1, {2})), 0};
        }
        case 1: {
            require_water_member(x.composition, n - 3, 0, "wc1_map");
            require(!all_ones(x.composition),
                    "wc1_map: (1^(n-3)) is excluded from the codomain");
            int last_two = last_index_of(parts, 2);
            return {Composition(inserted(parts, last_two + 1, {1, 2})), 0};
        }
        default:
            throw std::invalid_argument("wc1_map: codomain tag must be 0 or 1");
    }
}

std::vector<TaggedComposition> wc1_domain(int n) {
    require(n >= 5, "wc1_domain: requires n >= 5");
    std::vector<TaggedComposition> out;
    for (auto& c : water_class(n, 1)) {
        out.push_back({std::move(c), 0});
    }
    return out;
}

std::vector<TaggedComposition> wc1_codomain(int n) {
    require(n >= 5, "wc1_codomain: requires n >= 5");
    std::vector<TaggedComposition> out;
    for (auto& c : water_class(n - 2, 1)) {
        out.push_back({std::move(c), 0});
    }
    for (auto& c : water_class(n - 3, 0)) {
        if (!all_ones(c)) {
            out.push_back({std::move(c), 1});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// wck
// ---------------------------------------------------------------------------

TaggedComposition wck_map(const TaggedComposition& x, int n, int k, MapDirection direction) {
    require(k >= 2, "wck_map: requires k >= 2");
    require(n >= 6, "wck_map: requires n >= 6");
    const auto& parts = x.composition.parts();
    if (direction == MapDirection::Forward) {
        require(x.copy_tag == 0, "wck_map: domain tag must be 0");
        require_water_member(x.composition, n, k, "wck_map");
        int last_cell = water_indices(x.composition).back();
        if (count_twos_after(parts, last_cell) == 1) {
            return {Composition(erased(parts, last_cell)), 0};
        }
        if (parts[static_cast<std::size_t>(last_cell) + 1] != 2) {
            throw std::logic_error("wck_map: expected a part 2 after the last water cell");
        }
        return {Composition(erased(parts, last_cell + 1)), 1};
    }
    switch (x.copy_tag) {
        case 0: {
            require_water_member(x.composition, n - 1, k - 1, "wck_map");
            // Insert the new water-carrying 1 directly before the last part 2;
            // it becomes the new last water cell with a single 2 after it.
            int last_two = last_index_of(parts, 2);
            require(last_two >= 0, "wck_map: W(n-1,k-1) member must contain a part 2");
            return {Composition(inserted(parts, last_two, {1})), 0};
        }
        case 1: {
            require_water_member(x.composition, n - 2, k, "wck_map");
            int last_cell = water_indices(x.composition).back();
            return {Composition(inserted(parts, last_cell + 1, {2})), 0};
        }
        default:
            throw std::invalid_argument("wck_map: codomain tag must be 0 or 1");
    }
}

std::vector<TaggedComposition> wck_domain(int n, int k) {
    require(k >= 2 && n >= 6, "wck_domain: requires k >= 2 and n >= 6");
    std::vector<TaggedComposition> out;
    for (auto& c : water_class(n, k)) {
        out.push_back({std::move(c), 0});
    }
    return out;
}

std::vector<TaggedComposition> wck_codomain(int n, int k) {
    require(k >= 2 && n >= 6, "wck_codomain: requires k >= 2 and n >= 6");
    std::vector<TaggedComposition> out;
    for (auto& c : water_class(n - 1, k - 1)) {
        out.push_back({std::move(c), 0});
    }
    for (auto& c : water_class(n - 2, k)) {
        out.push_back({std::move(c), 1});
    }
    return out;
}

// ---------------------------------------------------------------------------
// colored partitions
// ---------------------------------------------------------------------------

long long ColoredPartition::weight() const {
    long long total = ones1 + ones2;
    for (long long t : twos) {
        total += 2 * t;
    }
    return total;
}

std::string ColoredPartition::to_string() const {
    std::string out = "{";
    bool first = true;
    auto append = [&out, &first](const std::string& token) {
        if (!first) {
            out += ',';
        }
        out += token;
        first = false;
    };
    for (std::size_t color = 0; color < twos.size(); ++color) {
        std::string token = twos.size() == 1 ? "2" : "2_" + std::to_string(color + 1);
        for (long long i = 0; i < twos[color]; ++i) {
            append(token);
        }
    }
    for (long long i = 0; i < ones1; ++i) {
        append("1_1");
    }
    for (long long i = 0; i < ones2; ++i) {
        append("1_2");
    }
    out += '}';
    return out;
}

namespace {

void validate_partition(const ColoredPartition& p, int n, int k) {
    require(k >= 0, "colored_partition_map: k must be >= 0");
    require(p.k() == k, "colored_partition_map: partition has the wrong number of 2-colors");
    require(p.ones1 >= 0 && p.ones2 >= 0, "colored_partition_map: negative count");
    for (long long t : p.twos) {
        require(t >= 0, "colored_partition_map: negative count");
    }
    if (k == 0) {
        require(p.twos[0] >= 1, "colored_partition_map: k = 0 requires at least one part 2");
        require(p.weight() == n, "colored_partition_map: weight must equal n");
    } else {
        require(p.weight() == n - (k + 4),
                "colored_partition_map: weight must equal n - (k + 4)");
    }
}

}  // namespace

Composition colored_partition_map(const ColoredPartition& p, int n, int k) {
    validate_partition(p, n, k);
    std::vector<int> parts;
    for (long long i = 0; i < p.ones1; ++i) {
        parts.push_back(1);
    }
    if (k == 0) {
        for (long long i = 0; i < p.twos[0]; ++i) {
            parts.push_back(2);
        }
    } else {
        // Dress the skeleton (2,1^k,2): color 1 extends the first 2, colors
        // 2..k sit before the 2nd..k-th skeleton 1, color k+1 extends the
        // last 2.
        for (long long i = 0; i < 1 + p.twos[0]; ++i) {
            parts.push_back(2);
        }
        for (int j = 1; j <= k; ++j) {
            parts.push_back(1);
            if (j < k) {
                for (long long i = 0; i < p.twos[static_cast<std::size_t>(j)]; ++i) {
                    parts.push_back(2);
                }
            }
        }
        for (long long i = 0; i < 1 + p.twos[static_cast<std::size_t>(k)]; ++i) {
            parts.push_back(2);
        }
    }
    for (long long i = 0; i < p.ones2; ++i) {
        parts.push_back(1);
    }
    Composition result(std::move(parts));
    if (water_cells(result) != k) {
        throw std::logic_error("colored_partition_map: image has the wrong water count");
    }
    return result;
}

ColoredPartition colored_partition_map_back(const Composition& c, int n, int k) {
    require(k >= 0, "colored_partition_map_back: k must be >= 0");
    require_water_member(c, n, k, "colored_partition_map_back");
    const auto& parts = c.parts();
    ColoredPartition p;
    p.twos.assign(static_cast<std::size_t>(k) + 1, 0);
    if (k == 0) {
        require(!all_ones(c), "colored_partition_map_back: (1^n) is excluded from the codomain");
        std::size_t i = 0;
        while (i < parts.size() && parts[i] == 1) {
            ++p.ones1;
            ++i;
        }
        while (i < parts.size() && parts[i] == 2) {
            ++p.twos[0];
            ++i;
        }
        while (i < parts.size() && parts[i] == 1) {
            ++p.ones2;
            ++i;
        }
        if (i != parts.size()) {
            throw std::logic_error("colored_partition_map_back: waterless member not unimodal");
        }
        return p;
    }
    std::vector<int> cells = water_indices(c);
    int first_two = static_cast<int>(std::find(parts.begin(), parts.end(), 2) - parts.begin());
    int last_two = last_index_of(parts, 2);
    p.ones1 = first_two;
    p.ones2 = static_cast<int>(parts.size()) - 1 - last_two;
    p.twos[0] = cells.front() - first_two - 1;
    for (std::size_t j = 1; j < cells.size(); ++j) {
        p.twos[j] = cells[j] - cells[j - 1] - 1;
    }
    p.twos[static_cast<std::size_t>(k)] = last_two - cells.back() - 1;
    return p;
}

std::vector<ColoredPartition> colored_partitions(int n, int k) {
    require(k >= 0, "colored_partitions: k must be >= 0");
    long long weight = k == 0 ? n : n - (k + 4);
    std::vector<ColoredPartition> out;
    if (weight < 0 || (k == 0 && weight < 2)) {
        return out;
    }
    ColoredPartition current;
    current.twos.assign(static_cast<std::size_t>(k) + 1, 0);
    // Walk the color counts in a fixed order: each color of 2, then both
    // colors of 1 (the 1_2 count absorbs whatever weight remains).
    auto recurse = [&](auto&& self, std::size_t color, long long remaining) -> void {
        if (color < current.twos.size()) {
            for (long long count = 0; 2 * count <= remaining; ++count) {
                current.twos[color] = count;
                self(self, color + 1, remaining - 2 * count);
            }
            current.twos[color] = 0;
            return;
        }
        for (long long ones = 0; ones <= remaining; ++ones) {
            current.ones1 = ones;
            current.ones2 = remaining - ones;
            if (k == 0 && current.twos[0] < 1) {
                continue;
            }
            out.push_back(current);
        }
        current.ones1 = 0;
        current.ones2 = 0;
    };
    recurse(recurse, 0, weight);
    return out;
}

// ---------------------------------------------------------------------------
// diagonal <-> internal-even
// ---------------------------------------------------------------------------

namespace {

bool internal_parts_even(const Composition& c) {
    const auto& parts = c.parts();
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
        if (parts[i] % 2 != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

Composition diagonal_cie_map(const Composition& x, MapDirection direction) {
    require(!x.empty(), "diagonal_cie_map: the empty composition has no conjugate");
    if (direction == MapDirection::Forward) {
        require(parts_in_12(x), "diagonal_cie_map: parts must lie in {1,2}");
        std::vector<long long> depths = water_depths(x);
        std::vector<int> doubled;
        for (std::size_t i = 0; i < x.parts().size(); ++i) {
            doubled.push_back(x.parts()[i]);
            if (depths[i] > 0) {
                doubled.push_back(1);  // companion 1 under each water cell
            }
        }
        return conjugate(Composition(std::move(doubled)));
    }
    require(internal_parts_even(x), "diagonal_cie_map: internal parts must be even");
    Composition conj = conjugate(x);
    const auto& parts = conj.parts();
    require(parts_in_12(conj), "diagonal_cie_map: corrupted input, conjugate has a part > 2");
    std::vector<int> halved;
    std::size_t i = 0;
    while (i < parts.size()) {
        if (parts[i] == 2) {
            halved.push_back(2);
            ++i;
            continue;
        }
        std::size_t run_end = i;
        while (run_end < parts.size() && parts[run_end] == 1) {
            ++run_end;
        }
        std::size_t run = run_end - i;
        if (i == 0 || run_end == parts.size()) {
            halved.insert(halved.end(), run, 1);  // boundary run, kept whole
        } else {
            require(run % 2 == 0,
                    "diagonal_cie_map: corrupted input, odd internal run of 1s");
            halved.insert(halved.end(), run / 2, 1);
        }
        i = run_end;
    }
    return Composition(std::move(halved));
}

std::vector<Composition> diagonal_cie_domain(int n) {
    require(n >= 1, "diagonal_cie_domain: requires n >= 1");
    std::vector<Composition> out;
    for (int k = 0; n - k >= 1; ++k) {
        for (auto& c : water_class(n - k, k)) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// internal-even <-> copies of C(m)
// ---------------------------------------------------------------------------

namespace {

std::vector<int> doubled_parts(const Composition& c) {
    std::vector<int> out;
    out.reserve(c.parts().size());
    for (int p : c.parts()) {
        out.push_back(2 * p);
    }
    return out;
}

std::vector<int> halved_parts(const std::vector<int>& parts, const std::string& who) {
    std::vector<int> out;
    out.reserve(parts.size());
    for (int p : parts) {
        require(p % 2 == 0, who + ": expected all parts even at this point");
        out.push_back(p / 2);
    }
    return out;
}

}  // namespace

TaggedComposition cie_powerof2_map(const TaggedComposition& x, int n, MapDirection direction) {
    require(n >= 1, "cie_powerof2_map: requires n >= 1");
    bool odd = n % 2 == 1;
    int m = odd ? (n + 1) / 2 : n / 2;
    int copies = odd ? 2 : 3;
    const auto& parts = x.composition.parts();
    if (direction == MapDirection::Forward) {
        require(x.copy_tag >= 0 && x.copy_tag < copies,
                "cie_powerof2_map: domain tag out of range");
        require(x.composition.total() == m,
                "cie_powerof2_map: domain composition must sum to " + std::to_string(m));
        bool excluded_copy = x.copy_tag == copies - 1;
        require(!(excluded_copy && parts.size() == 1),
                "cie_powerof2_map: (m) is excluded from the last copy");
        std::vector<int> out = doubled_parts(x.composition);
        if (odd) {
            if (x.copy_tag == 0) {
                out.front() -= 1;
            } else {
                out.back() -= 1;
            }
        } else {
            if (x.copy_tag == 1) {
                out.front() -= 1;
                out.push_back(1);
            } else if (x.copy_tag == 2) {
                out.front() -= 1;
                out.back() += 1;
            }
        }
        return {Composition(std::move(out)), 0};
    }
    require(x.copy_tag == 0, "cie_powerof2_map: codomain tag must be 0");
    require(x.composition.total() == n,
            "cie_powerof2_map: codomain composition must sum to " + std::to_string(n));
    require(internal_parts_even(x.composition),
            "cie_powerof2_map: internal parts must be even");
    require(!parts.empty(), "cie_powerof2_map: codomain composition must be nonempty");
    std::vector<int> out = parts;
    if (odd) {
        if (parts.front() % 2 == 1) {
            out.front() += 1;
            return {Composition(halved_parts(out, "cie_powerof2_map")), 0};
        }
        require(parts.back() % 2 == 1,
                "cie_powerof2_map: an odd-n member needs an odd first or last part");
        out.back() += 1;
        return {Composition(halved_parts(out, "cie_powerof2_map")), 1};
    }
    bool first_odd = parts.front() % 2 == 1;
    bool last_odd = parts.back() % 2 == 1;
    if (!first_odd && !last_odd) {
        return {Composition(halved_parts(out, "cie_powerof2_map")), 0};
    }
    require(first_odd && last_odd && parts.size() >= 2,
            "cie_powerof2_map: an even-n member has all parts even or both ends odd");
    if (parts.back() == 1) {
        out.pop_back();
        out.front() += 1;
        return {Composition(halved_parts(out, "cie_powerof2_map")), 1};
    }
    out.front() += 1;
    out.back() -= 1;
    return {Composition(halved_parts(out, "cie_powerof2_map")), 2};
}

std::vector<TaggedComposition> cie_powerof2_domain(int n) {
    require(n >= 1, "cie_powerof2_domain: requires n >= 1");
    bool odd = n % 2 == 1;
    int m = odd ? (n + 1) / 2 : n / 2;
    int copies = odd ? 2 : 3;
    std::vector<TaggedComposition> out;
    std::vector<Composition> base = enumerate(FamilyKind::All, m);
    for (int tag = 0; tag < copies; ++tag) {
        for (const auto& c : base) {
            if (tag == copies - 1 && c.length() == 1) {
                continue;  // the last copy excludes (m)
            }
            out.push_back({c, tag});
        }
    }
    return out;
}

}  // namespace watercells
