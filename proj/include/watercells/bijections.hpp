#pragma once

#include <string>
#include <vector>

#include "watercells/composition.hpp"

namespace watercells {

enum class MapDirection { Forward, Backward };

/// A composition together with the copy of a multiset union it belongs to.
/// Identities such as W(n,0) u 2W(n-3,0) = 2W(n-1,0) u W(n-4,0) join copies
/// of equal sets; the tag keeps those copies apart instead of trusting
/// disjointness.
struct TaggedComposition {
    Composition composition;
    int copy_tag = 0;

    bool operator==(const TaggedComposition& rhs) const = default;
    auto operator<=>(const TaggedComposition& rhs) const = default;

    std::string to_string() const;
};

/// W(n,k): the compositions of n with parts in {1,2} and exactly k water
/// cells, in lexicographic order.
std::vector<Composition> water_class(int n, int k);

/// Member of the increasable subset W^i(n,0): equal to (1^n) or ending in
/// the parts (2,1), so the last part can grow by one without creating a
/// water cell.
bool in_increasable_subset(const Composition& c);

// ---------------------------------------------------------------------------
// W(n,0) u 2W(n-3,0)  <->  2W(n-1,0) u W(n-4,0), for n >= 4.
//
// Domain tags: 0 = W(n,0); 1, 2 = the two copies of W(n-3,0).
// Codomain tags: 0 = the copy of W(n-1,0) reached by appending a part 1;
// 1 = the copy split as W^i(n-1,0) u W^j(n-1,0); 2 = W(n-4,0).
//
// Composed of two sub-bijections: W(n,0) = W(n-1,0) u W^i(n-1,0) by
// decreasing the last part, and 2W(n-3,0) = W^j(n-1,0) u W(n-4,0) by the
// trailing-part surgery of the proof, with (1^(n-3)) in the second copy sent
// to (1^(n-3),2).
// ---------------------------------------------------------------------------
TaggedComposition thm1d_map(const TaggedComposition& x, int n, MapDirection direction);

std::vector<TaggedComposition> thm1d_domain(int n);
std::vector<TaggedComposition> thm1d_codomain(int n);

// ---------------------------------------------------------------------------
// W(n,1)  <->  W(n-2,1) u (W(n-3,0) \ (1^(n-3))), for n >= 5.
//
// Domain tag: 0. Codomain tags: 0 = W(n-2,1); 1 = W(n-3,0) minus (1^(n-3)).
// Case split on the run of 2s after the water cell: a single part 2 drops
// the 1 under the cell and that 2; a longer run drops one 2.
// ---------------------------------------------------------------------------
TaggedComposition wc1_map(const TaggedComposition& x, int n, MapDirection direction);

std::vector<TaggedComposition> wc1_domain(int n);
std::vector<TaggedComposition> wc1_codomain(int n);

// ---------------------------------------------------------------------------
// W(n,k)  <->  W(n-1,k-1) u W(n-2,k), for k >= 2 and n >= 6.
//
// Domain tag: 0. Codomain tags: 0 = W(n-1,k-1); 1 = W(n-2,k). The "last
// water cell" is located by the water-depth scan, never by pattern matching
// on part values.
// ---------------------------------------------------------------------------
TaggedComposition wck_map(const TaggedComposition& x, int n, int k, MapDirection direction);

std::vector<TaggedComposition> wck_domain(int n, int k);
std::vector<TaggedComposition> wck_codomain(int n, int k);

// ---------------------------------------------------------------------------
// Partitions with colored parts  <->  W(n,k).
//
// For k >= 1 a partition of n-k-4 with two colors of parts 1 and k+1 colors
// of parts 2 dresses the skeleton (2,1^k,2). For k = 0 the partition has
// weight n, one color of parts 2 (at least one of them), and covers
// W(n,0) \ (1^n).
// ---------------------------------------------------------------------------
struct ColoredPartition {
    long long ones1 = 0;          // parts 1 in color 1 (leading run of 1s)
    long long ones2 = 0;          // parts 1 in color 2 (trailing run of 1s)
    std::vector<long long> twos;  // twos[i] = parts 2 in color i+1; size k+1

    int k() const { return static_cast<int>(twos.size()) - 1; }
    long long weight() const;

    bool operator==(const ColoredPartition& rhs) const = default;
    auto operator<=>(const ColoredPartition& rhs) const = default;

    /// Renders in the unordered-parts style, e.g. "{2_1,2_3,1_1,1_2}"; for
    /// k = 0 the single color of 2 prints plain.
    std::string to_string() const;
};

Composition colored_partition_map(const ColoredPartition& p, int n, int k);
ColoredPartition colored_partition_map_back(const Composition& c, int n, int k);

/// Every valid ColoredPartition for the given n and k, in a fixed order.
std::vector<ColoredPartition> colored_partitions(int n, int k);

// ---------------------------------------------------------------------------
// Union over k of W(n-k,k)  <->  C_ie(n) (internal parts all even), n >= 1.
//
// Forward: insert a companion part 1 next to each water-carrying 1, then
// conjugate. Backward: conjugate, then halve each internal run of 1s.
// ---------------------------------------------------------------------------
Composition diagonal_cie_map(const Composition& x, MapDirection direction);

std::vector<Composition> diagonal_cie_domain(int n);

// ---------------------------------------------------------------------------
// C_ie(2m-1)  <->  C(m) u (C(m) \ (m))  and
// C_ie(2m)    <->  2C(m) u (C(m) \ (m)).
//
// Domain tags number the copies of C(m) from 0; the last copy excludes the
// single-part composition (m). The C_ie side always carries tag 0.
// ---------------------------------------------------------------------------
TaggedComposition cie_powerof2_map(const TaggedComposition& x, int n, MapDirection direction);

std::vector<TaggedComposition> cie_powerof2_domain(int n);

}  // namespace watercells
