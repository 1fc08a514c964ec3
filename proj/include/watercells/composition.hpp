#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "watercells/bigint.hpp"

namespace watercells {

/// An ordered sequence of positive integer parts. The empty composition is
/// the unique composition of 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Composition& rhs) const { return parts_ == rhs.parts_; }
    auto operator<=>(const Composition& rhs) const { return parts_ <=> rhs.parts_; }

    /// Renders as "(3,1)"; the empty composition renders as "()".
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

enum class CutJoin : std::uint8_t { Cut, Join };

/// The n-1 junctures of a composition of n, each a cut (part boundary) or a
/// join (internal to a part).
class CutJoinSequence {
public:
    CutJoinSequence() = default;
    explicit CutJoinSequence(std::vector<CutJoin> symbols) : symbols_(std::move(symbols)) {}

    static CutJoinSequence from_string(std::string_view text);  // e.g. "JJC"
    std::string to_string() const;

    std::size_t size() const { return symbols_.size(); }
    CutJoin operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<CutJoin>& symbols() const { return symbols_; }

    CutJoinSequence flipped() const;

    bool operator==(const CutJoinSequence& rhs) const = default;

private:
    std::vector<CutJoin> symbols_;
};

CutJoinSequence to_cut_join(const Composition& c);
Composition from_cut_join(const CutJoinSequence& s);

/// MacMahon conjugation: flip every cut to a join and vice versa. An
/// involution on the compositions of n. Throws std::invalid_argument for the
/// empty composition, which has no juncture word.
Composition conjugate(const Composition& c);

/// Water retained above each column when the bargraph is flooded: column i
/// holds max(0, min(Lmax, Rmax) - c_i) cells, where Lmax/Rmax are the highest
/// columns strictly left/right (0 when absent).
std::vector<long long> water_depths(const Composition& c);
long long water_cells(const Composition& c);

enum class FamilyKind {
    All,           // every composition of n
    Parts12,       // parts restricted to {1,2}
    InternalEven,  // parts other than the first and last are even
};

/// Lazily yields the members of a composition family in lexicographic order
/// of their part sequences. For n = 0 the stream yields exactly the empty
/// composition.
class CompositionStream {
public:
    CompositionStream(FamilyKind kind, int n);

    std::optional<Composition> next();

private:
    FamilyKind kind_;
    int n_;
    std::vector<int> parts_;
    int remaining_ = 0;
    bool started_ = false;
    bool done_ = false;

    bool placeable(int part, std::size_t position, int remaining_after) const;
    void descend();
    bool advance();
};

std::vector<Composition> enumerate(FamilyKind kind, int n);

/// F_n with F_0 = 0, F_1 = 1.
BigInt fibonacci(int n);

}  // namespace watercells
