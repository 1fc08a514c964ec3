#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "watercells/composition.hpp"

using namespace watercells;

namespace {

Composition comp(std::vector<int> parts) {
    return Composition(std::move(parts));
}

bool weakly_unimodal_12(const Composition& c) {
    // In the {1,2} setting a waterless composition has the shape
    // (1^a, 2^b, 1^c).
    const auto& parts = c.parts();
    std::size_t i = 0;
    while (i < parts.size() && parts[i] == 1) ++i;
    while (i < parts.size() && parts[i] == 2) ++i;
    while (i < parts.size() && parts[i] == 1) ++i;
    return i == parts.size();
}

}  // namespace

TEST_CASE("composition basics") {
    CHECK(comp({3, 1}).total() == 4);
    CHECK(comp({3, 1}).length() == 2);
    CHECK(Composition().empty());
    CHECK(Composition().total() == 0);
    CHECK(comp({2, 1}).to_string() == "(2,1)");
    CHECK(Composition().to_string() == "()");
    CHECK_THROWS_AS(comp({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("enumerate all compositions of 4") {
    auto all = enumerate(FamilyKind::All, 4);
    std::vector<Composition> expected = {
        comp({1, 1, 1, 1}), comp({1, 1, 2}), comp({1, 2, 1}), comp({1, 3}),
        comp({2, 1, 1}),    comp({2, 2}),    comp({3, 1}),    comp({4}),
    };
    CHECK(all == expected);
}

TEST_CASE("family cardinalities") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(BigInt(static_cast<long long>(enumerate(FamilyKind::All, n).size())) ==
              BigInt::pow2(n - 1));
    }
    for (int n = 0; n <= 25; ++n) {
        BigInt count = 0;
        CompositionStream stream(FamilyKind::Parts12, n);
        while (stream.next()) {
            count += 1;
        }
        CHECK(count == fibonacci(n + 1));
    }
    CHECK(enumerate(FamilyKind::Parts12, 4).size() == 5);
}

TEST_CASE("internal-even members of 4 and 5") {
    auto four = enumerate(FamilyKind::InternalEven, 4);
    std::set<Composition> expected4 = {comp({4}), comp({3, 1}), comp({2, 2}), comp({1, 3}),
                                       comp({1, 2, 1})};
    CHECK(std::set<Composition>(four.begin(), four.end()) == expected4);

    auto five = enumerate(FamilyKind::InternalEven, 5);
    std::set<Composition> expected5 = {comp({5}),       comp({4, 1}),    comp({3, 2}),
                                       comp({2, 3}),    comp({2, 2, 1}), comp({1, 4}),
                                       comp({1, 2, 2})};
    CHECK(std::set<Composition>(five.begin(), five.end()) == expected5);
}

TEST_CASE("n = 0 yields exactly the empty composition") {
    for (FamilyKind kind :
         {FamilyKind::All, FamilyKind::Parts12, FamilyKind::InternalEven}) {
        auto members = enumerate(kind, 0);
        REQUIRE(members.size() == 1);
        CHECK(members.front().empty());
    }
}

TEST_CASE("streams are strictly increasing and duplicate-free") {
    for (FamilyKind kind :
         {FamilyKind::All, FamilyKind::Parts12, FamilyKind::InternalEven}) {
        for (int n : {1, 5, 9, 12}) {
            auto members = enumerate(kind, n);
            for (std::size_t i = 1; i < members.size(); ++i) {
                CHECK(members[i - 1] < members[i]);
            }
            for (const auto& c : members) {
                CHECK(c.total() == n);
            }
        }
    }
}

TEST_CASE("water cells examples") {
    CHECK(water_cells(comp({1, 2, 1, 4, 2, 4, 1, 2, 1, 3})) == 8);
    CHECK(water_cells(comp({2, 1, 2})) == 1);
    CHECK(water_cells(comp({2, 1, 1, 2})) == 2);
    CHECK(water_cells(comp({2, 1, 2, 1, 2})) == 2);
    CHECK(water_cells(comp({1, 1, 1, 1})) == 0);
    CHECK(water_cells(comp({7})) == 0);
    CHECK(water_cells(comp({3, 1, 1, 1, 3})) == 6);
    CHECK(water_cells(Composition()) == 0);
}

namespace {

// Independent oracle: classic two-pointer trapped-water scan.
long long trapped_water_two_pointer(const std::vector<int>& height) {
    if (height.size() < 3) {
        return 0;
    }
    std::size_t left = 0;
    std::size_t right = height.size() - 1;
    int left_max = 0;
    int right_max = 0;
    long long total = 0;
    while (left < right) {
        if (height[left] < height[right]) {
            left_max = std::max(left_max, height[left]);
            total += left_max - height[left];
            ++left;
        } else {
            right_max = std::max(right_max, height[right]);
            total += right_max - height[right];
            --right;
        }
    }
    return total;
}

}  // namespace

TEST_CASE("water cells agree with a two-pointer oracle") {
    for (int n = 1; n <= 12; ++n) {
        for (const auto& c : enumerate(FamilyKind::All, n)) {
            CHECK(water_cells(c) == trapped_water_two_pointer(c.parts()));
        }
    }
    CHECK(water_cells(comp({5, 1, 3, 1, 4, 1, 2})) ==
          trapped_water_two_pointer({5, 1, 3, 1, 4, 1, 2}));
}

TEST_CASE("internal-even stream equals filtering all compositions") {
    for (int n = 1; n <= 14; ++n) {
        std::vector<Composition> filtered;
        for (auto& c : enumerate(FamilyKind::All, n)) {
            const auto& parts = c.parts();
            bool internal_even = true;
            for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
                internal_even = internal_even && parts[i] % 2 == 0;
            }
            if (internal_even) {
                filtered.push_back(std::move(c));
            }
        }
        CHECK(enumerate(FamilyKind::InternalEven, n) == filtered);
    }
}

TEST_CASE("water cells invariant under reversal") {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& c : enumerate(FamilyKind::All, n)) {
            std::vector<int> reversed(c.parts().rbegin(), c.parts().rend());
            CHECK(water_cells(c) == water_cells(comp(std::move(reversed))));
        }
    }
}

TEST_CASE("waterless {1,2} compositions are exactly the weakly unimodal ones") {
    for (int n = 1; n <= 20; ++n) {
        CompositionStream stream(FamilyKind::Parts12, n);
        while (auto c = stream.next()) {
            CHECK((water_cells(*c) == 0) == weakly_unimodal_12(*c));
        }
    }
}

TEST_CASE("cut-join encoding") {
    CHECK(to_cut_join(comp({3, 1})).to_string() == "JJC");
    CHECK(to_cut_join(comp({1, 1, 2})).to_string() == "CCJ");
    CHECK(to_cut_join(comp({1, 1, 1, 1})).to_string() == "CCC");
    CHECK(to_cut_join(comp({4})).to_string() == "JJJ");
    CHECK(from_cut_join(CutJoinSequence::from_string("JJC")) == comp({3, 1}));
    CHECK(from_cut_join(CutJoinSequence()) == comp({1}));
    CHECK_THROWS_AS((void)CutJoinSequence::from_string("JXC"), std::invalid_argument);
}

TEST_CASE("decoding then re-encoding any word is the identity") {
    // All binary words up to length 12.
    for (int length = 0; length <= 12; ++length) {
        for (unsigned bits = 0; bits < (1u << length); ++bits) {
            std::vector<CutJoin> symbols;
            for (int i = 0; i < length; ++i) {
                symbols.push_back((bits >> i) & 1 ? CutJoin::Join : CutJoin::Cut);
            }
            CutJoinSequence word(symbols);
            Composition decoded = from_cut_join(word);
            CHECK(decoded.total() == length + 1);
            CHECK(to_cut_join(decoded) == word);
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(conjugate(comp({3, 1})) == comp({1, 1, 2}));
    CHECK(conjugate(comp({1, 1, 1, 1})) == comp({4}));
    CHECK_THROWS_AS((void)conjugate(Composition()), std::invalid_argument);
}

TEST_CASE("conjugation is an involution on C(n)") {
    for (int n = 1; n <= 20; ++n) {
        CompositionStream stream(FamilyKind::All, n);
        while (auto c = stream.next()) {
            Composition conj = conjugate(*c);
            CHECK(conj.total() == n);
            CHECK(conjugate(conj) == *c);
        }
    }
}
