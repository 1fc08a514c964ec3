#pragma once

#include <utility>
#include <vector>

// Pinned expected values for the w(n,k) triangle and the bijection demo
// tables. Everything here was frozen by hand and is treated as ground truth
// by the unit and acceptance suites.
namespace fixtures {

using Pair = std::pair<std::vector<int>, std::vector<int>>;
using PairList = std::vector<Pair>;

/// w(n,k) for 0 <= n <= 14; row n lists k = 0..max(0,n-4).
inline const std::vector<std::vector<long long>> kWaterTriangle = {
    {1},
    {1},
    {2},
    {3},
    {5},
    {7, 1},
    {10, 2, 1},
    {13, 5, 2, 1},
    {17, 8, 6, 2, 1},
    {21, 14, 10, 7, 2, 1},
    {26, 20, 20, 12, 8, 2, 1},
    {31, 30, 30, 27, 14, 9, 2, 1},
    {37, 40, 50, 42, 35, 16, 10, 2, 1},
    {43, 55, 70, 77, 56, 44, 18, 11, 2, 1},
    {50, 70, 105, 112, 112, 72, 54, 20, 12, 2, 1},
};

/// Column prefixes of the triangle (k = 0 starts at n = 0, column k >= 1 at
/// n = k+4); as sequences these are OEIS A033638, A006918, A096338, A177747,
/// A299337 and A178440.
inline const std::vector<std::vector<long long>> kColumnPrefixes = {
    {1, 1, 2, 3, 5, 7, 10, 13, 17, 21, 26, 31, 37, 43, 50},
    {1, 2, 5, 8, 14, 20, 30, 40, 55, 70},
    {1, 2, 6, 10, 20, 30, 50, 70, 105},
    {1, 2, 7, 12, 27, 42, 77, 112},
    {1, 2, 8, 14, 35, 56, 112},
    {1, 2, 9, 16, 44, 72},
};

inline const std::vector<long long> kDiagonalPrefix = {1, 1, 2, 3, 5, 7, 11, 15, 23, 31};

inline const std::vector<long long> kRiordanRowSums = {1, 3, 8, 17, 34, 63, 113, 196, 334};

inline const std::vector<long long> kRiordanDiagSums = {1, 2, 6, 10, 21, 32, 58, 84, 141};

/// |W^j(n,0)| = w(n,0) - ceil(n/2) for n = 1..14; OEIS A004652.
inline const std::vector<long long> kComplementPrefix = {0, 1, 1,  3,  4,  7,  9,
                                                         13, 16, 21, 25, 31, 36, 43};

/// thm1d at n = 6.
inline const PairList kThm1dPairs = {
    {{2, 2, 1, 1}, {2, 2, 1}},
    {{2, 1, 1, 1, 1}, {2, 1, 1, 1}},
    {{1, 2, 2, 1}, {1, 2, 2}},
    {{1, 2, 1, 1, 1}, {1, 2, 1, 1}},
    {{1, 1, 2, 1, 1}, {1, 1, 2, 1}},
    {{1, 1, 1, 2, 1}, {1, 1, 1, 2}},
    {{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}},
    {{2, 2, 2}, {2, 2, 1}},
    {{1, 1, 2, 2}, {1, 1, 2, 1}},
    {{1, 1, 1, 1, 2}, {1, 1, 1, 1, 1}},
    {{2, 1}, {2}},
    {{1, 1, 1}, {1, 1}},
    {{1, 2}, {1, 2, 2}},
    {{1, 1, 1}, {1, 1, 1, 2}},
    {{2, 1}, {2, 1, 1, 1}},
    {{1, 2}, {1, 2, 1, 1}},
};

/// wc1 at n = 8.
inline const PairList kWc1Pairs = {
    {{2, 2, 1, 2, 1}, {2, 2, 1}},
    {{2, 1, 2, 1, 1, 1}, {2, 1, 1, 1}},
    {{1, 2, 2, 1, 2}, {1, 2, 2}},
    {{1, 2, 1, 2, 1, 1}, {1, 2, 1, 1}},
    {{1, 1, 2, 1, 2, 1}, {1, 1, 2, 1}},
    {{1, 1, 1, 2, 1, 2}, {1, 1, 1, 2}},
    {{2, 1, 2, 2, 1}, {2, 1, 2, 1}},
    {{1, 2, 1, 2, 2}, {1, 2, 1, 2}},
};

/// wck at n = 9, k = 3.
inline const PairList kWckPairs = {
    {{2, 2, 1, 1, 1, 2}, {2, 2, 1, 1, 2}},
    {{2, 1, 2, 1, 1, 2}, {2, 1, 2, 1, 2}},
    {{2, 1, 1, 2, 1, 2}, {2, 1, 1, 2, 2}},
    {{2, 1, 1, 1, 2, 1, 1}, {2, 1, 1, 2, 1, 1}},
    {{1, 2, 1, 1, 1, 2, 1}, {1, 2, 1, 1, 2, 1}},
    {{1, 1, 2, 1, 1, 1, 2}, {1, 1, 2, 1, 1, 2}},
    {{2, 1, 1, 1, 2, 2}, {2, 1, 1, 1, 2}},
};

/// diagonal-cie at n = 8; the published table shows all of W(7,1) and
/// W(6,2) but only five members of W(8,0), so these pairs are a subset of
/// the full mapping (d(8) = 23 pairs in total).
inline const PairList kDiagonalCiePairs = {
    {{2, 2, 2, 2}, {1, 2, 2, 2, 1}},
    {{1, 2, 2, 1, 1, 1}, {2, 2, 4}},
    {{1, 1, 2, 1, 1, 1, 1}, {3, 5}},
    {{1, 1, 1, 1, 2, 2}, {5, 2, 1}},
    {{1, 1, 1, 1, 1, 1, 1, 1}, {8}},
    {{2, 2, 1, 2}, {1, 2, 4, 1}},
    {{2, 1, 2, 2}, {1, 4, 2, 1}},
    {{2, 1, 2, 1, 1}, {1, 4, 3}},
    {{1, 2, 1, 2, 1}, {2, 4, 2}},
    {{1, 1, 2, 1, 2}, {3, 4, 1}},
    {{2, 1, 1, 2}, {1, 6, 1}},
};

/// cie-powerof2 at n = 5 (m = 3, two copies of C(3), the last without (3)).
inline const PairList kCiePower5Pairs = {
    {{3}, {5}},
    {{2, 1}, {3, 2}},
    {{1, 2}, {1, 4}},
    {{1, 1, 1}, {1, 2, 2}},
    {{2, 1}, {4, 1}},
    {{1, 2}, {2, 3}},
    {{1, 1, 1}, {2, 2, 1}},
};

/// cie-powerof2 at n = 6 (m = 3, three copies of C(3), the last without (3)).
inline const PairList kCiePower6Pairs = {
    {{3}, {6}},
    {{2, 1}, {4, 2}},
    {{1, 2}, {2, 4}},
    {{1, 1, 1}, {2, 2, 2}},
    {{3}, {5, 1}},
    {{2, 1}, {3, 2, 1}},
    {{1, 2}, {1, 4, 1}},
    {{1, 1, 1}, {1, 2, 2, 1}},
    {{2, 1}, {3, 3}},
    {{1, 2}, {1, 5}},
    {{1, 1, 1}, {1, 2, 3}},
};

}  // namespace fixtures
