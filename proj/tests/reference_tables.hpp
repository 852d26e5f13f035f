#pragma once

// Published reference values, copied verbatim.

#include <array>
#include <vector>

namespace andre::reference {

// |res_{n,m}| for n = 2..10 (rows), m = 2..10 (columns).
inline constexpr std::array<std::array<long, 9>, 9> kLrTable = {{
    {1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 1, 0, 0, 0, 0, 0, 0},
    {2, 7, 6, 1, 0, 0, 0, 0, 0},
    {5, 20, 25, 10, 1, 0, 0, 0, 0},
    {16, 70, 105, 65, 15, 1, 0, 0, 0},
    {61, 287, 490, 385, 140, 21, 1, 0, 0},
    {272, 1356, 2548, 2345, 1120, 266, 28, 1, 0},
    {1385, 7248, 14698, 15204, 8715, 2772, 462, 36, 1},
}};

inline long lr_entry(int n, int m) { return kLrTable[n - 2][m - 2]; }

// Right-to-left minima counts for n = 1..10 (rows), r = 1..10 (columns).
inline constexpr std::array<std::array<long, 10>, 10> kRlTable = {{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 3, 0, 0, 0, 0, 0, 0, 0, 0},
    {5, 10, 1, 0, 0, 0, 0, 0, 0, 0},
    {16, 38, 7, 0, 0, 0, 0, 0, 0, 0},
    {61, 165, 45, 1, 0, 0, 0, 0, 0, 0},
    {272, 812, 288, 13, 0, 0, 0, 0, 0, 0},
    {1385, 4478, 1936, 136, 1, 0, 0, 0, 0, 0},
    {7936, 27408, 13836, 1320, 21, 0, 0, 0, 0, 0},
}};

inline long rl_entry(int n, int r) { return kRlTable[n - 1][r - 1]; }

// Euler numbers e_1..e_12 (e_1 = e_2 = e_3 = 1, e_4 = 2, ...).
inline const std::vector<long> kEuler = {1,    1,    1,     2,     5,     16,
                                              61,   272,  1385,  7936,  50521, 353792};

// Total number of cycles over cycle-up-down permutations of size 1..12.
inline const std::vector<long> kCycleUpDown = {
    1, 3, 10, 38, 165, 812, 4478, 27408, 184529, 1356256, 10809786, 92892928};

// res_5, as listed.
inline const std::vector<std::vector<int>> kRes5 = {
    {3, 2, 5, 1, 4}, {4, 2, 5, 1, 3}, {2, 1, 4, 3, 5}, {3, 2, 4, 1, 5},
    {5, 3, 2, 4, 1}, {3, 2, 5, 4, 1}, {4, 3, 2, 5, 1}, {3, 2, 1, 5, 4},
    {4, 2, 1, 5, 3}, {5, 2, 1, 4, 3}, {4, 3, 2, 1, 5}, {5, 3, 2, 1, 4},
    {5, 4, 2, 1, 3}, {2, 1, 5, 4, 3}, {4, 3, 5, 2, 1}, {5, 4, 3, 2, 1},
};

// A_4, as listed.
inline const std::vector<std::vector<int>> kAndre4 = {
    {2, 3, 1, 4}, {1, 2, 3, 4}, {2, 1, 3, 4}, {1, 3, 2, 4}, {2, 4, 1, 3}};

// The min-path example permutation.
inline const std::vector<int> kPathExample = {11, 7, 6, 10, 9, 5, 8, 2, 1, 13, 4, 14, 3, 12};

}  // namespace andre::reference
