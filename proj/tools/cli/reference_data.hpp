#pragma once

// Published values the verify suites compare against.

#include <array>
#include <cstdint>
#include <vector>

namespace figurate::reference {

/// c(p, l) for p = 1..9, l = 0..p-1.
inline const std::vector<std::vector<std::int64_t>> kCoefficientTable = {
    {1},
    {2, 1},
    {6, 6, 1},
    {24, 36, 14, 1},
    {120, 240, 150, 30, 1},
    {720, 1800, 1560, 540, 62, 1},
    {5040, 15120, 16800, 8400, 1806, 126, 1},
    {40320, 141120, 191520, 126000, 40824, 5796, 254, 1},
    {362880, 1451520, 2328480, 1905120, 834120, 186480, 18150, 510, 1},
};

/// A_5 as "num/den" strings, row-major.
inline const std::array<std::array<const char*, 5>, 5> kFermat5 = {{
    {"1", "0", "0", "0", "0"},
    {"1/2", "1/2", "0", "0", "0"},
    {"1/3", "1/2", "1/6", "0", "0"},
    {"1/4", "11/24", "1/4", "1/24", "0"},
    {"1/5", "5/12", "7/24", "1/12", "1/120"},
}};

inline const std::array<std::array<std::int64_t, 5>, 5> kFermat5Inverse = {{
    {1, 0, 0, 0, 0},
    {-1, 2, 0, 0, 0},
    {1, -6, 6, 0, 0},
    {-1, 14, -36, 24, 0},
    {1, -30, 150, -240, 120},
}};

/// Printed term coefficients of the four expansions of the p = 8 power sum,
/// in printed order (leading term first).
inline const std::vector<std::int64_t> kPowerSum8Eq5 = {40320, -141120, 191520, -126000,
                                                        40824, -5796,   254,    -1};
inline const std::vector<std::int64_t> kPowerSum8Stirling = {40320, 141120, 191520, 126000,
                                                             40824, 5796,   254,    1};
inline const std::vector<std::int64_t> kPowerSum8Eulerian = {1,     247,  4293, 15619,
                                                             15619, 4293, 247,  1};
inline const std::vector<std::int64_t> kPowerSum8Variant = {40320, 181440, 332640, 317520, 166824,
                                                            46620, 6050,   255,    1};

}  // namespace figurate::reference
