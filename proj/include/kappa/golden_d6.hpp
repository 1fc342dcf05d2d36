// Frozen reference values for the degree-6 scaling and splitting matrices.
// The 10×10 grids below are indexed by the canonical partition order of 6:
//   (1,1,1,1,1,1), (2,1,1,1,1), (3,1,1,1), (2,2,1,1), (4,1,1),
//   (3,2,1), (2,2,2), (5,1), (4,2), (3,3)
// Entries are exact rationals written as "num" or "num/den".  These literals
// are independent of the construction code on purpose: the golden tests and
// the `verify golden6` suite compare freshly computed matrices against them
// entry by entry.
#pragma once

#include <array>

namespace kappa::golden {

inline constexpr int kGoldenDegree = 6;

inline constexpr std::array<const char*, 10> kOrder6 = {
    "[1,1,1,1,1,1]", "[2,1,1,1,1]", "[3,1,1,1]", "[2,2,1,1]", "[4,1,1]",
    "[3,2,1]",       "[2,2,2]",     "[5,1]",     "[4,2]",     "[3,3]",
};

inline constexpr std::array<std::array<const char*, 10>, 10> kX6 = {{
    {"-6", "6", "-6", "-6", "6", "6", "6", "-6", "-6", "-6"},
    {"-6", "5", "-4", "-4", "3", "3", "3", "-2", "-2", "-2"},
    {"-6", "9/2", "-10/3", "-3", "9/4", "11/6", "3/2", "-6/5", "-3/4", "-2/3"},
    {"30", "-20", "12", "12", "-6", "-6", "-6", "2", "2", "2"},
    {"-6", "17/4", "-28/9", "-5/2", "33/16", "49/36", "3/4", "-26/25", "-5/16", "-2/9"},
    {"30", "-18", "10", "9", "-9/2", "-11/3", "-3", "6/5", "3/4", "2/3"},
    {"-120", "60", "-24", "-24", "6", "6", "6", "0", "0", "0"},
    {"-6", "33/8", "-82/27", "-9/4", "129/64", "251/216", "3/8", "-126/125", "-9/64", "-2/27"},
    {"30", "-17", "28/3", "15/2", "-33/8", "-49/18", "-3/2", "26/25", "5/16", "2/9"},
    {"30", "-16", "8", "13/2", "-3", "-2", "-3/2", "2/5", "1/4", "2/9"},
}};

inline constexpr std::array<std::array<const char*, 10>, 10> kY6 = {{
    {"1/6", "1", "3", "1/2", "16", "3", "1/6", "125", "16", "9/2"},
    {"0", "1", "6", "1", "48", "9", "1/2", "500", "64", "18"},
    {"0", "0", "3", "0", "36", "3", "0", "450", "36", "9"},
    {"0", "0", "0", "1/2", "12", "6", "1/2", "300", "60", "18"},
    {"0", "0", "0", "0", "16", "0", "0", "320", "16", "0"},
    {"0", "0", "0", "0", "0", "3", "0", "180", "36", "18"},
    {"0", "0", "0", "0", "0", "0", "1/6", "0", "12", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "125", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "16", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "9/2"},
}};

}  // namespace kappa::golden
