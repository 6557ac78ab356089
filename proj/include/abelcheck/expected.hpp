#pragma once

// Target formulas the constructions are checked against, in the polynomial
// text grammar. Restricted odd-chart polynomials use x_1..x_m of an
// (m+1)-variable ring; P^4 and P^8 polynomials use x_0..x_{n-1}.

#include <array>
#include <string_view>

namespace abelcheck::expected {

inline constexpr std::string_view kSexticF6 =
    "-x1^2*x2*x3^3 + x1^3*x3*x4^2 - x2^3*x3^2*x5 + x1*x4^3*x5^2 + x2^2*x4*x5^3 + x1*x2^4*x4"
    " - x2*x3*x4^4 - x1^4*x2*x5 + x3^4*x4*x5 + x1*x3*x5^4 + x1*x2*x3^2*x4^2 - x1^2*x2^2*x3*x5"
    " - x1*x2^2*x4^2*x5 - x1^2*x3*x4*x5^2 + x2*x3^2*x4*x5^2";

inline constexpr std::string_view kSexticSpecialized = "-x1^2*x2*x3^3";

inline constexpr std::array<std::array<std::string_view, 6>, 6> kSMatrix11{{
    {"0", "x1^2", "x2^2", "x3^2", "x4^2", "x5^2"},
    {"-x1^2", "0", "x1*x3", "x2*x4", "x3*x5", "-x4*x5"},
    {"-x2^2", "-x1*x3", "0", "x1*x5", "-x2*x5", "-x3*x4"},
    {"-x3^2", "-x2*x4", "-x1*x5", "0", "-x1*x4", "-x2*x3"},
    {"-x4^2", "-x3*x5", "x2*x5", "x1*x4", "0", "-x1*x2"},
    {"-x5^2", "x4*x5", "x3*x4", "x2*x3", "x1*x2", "0"},
}};

inline constexpr std::array<std::array<std::string_view, 5>, 5> kSMatrix9{{
    {"0", "x1^2", "x2^2", "x3^2", "x4^2"},
    {"-x1^2", "0", "x1*x3", "x2*x4", "-x3*x4"},
    {"-x2^2", "-x1*x3", "0", "-x1*x4", "-x2*x3"},
    {"-x3^2", "-x2*x4", "x1*x4", "0", "-x1*x2"},
    {"-x4^2", "x3*x4", "x2*x3", "x1*x2", "0"},
}};

inline constexpr std::string_view kKleinCubic = "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0";

inline constexpr std::array<std::array<std::string_view, 6>, 6> kKleinMatrix{{
    {"0", "x0", "x2", "x1", "x4", "x3"},
    {"-x0", "0", "x4", "0", "0", "-x2"},
    {"-x2", "-x4", "0", "0", "x1", "0"},
    {"-x1", "0", "0", "0", "-x3", "x0"},
    {"-x4", "0", "-x1", "x3", "0", "0"},
    {"-x3", "x2", "0", "-x0", "0", "0"},
}};

inline constexpr std::array<std::array<std::string_view, 6>, 6> kKleinAdjugate{{
    {"0", "x0*x1", "x2*x3", "x1*x2", "x0*x4", "x3*x4"},
    {"-x0*x1", "0", "x3^2 + x0*x4", "x1*x3", "-x0*x2", "-x1^2 - x2*x3"},
    {"-x2*x3", "-x3^2 - x0*x4", "0", "-x2*x4", "x0^2 + x1*x2", "x0*x3"},
    {"-x1*x2", "-x1*x3", "x2*x4", "0", "-x2^2 - x3*x4", "x0*x1 + x4^2"},
    {"-x0*x4", "x0*x2", "-x0^2 - x1*x2", "x2^2 + x3*x4", "0", "-x1*x4"},
    {"-x3*x4", "x1^2 + x2*x3", "-x0*x3", "-x0*x1 - x4^2", "x1*x4", "0"},
}};

/// Dual P^4 equations in the coordinates x_ab (written "xab").
inline constexpr std::array<std::string_view, 10> kDualP4Equations{
    "x12 - x46", "x13 + x26", "x14 - x35", "x15 - x23", "x16 + x45",
    "x24", "x25", "x34", "x36", "x56"};

inline constexpr std::array<std::string_view, 5> kTheta9{
    "-x1^2*x2*x3 + x2^2*x3*x4 + x1*x3*x4^2",
    "x1*x2^3 - x2*x3^3 + x1*x4^3",
    "-x1^3*x2 + x3^3*x4 + x2*x4^3",
    "x1^2*x2*x3 - x2^2*x3*x4 - x1*x3*x4^2",
    "x1*x3^3 - x1^3*x4 - x2^3*x4",
};

/// The complete-intersection curve of the rank-2 locus at level 9.
inline constexpr std::array<std::string_view, 2> kRank2Cubics{
    "x1^2*x2 - x2^2*x4 - x1*x4^2",
    "x1*x2^2 - x3^3 + x1^2*x4 - x2*x4^2",
};

/// The degenerate point z0 and the base point, in P^8.
inline constexpr std::array<int, 9> kZ0{0, 0, -1, -1, 0, 0, 1, 1, 0};
inline constexpr std::array<int, 9> kBasePoint{1, 0, 0, 1, 0, 0, 1, 0, 0};
inline constexpr std::array<int, 5> kThetaAtZ0{0, 1, 0, 0, 0};

/// The four isolated rank-2 points in P^8: entry (c, k) is c * xi^k with
/// c = 0 meaning the coordinate is zero.
struct RootEntry {
  int coeff;
  int power;
};
inline constexpr std::array<std::array<RootEntry, 9>, 4> kSpecialPoints{{
    {{{0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}}},
    {{{0, 0}, {-1, 0}, {1, 0}, {0, 0}, {-1, 0}, {1, 0}, {0, 0}, {-1, 0}, {1, 0}}},
    {{{0, 0}, {-1, 0}, {1, 3}, {0, 0}, {-1, 6}, {1, 6}, {0, 0}, {-1, 3}, {1, 0}}},
    {{{0, 0}, {-1, 0}, {1, 6}, {0, 0}, {-1, 3}, {1, 3}, {0, 0}, {-1, 6}, {1, 0}}},
}};

/// Pfaffian cubics of the Moore matrix at z0 on 1-based row sets.
inline constexpr std::array<int, 6> kMooreRowsA{1, 2, 3, 5, 6, 7};
inline constexpr std::array<int, 6> kMooreRowsB{1, 2, 3, 4, 6, 8};
inline constexpr std::string_view kMooreCubicA = "-x2*x3*x4 + x4*x7^2 - x3*x7*x8 + x2*x8^2";
inline constexpr std::string_view kMooreCubicB = "-x0*x3*x6 + x4*x6*x8";

inline constexpr std::array<int, 8> kClassSizes{1, 55, 110, 132, 132, 110, 60, 60};

}  // namespace abelcheck::expected
