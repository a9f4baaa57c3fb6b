// Published reference values for the alpha = 2, tau = 2 pi truncation
// benchmark (M = 9..16 on the 0.04-step side-4 grid). The table generators
// print these next to the computed values.
#ifndef KERRFORGE_REFERENCE_TABLES_HPP
#define KERRFORGE_REFERENCE_TABLES_HPP

#include <array>

namespace kerrforge::reference {

inline constexpr int kMFirst = 9;
inline constexpr int kMLast = 16;
inline constexpr int kMCount = kMLast - kMFirst + 1;

inline constexpr std::array<double, 3> kIsolineLevels{0.1, 0.3, 0.5};

// Isoline max/min distance ratios about (2, 0), rows follow kIsolineLevels.
inline constexpr std::array<std::array<double, kMCount>, 3> kIsolineRatios{{
    {1.33, 1.20, 1.10, 1.04, 1.01, 1.01, 1.00, 1.00},
    {1.23, 1.10, 1.04, 1.01, 1.00, 1.00, 1.01, 1.01},
    {1.19, 1.08, 1.01, 1.04, 1.04, 1.04, 1.04, 1.04},
}};

inline constexpr std::array<double, 2> kAgreementPrecisions{1e-2, 1e-3};

// Percentage of grid points agreeing at the given precision.
inline constexpr std::array<std::array<double, kMCount>, 2> kAgreementPercent{{
    {64.0, 76.0, 90.0, 99.0, 100.0, 100.0, 100.0, 100.0},
    {26.0, 36.0, 44.0, 53.0, 65.0, 80.0, 97.0, 100.0},
}};

// Peak-relative errors in percent.
inline constexpr std::array<double, kMCount> kAvgErrorPercent{1.67, 0.98, 0.55, 0.30,
                                                              0.15, 0.08, 0.04, 0.02};
inline constexpr std::array<double, kMCount> kMaxErrorPercent{11.30, 6.39, 3.48, 1.84,
                                                              0.94,  0.47, 0.22, 0.11};

// Quoted truncation fidelities at alpha = 2.
inline constexpr double kFidelityM9 = 0.9838;
inline constexpr double kFidelityM10 = 0.9943;
inline constexpr double kFidelityM14 = 0.9999;

}  // namespace kerrforge::reference

#endif
