//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_COMMON_CONSTANTS_HPP
#define FFKIT_COMMON_CONSTANTS_HPP

namespace ffkit {

inline constexpr const char* kVersion = "0.1.0";

// Coulomb constant in kcal*Angstrom/(mol*e^2).
inline constexpr double kCoulomb = 332.0637128;

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Bond length used for hydrogen caps on cleaved bonds, in Angstrom.
inline constexpr double kCapBondLength = 1.09;

// 1-4 non-bonded scale factors (Amber convention).
inline constexpr double kVdw14Scale = 1.0 / 2.0;
inline constexpr double kCoulomb14Scale = 1.0 / 1.2;

// Pairs closer than this fraction of the covalent-radii sum indicate an
// accidental bond formation during a constrained relaxation.
inline constexpr double kBondChangeFraction = 0.5;

}  // namespace ffkit

#endif  // FFKIT_COMMON_CONSTANTS_HPP
