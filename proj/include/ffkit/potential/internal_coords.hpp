//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_POTENTIAL_INTERNAL_COORDS_HPP
#define FFKIT_POTENTIAL_INTERNAL_COORDS_HPP

#include <Eigen/Core>
#include <array>

#include "ffkit/molgraph/molecule.hpp"

namespace ffkit {

/// Value and Cartesian first derivatives (Wilson B vectors) of an internal
/// coordinate over its m atoms.
template <int M>
struct CoordDeriv {
    double value = 0.0;
    std::array<Vec3, M> grad{};
};

/// Value, gradient and exact second derivatives over the 3m Cartesian
/// components, ordered (atom0 x,y,z, atom1 x,y,z, ...).
template <int M>
struct CoordDeriv2 {
    double value = 0.0;
    Eigen::Matrix<double, 3 * M, 1> grad;
    Eigen::Matrix<double, 3 * M, 3 * M> hess;
};

double bond_length(const Vec3& a, const Vec3& b);
double angle_value(const Vec3& a, const Vec3& b, const Vec3& c);

/// Signed dihedral in (-pi, pi]. The atom order is canonicalized internally
/// against its reversal, so (i,j,k,l) and (l,k,j,i) produce bit-identical
/// values.
double dihedral_value(const Vec3& r1, const Vec3& r2, const Vec3& r3, const Vec3& r4);

CoordDeriv<2> bond_deriv(const Vec3& a, const Vec3& b);

/// Throws Error when the angle is within 1e-12 of linear.
CoordDeriv<3> angle_deriv(const Vec3& a, const Vec3& b, const Vec3& c);

/// Throws Error naming the term when either flanking angle has sin < 1e-8.
CoordDeriv<4> dihedral_deriv(const Vec3& r1, const Vec3& r2, const Vec3& r3, const Vec3& r4);

CoordDeriv2<2> bond_deriv2(const Vec3& a, const Vec3& b);
CoordDeriv2<3> angle_deriv2(const Vec3& a, const Vec3& b, const Vec3& c);
CoordDeriv2<4> dihedral_deriv2(const Vec3& r1, const Vec3& r2, const Vec3& r3, const Vec3& r4);

/// Wraps an angle difference into (-pi, pi].
double wrap_angle(double delta);

}  // namespace ffkit

#endif  // FFKIT_POTENTIAL_INTERNAL_COORDS_HPP
