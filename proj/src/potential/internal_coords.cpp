//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/potential/internal_coords.hpp"

#include <Eigen/Geometry>
#include <cmath>

#include "ffkit/common/constants.hpp"
#include "ffkit/common/dual2.hpp"
#include "ffkit/common/error.hpp"

namespace ffkit {

namespace {

// Lexicographic comparison of the reversed atom sequence against the given
// one; reversal-symmetric quantities are evaluated on the smaller ordering so
// (i,j,k,l) and (l,k,j,i) run the exact same floating-point program.
bool reversed_is_less(const Vec3& r1, const Vec3& r2, const Vec3& r3, const Vec3& r4) {
    const Vec3* fwd[4] = {&r1, &r2, &r3, &r4};
    const Vec3* rev[4] = {&r4, &r3, &r2, &r1};
    for (int a = 0; a < 4; ++a) {
        for (int k = 0; k < 3; ++k) {
            double f = (*fwd[a])[k], r = (*rev[a])[k];
            if (r < f) return true;
            if (f < r) return false;
        }
    }
    return false;
}

double dihedral_raw(const Vec3& r1, const Vec3& r2, const Vec3& r3, const Vec3& r4) {
    Vec3 b1 = r2 - r1, b2 = r3 - r2, b3 = r4 - r3;
    Vec3 n1 = b1.cross(b2), n2 = b2.cross(b3);
    Vec3 m = n1.cross(b2.normalized());
    return std::atan2(m.dot(n2), n1.dot(n2));
}

// Small vector algebra over Dual2 scalars.
template <typename T>
using TV3 = std::array<T, 3>;

template <typename T>
TV3<T> tv_sub(const TV3<T>& a, const TV3<T>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
template <typename T>
T tv_dot(const TV3<T>& a, const TV3<T>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
template <typename T>
TV3<T> tv_cross(const TV3<T>& a, const TV3<T>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
template <typename T>
T tv_norm(const TV3<T>& a) {
    return sqrt(tv_dot(a, a));
}

template <int M>
std::array<TV3<Dual2<3 * M>>, M> make_vars(const std::array<const Vec3*, M>& pts) {
    std::array<TV3<Dual2<3 * M>>, M> vars;
    for (int a = 0; a < M; ++a) {
        for (int k = 0; k < 3; ++k) {
            vars[a][k] = Dual2<3 * M>::variable((*pts[a])[k], 3 * a + k);
        }
    }
    return vars;
}

}  // namespace

double wrap_angle(double delta) {
    double d = std::fmod(delta + kPi, 2.0 * kPi);
    if (d <= 0.0) d += 2.0 * kPi;
    return d - kPi;
}

double bond_length(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

double angle_value(const Vec3& a, const Vec3& b, const Vec3& c) {
    Vec3 u = a - b, v = c - b;
    return std::atan2(u.cross(v).norm(), u.dot(v));
}

double dihedral_value(const Vec3& r1, const Vec3& r2, const Vec3& r3, const Vec3& r4) {
    if (reversed_is_less(r1, r2, r3, r4)) return dihedral_raw(r4, r3, r2, r1);
    return dihedral_raw(r1, r2, r3, r4);
}

CoordDeriv<2> bond_deriv(const Vec3& a, const Vec3& b) {
    CoordDeriv<2> d;
    Vec3 diff = a - b;
    d.value = diff.norm();
    if (d.value < 1e-12) throw numeric_error("bond derivative at coincident atoms");
    Vec3 u = diff / d.value;
    d.grad[0] = u;
    d.grad[1] = -u;
    return d;
}

CoordDeriv<3> angle_deriv(const Vec3& a, const Vec3& b, const Vec3& c) {
    CoordDeriv<3> d;
    Vec3 u = a - b, v = c - b;
    double nu = u.norm(), nv = v.norm();
    if (nu < 1e-12 || nv < 1e-12) throw numeric_error("angle derivative at coincident atoms");
    Vec3 uh = u / nu, vh = v / nv;
    double cos_t = uh.dot(vh);
    double sin_t = uh.cross(vh).norm();
    d.value = std::atan2(sin_t, cos_t);
    if (sin_t < 1e-12) throw numeric_error("angle derivative at a linear angle");
    d.grad[0] = (cos_t * uh - vh) / (nu * sin_t);
    d.grad[2] = (cos_t * vh - uh) / (nv * sin_t);
    d.grad[1] = -(d.grad[0] + d.grad[2]);
    return d;
}

CoordDeriv<4> dihedral_deriv(const Vec3& r1, const Vec3& r2, const Vec3& r3, const Vec3& r4) {
    bool rev = reversed_is_less(r1, r2, r3, r4);
    const Vec3& p1 = rev ? r4 : r1;
    const Vec3& p2 = rev ? r3 : r2;
    const Vec3& p3 = rev ? r2 : r3;
    const Vec3& p4 = rev ? r1 : r4;

    Vec3 b1 = p2 - p1, b2 = p3 - p2, b3 = p4 - p3;
    Vec3 n1 = b1.cross(b2), n2 = b2.cross(b3);
    double nb2 = b2.norm();
    double n1sq = n1.squaredNorm(), n2sq = n2.squaredNorm();
    // sin of the flanking angles; singular geometry makes the torsion undefined.
    if (n1sq < 1e-16 * b1.squaredNorm() * b2.squaredNorm() ||
        n2sq < 1e-16 * b2.squaredNorm() * b3.squaredNorm()) {
        throw numeric_error("dihedral derivative at a near-linear flanking angle");
    }

    CoordDeriv<4> d;
    Vec3 m = n1.cross(b2 / nb2);
    d.value = std::atan2(m.dot(n2), n1.dot(n2));

    double c1 = b1.dot(b2) / (n1sq * nb2);
    double c3 = b3.dot(b2) / (n2sq * nb2);
    Vec3 g1 = (nb2 / n1sq) * n1;
    Vec3 g4 = -(nb2 / n2sq) * n2;
    Vec3 g2 = -g1 - c1 * n1 - c3 * n2;
    Vec3 g3 = -g4 + c1 * n1 + c3 * n2;

    if (!rev) {
        d.grad = {g1, g2, g3, g4};
    } else {
        d.grad = {g4, g3, g2, g1};
    }
    return d;
}

CoordDeriv2<2> bond_deriv2(const Vec3& a, const Vec3& b) {
    auto vars = make_vars<2>({&a, &b});
    auto r = tv_norm(tv_sub(vars[0], vars[1]));
    CoordDeriv2<2> out;
    out.value = r.v;
    out.grad = r.g;
    out.hess = r.h;
    return out;
}

CoordDeriv2<3> angle_deriv2(const Vec3& a, const Vec3& b, const Vec3& c) {
    auto vars = make_vars<3>({&a, &b, &c});
    auto u = tv_sub(vars[0], vars[1]);
    auto v = tv_sub(vars[2], vars[1]);
    auto theta = atan2(tv_norm(tv_cross(u, v)), tv_dot(u, v));
    CoordDeriv2<3> out;
    out.value = theta.v;
    out.grad = theta.g;
    out.hess = theta.h;
    return out;
}

CoordDeriv2<4> dihedral_deriv2(const Vec3& r1, const Vec3& r2, const Vec3& r3, const Vec3& r4) {
    bool rev = reversed_is_less(r1, r2, r3, r4);
    std::array<const Vec3*, 4> pts =
        rev ? std::array<const Vec3*, 4>{&r4, &r3, &r2, &r1}
            : std::array<const Vec3*, 4>{&r1, &r2, &r3, &r4};
    auto vars = make_vars<4>(pts);
    auto b1 = tv_sub(vars[1], vars[0]);
    auto b2 = tv_sub(vars[2], vars[1]);
    auto b3 = tv_sub(vars[3], vars[2]);
    auto n1 = tv_cross(b1, b2);
    auto n2 = tv_cross(b2, b3);
    auto nb2 = tv_norm(b2);
    TV3<Dual2<12>> b2h = {b2[0] / nb2, b2[1] / nb2, b2[2] / nb2};
    auto m = tv_cross(n1, b2h);
    auto phi = atan2(tv_dot(m, n2), tv_dot(n1, n2));

    CoordDeriv2<4> out;
    out.value = phi.v;
    if (!rev) {
        out.grad = phi.g;
        out.hess = phi.h;
    } else {
        // Map computed (reversed) atom slots back to the caller's order.
        for (int a = 0; a < 4; ++a) {
            out.grad.segment<3>(3 * a) = phi.g.segment<3>(3 * (3 - a));
            for (int b = 0; b < 4; ++b) {
                out.hess.block<3, 3>(3 * a, 3 * b) = phi.h.block<3, 3>(3 * (3 - a), 3 * (3 - b));
            }
        }
    }
    return out;
}

}  // namespace ffkit
