//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_COMMON_DUAL2_HPP
#define FFKIT_COMMON_DUAL2_HPP

#include <Eigen/Core>
#include <cmath>

namespace ffkit {

/// Second-order Taylor scalar over NV independent variables: carries a value,
/// the exact gradient, and the exact symmetric Hessian through arithmetic.
/// Used to obtain machine-precision second derivatives of internal
/// coordinates without hand-derived formulas.
template <int NV>
struct Dual2 {
    using GradT = Eigen::Matrix<double, NV, 1>;
    using HessT = Eigen::Matrix<double, NV, NV>;

    double v = 0.0;
    GradT g = GradT::Zero();
    HessT h = HessT::Zero();

    Dual2() = default;
    explicit Dual2(double value) : v(value) {}

    static Dual2 variable(double value, int index) {
        Dual2 d(value);
        d.g[index] = 1.0;
        return d;
    }

    Dual2 operator-() const {
        Dual2 r;
        r.v = -v;
        r.g = -g;
        r.h = -h;
        return r;
    }

    friend Dual2 operator+(const Dual2& a, const Dual2& b) {
        Dual2 r;
        r.v = a.v + b.v;
        r.g = a.g + b.g;
        r.h = a.h + b.h;
        return r;
    }
    friend Dual2 operator-(const Dual2& a, const Dual2& b) {
        Dual2 r;
        r.v = a.v - b.v;
        r.g = a.g - b.g;
        r.h = a.h - b.h;
        return r;
    }
    friend Dual2 operator*(const Dual2& a, const Dual2& b) {
        Dual2 r;
        r.v = a.v * b.v;
        r.g = a.g * b.v + b.g * a.v;
        r.h = a.h * b.v + b.h * a.v + a.g * b.g.transpose() + b.g * a.g.transpose();
        return r;
    }
    friend Dual2 operator+(const Dual2& a, double c) { return a + Dual2(c); }
    friend Dual2 operator-(const Dual2& a, double c) { return a - Dual2(c); }
    friend Dual2 operator*(const Dual2& a, double c) {
        Dual2 r;
        r.v = a.v * c;
        r.g = a.g * c;
        r.h = a.h * c;
        return r;
    }
    friend Dual2 operator*(double c, const Dual2& a) { return a * c; }
    friend Dual2 operator/(const Dual2& a, const Dual2& b) { return a * reciprocal(b); }
    friend Dual2 operator/(const Dual2& a, double c) { return a * (1.0 / c); }

    /// Chain rule for a unary map f with first/second derivatives at a.v.
    static Dual2 unary(const Dual2& a, double f, double df, double d2f) {
        Dual2 r;
        r.v = f;
        r.g = df * a.g;
        r.h = df * a.h + d2f * (a.g * a.g.transpose());
        return r;
    }

    friend Dual2 reciprocal(const Dual2& a) {
        double inv = 1.0 / a.v;
        return unary(a, inv, -inv * inv, 2.0 * inv * inv * inv);
    }
    friend Dual2 sqrt(const Dual2& a) {
        double s = std::sqrt(a.v);
        return unary(a, s, 0.5 / s, -0.25 / (s * a.v));
    }
    friend Dual2 sin(const Dual2& a) {
        return unary(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v));
    }
    friend Dual2 cos(const Dual2& a) {
        return unary(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v));
    }

    /// atan2 with full second-order propagation.
    friend Dual2 atan2(const Dual2& y, const Dual2& x) {
        double r2 = x.v * x.v + y.v * y.v;
        double dx = -y.v / r2;
        double dy = x.v / r2;
        double r4 = r2 * r2;
        double dxx = 2.0 * x.v * y.v / r4;
        double dyy = -2.0 * x.v * y.v / r4;
        double dxy = (y.v * y.v - x.v * x.v) / r4;
        Dual2 r;
        r.v = std::atan2(y.v, x.v);
        r.g = dx * x.g + dy * y.g;
        r.h = dx * x.h + dy * y.h + dxx * (x.g * x.g.transpose()) + dyy * (y.g * y.g.transpose()) +
              dxy * (x.g * y.g.transpose() + y.g * x.g.transpose());
        return r;
    }
};

}  // namespace ffkit

#endif  // FFKIT_COMMON_DUAL2_HPP
