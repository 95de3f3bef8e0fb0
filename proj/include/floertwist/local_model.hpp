#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "floertwist/twist_profile.hpp"
#include "floertwist/vec.hpp"

namespace floertwist::local {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kZeroSectionTol = 1e-12;

// Point of T = T*S^n in the coordinates {(u, v) : <u, v> = 0, |v| = 1}.
// u is the cotangent coordinate, v the base point.
struct CotangentPoint {
    Vec u, v;
};

inline double mu(const CotangentPoint& y) { return norm(y.u); }

inline bool is_valid(const CotangentPoint& y, double tol = 1e-9) {
    return y.u.size() == y.v.size() && y.u.size() >= 2 &&
           std::abs(dot(y.u, y.v)) <= tol && std::abs(norm(y.v) - 1.0) <= tol;
}

inline CotangentPoint make_point(Vec u, Vec v) {
    CotangentPoint y{std::move(u), std::move(v)};
    if (!is_valid(y))
        throw InvalidParameter("CotangentPoint: <u,v> = 0 or |v| = 1 violated");
    return y;
}

inline CotangentPoint antipodal(const CotangentPoint& y) {
    return {scaled(y.u, -1.0), scaled(y.v, -1.0)};
}

// Normalized geodesic flow sigma_t(u, v) = (cos(t) u - sin(t) |u| v,
// cos(t) v + sin(t) u / |u|).  Undefined on the zero section.
inline CotangentPoint geodesic_flow(const CotangentPoint& y, double t) {
    double m = mu(y);
    if (m < kZeroSectionTol)
        throw ZeroSection("geodesic_flow: point is on the zero section");
    double c = std::cos(t), s = std::sin(t);
    return {axpy(-s * m, y.v, scaled(y.u, c)), axpy(s / m, y.u, scaled(y.v, c))};
}

// Model Dehn twist: sigma_{2 pi R'(mu)} off the zero section, the antipodal
// map on it.  Fixes every point with mu >= 3 lambda / 4 (R' vanishes there).
inline CotangentPoint model_twist(const TwistProfile& P, const CotangentPoint& y) {
    double m = mu(y);
    if (m < kZeroSectionTol) return antipodal(y);
    double angle = 2.0 * kPi * P.dR(m);
    if (angle == 0.0) return y;
    return geodesic_flow(y, angle);
}

// Inverse twist: the same angle run backwards; antipodal on the zero section.
inline CotangentPoint model_twist_inverse(const TwistProfile& P,
                                          const CotangentPoint& y) {
    double m = mu(y);
    if (m < kZeroSectionTol) return antipodal(y);
    double angle = 2.0 * kPi * P.dR(m);
    if (angle == 0.0) return y;
    return geodesic_flow(y, -angle);
}

// K = 2 pi (R'(mu) mu - R(mu)); extends continuously over the zero section
// with value -2 pi R(0), and tau* theta_T - theta_T = dK.
inline double twist_moment(const TwistProfile& P, const CotangentPoint& y) {
    double m = mu(y);
    return 2.0 * kPi * (P.dR(m) * m - P.R(m));
}

// Geodesic distance of two unit vectors on S^n.
inline double sphere_distance(const Vec& y0, const Vec& y1) {
    double c = dot(y0, y1);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

struct FibreIntersection {
    CotangentPoint point;
    bool transverse = false;
    bool antipodal_case = false;
    // In the antipodal case the tangent spaces of tau(F0), T(0), F1 at the
    // intersection are spanned by these complex factors times R^n.
    std::array<std::complex<double>, 3> tangent_factors{};
};

// Unique point of tau(F0) cap F1 for fibres over y0, y1 with
// dist(y0, y1) >= 2 pi delta, assuming the profile is delta-wobbly.  The
// radius solves 2 pi R'(|y|) = dist(y0, y1); wobblyness makes R' strictly
// decreasing on {R' >= delta}, so bisection applies.
inline FibreIntersection fibre_twist_intersection(const TwistProfile& P,
                                                  const Vec& y0, const Vec& y1,
                                                  double delta) {
    if (std::abs(norm(y0) - 1.0) > 1e-9 || std::abs(norm(y1) - 1.0) > 1e-9)
        throw InvalidParameter("fibre_twist_intersection: y0, y1 must be unit");
    if (!is_delta_wobbly(P, delta))
        throw InvalidParameter("fibre_twist_intersection: profile is not delta-wobbly");
    const double theta = sphere_distance(y0, y1);
    if (theta < 2.0 * kPi * delta)
        throw NoSolution("fibre_twist_intersection: dist(y0, y1) < 2 pi delta");

    FibreIntersection out;
    if (1.0 + dot(y0, y1) <= 1e-12) {
        // Antipodes: the intersection point is y1 itself on the zero section.
        out.point = {Vec(y1.size(), 0.0), y1};
        out.antipodal_case = true;
        double ddr0 = P.ddR(0.0);
        out.transverse = ddr0 < 0.0;
        out.tangent_factors = {std::complex<double>(1.0, 2.0 * kPi * ddr0),
                               std::complex<double>(0.0, 1.0),
                               std::complex<double>(1.0, 0.0)};
        return out;
    }

    double lo = 0.0, hi = wobbly_radius(P, delta);
    auto f = [&](double t) { return 2.0 * kPi * P.dR(t) - theta; };
    if (f(lo) < 0.0 || f(hi) > 1e-12)
        throw NoSolution("fibre_twist_intersection: no bracketing interval");
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        t = 0.5 * (lo + hi);
        double ft = f(t);
        if (std::abs(ft) < 1e-13) break;
        (ft > 0.0 ? lo : hi) = t;
    }
    if (std::abs(f(t)) >= 1e-9)
        throw Error("fibre_twist_intersection: bisection residual too large");

    // y is the positive multiple of c'(1) over y1, where c is the minimal
    // geodesic from y0 to y1: direction (cos(theta) y1 - y0) / sin(theta).
    Vec dir = scaled(axpy(-1.0, y0, scaled(y1, std::cos(theta))), 1.0 / std::sin(theta));
    out.point = {scaled(dir, t), y1};
    out.transverse = P.ddR(t) < 0.0;

    CotangentPoint back = model_twist_inverse(P, out.point);
    if (dist(back.v, y0) >= 1e-7)
        throw Error("fibre_twist_intersection: tau^{-1}(y) missed the fibre F0");
    return out;
}

} // namespace floertwist::local
