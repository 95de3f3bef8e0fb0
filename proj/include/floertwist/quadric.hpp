#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "floertwist/local_model.hpp"
#include "floertwist/vec.hpp"

namespace floertwist::local {

inline constexpr double kOnSigmaTol = 1e-12;

// q(x) = x_1^2 + ... + x_{n+1}^2 (complex, not Hermitian).
inline std::complex<double> quadric_q(const CVec& x) {
    std::complex<double> s = 0.0;
    for (auto& v : x) s += v * v;
    return s;
}

// h(x) = |x|^4 - |q(x)|^2; h^{-1}(0) is the union Sigma of the Lagrangian
// spheres sqrt(z) S^n, and h is constant under horizontal transport.
inline double quadric_h(const CVec& x) {
    double n2 = cnorm2(x);
    return n2 * n2 - std::norm(quadric_q(x));
}

// The fibered chart Phi: C^{n+1} minus Sigma -> C x (T minus T(0)) in polar
// coordinates s e^{i alpha} = q(x), x_hat = e^{-i alpha / 2} x:
//
//   Phi(x) = (q(x), sigma_{alpha/2}(-im(x_hat) |re(x_hat)|,
//                                  re(x_hat) / |re(x_hat)|)).
//
// When q(x) is too small for polar coordinates the equivalent closed form
// with beta(x) = (|x|^2 + h(x)^{1/2})^{1/2} is used instead; the two agree
// wherever both apply.
//
// Sign convention: the pullback identity
//   (Phi^{-1})* theta_ambient = theta_T - tilde_R_s(mu) d alpha
// holds with theta_ambient = im(sum conj(x_k) dx_k) / 2, the rotation-
// invariant primitive of sum d(re x_k) ^ d(im x_k), and theta_T = u . dv.
// Flipping both one-forms together is equally consistent.
inline CotangentPoint phi_fibre_point(const CVec& x) {
    double h = quadric_h(x);
    if (h <= kOnSigmaTol)
        throw OnSigma("phi: point lies on Sigma (h <= 1e-12)");
    std::complex<double> q = quadric_q(x);
    double s = std::abs(q);
    double scale = cnorm2(x);
    if (s > 1e-13 * scale) {
        double alpha = std::arg(q);
        CVec xh = cscaled(x, std::polar(1.0, -0.5 * alpha));
        Vec re = real_part(xh), im = imag_part(xh);
        double rn = norm(re);
        CotangentPoint base{scaled(im, -rn), scaled(re, 1.0 / rn)};
        if (alpha == 0.0) return base;
        return geodesic_flow(base, 0.5 * alpha);
    }
    // q(x) ~ 0: smooth form of the same map.
    double beta = std::sqrt(cnorm2(x) + std::sqrt(h));
    CVec qx = cscaled(x, std::conj(q));
    Vec u = axpy(-0.5 / beta, imag_part(qx), scaled(imag_part(x), -0.5 * beta));
    Vec v = scaled(axpy(-1.0 / beta, real_part(qx), scaled(real_part(x), beta)),
                   1.0 / std::sqrt(h));
    return {u, v};
}

struct QuadricData {
    std::complex<double> q;
    double h = 0.0;
    // absent when the point lies on Sigma
    std::optional<std::pair<std::complex<double>, CotangentPoint>> phi;
};

inline QuadricData quadric_maps(const CVec& x) {
    QuadricData out;
    out.q = quadric_q(x);
    out.h = quadric_h(x);
    if (out.h > kOnSigmaTol) out.phi = {out.q, phi_fibre_point(x)};
    return out;
}

// Alternative evaluation of the fibre part through the manipulated closed
// form; test-side cross check against the polar route.
inline CotangentPoint phi_fibre_point_smooth(const CVec& x) {
    double h = quadric_h(x);
    if (h <= kOnSigmaTol)
        throw OnSigma("phi: point lies on Sigma (h <= 1e-12)");
    std::complex<double> q = quadric_q(x);
    double beta = std::sqrt(cnorm2(x) + std::sqrt(h));
    CVec qx = cscaled(x, std::conj(q));
    Vec u = axpy(-0.5 / beta, imag_part(qx), scaled(imag_part(x), -0.5 * beta));
    Vec v = scaled(axpy(-1.0 / beta, real_part(qx), scaled(real_part(x), beta)),
                   1.0 / std::sqrt(h));
    return {u, v};
}

// Holomorphic section w(z) = s^{-1/2} a z + s^{1/2} conj(a) of the model
// fibration over the disc of radius s.  Valid parameters satisfy q(a) = 0 and
// |a|^2 = 1/2; then q(w(z)) = z identically and w maps the boundary circle
// into the spheres Sigma_z.
struct Section {
    double s = 0.0;
    CVec a;
    bool valid = false;

    CVec operator()(std::complex<double> z) const {
        return cadd(cscaled(a, z / std::sqrt(s)),
                    cscaled(floertwist::local::conj(a), std::sqrt(s)));
    }

    const Section& require() const {
        if (!valid)
            throw InvalidParameter(
                "section_moduli: need q(a) = 0 and |a|^2 = 1/2 (to 1e-9)");
        return *this;
    }
};

inline Section section_moduli(double s, CVec a) {
    if (!(s > 0.0)) throw InvalidParameter("section_moduli: need s > 0");
    Section sec;
    sec.s = s;
    sec.valid = std::abs(quadric_q(a)) <= 1e-9 && std::abs(cnorm2(a) - 0.5) <= 1e-9;
    sec.a = std::move(a);
    return sec;
}

// The moduli space of sections is the unit sphere bundle S(T*S^n):
// a corresponds to (u, v) = (-2 im a, 2 re a), inverted by a = (v - i u)/2.
inline CotangentPoint section_to_sphere_bundle(const CVec& a) {
    return {scaled(imag_part(a), -2.0), scaled(real_part(a), 2.0)};
}

inline CVec sphere_bundle_to_section(const CotangentPoint& y) {
    return to_complex(scaled(y.v, 0.5), scaled(y.u, -0.5));
}

// Parametrized boundary evaluation of the section moduli after the
// identifications with S(T*S^n) and S^n: (t, u, v) maps to the pair
// (v, -cos(pi t) v - sin(pi t) u).  At t = 1 the two slots agree (diagonal),
// at t = 0 they are antipodal.
inline std::pair<Vec, Vec> parametrized_evaluation(double t, const CotangentPoint& y) {
    Vec second = axpy(-std::sin(kPi * t), y.u, scaled(y.v, -std::cos(kPi * t)));
    return {y.v, second};
}

} // namespace floertwist::local
