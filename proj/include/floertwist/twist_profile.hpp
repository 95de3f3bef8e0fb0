#pragma once

#include <algorithm>
#include <cmath>

#include "floertwist/errors.hpp"

namespace floertwist::local {

// tilde_R_s(t) = t/2 - sqrt(t^2 + s^2/4)/2, the angle profile pulled back
// from the quadric fibration.  Satisfies tilde_R_s(-t) = tilde_R_s(t) - t and
// the decay bounds 0 > tilde_R_s(t) >= -s^2/(16 t),
// 0 < d/dt tilde_R_s(t) <= s^2/(16 t^2) for t > 0.
inline double tilde_R(double s, double t) {
    return 0.5 * t - 0.5 * std::sqrt(t * t + 0.25 * s * s);
}

inline double tilde_R_dt(double s, double t) {
    return 0.5 - 0.5 * t / std::sqrt(t * t + 0.25 * s * s);
}

inline double tilde_R_dtt(double s, double t) {
    double a = 0.25 * s * s;
    double root = std::sqrt(t * t + a);
    return -0.5 * a / (root * root * root);
}

// Twist profile R_r(t) = (1 - g(t)) tilde_R_r(t) with a fixed C^2 cutoff g:
// the quintic smoothstep ramp from 0 on [0; lambda/4] to 1 on [3 lambda/4;
// lambda].  Consequences used throughout: R(0) = -r/4, R'(0) = 1/2, R == 0
// for t >= 3 lambda/4, and R' >= 0 everywhere (g' >= 0, tilde_R < 0).
class TwistProfile {
  public:
    explicit TwistProfile(double r, double lambda = 1.0) : r_(r), lambda_(lambda) {
        if (!(r > 0.0 && r < 0.5))
            throw InvalidParameter("TwistProfile: need 0 < r < 1/2");
        if (!(lambda > 0.0))
            throw InvalidParameter("TwistProfile: need lambda > 0");
    }

    double r() const { return r_; }
    double lambda() const { return lambda_; }

    double cutoff(double t) const { return ramp(t).v; }
    double cutoff_dt(double t) const { return ramp(t).d1; }

    double R(double t) const { return (1.0 - cutoff(t)) * tilde_R(r_, t); }

    double dR(double t) const {
        auto g = ramp(t);
        return -g.d1 * tilde_R(r_, t) + (1.0 - g.v) * tilde_R_dt(r_, t);
    }

    double ddR(double t) const {
        auto g = ramp(t);
        return -g.d2 * tilde_R(r_, t) - 2.0 * g.d1 * tilde_R_dt(r_, t) +
               (1.0 - g.v) * tilde_R_dtt(r_, t);
    }

  private:
    struct Ramp {
        double v, d1, d2;
    };
    Ramp ramp(double t) const {
        double a = 0.25 * lambda_, b = 0.75 * lambda_;
        if (t <= a) return {0.0, 0.0, 0.0};
        if (t >= b) return {1.0, 0.0, 0.0};
        double w = b - a;
        double x = (t - a) / w;
        double v = std::clamp(x * x * x * (10.0 + x * (-15.0 + 6.0 * x)), 0.0, 1.0);
        double d1 = 30.0 * x * x * (x - 1.0) * (x - 1.0) / w;
        double d2 = 60.0 * x * (2.0 * x - 1.0) * (x - 1.0) / (w * w);
        return {v, d1, d2};
    }

    double r_, lambda_;
};

// delta-wobblyness: R'(t) >= 0 for all t >= 0, and R''(t) < 0 wherever
// R'(t) >= delta.  Sampled on a grid of step lambda/10^4; the pieces outside
// the cutoff ramp are exact (pure tilde_R on [0; lambda/4], zero beyond
// 3 lambda/4), so the grid only has to police the ramp.
inline bool is_delta_wobbly(const TwistProfile& P, double delta) {
    if (!(delta > 0.0 && delta < 0.5))
        throw InvalidParameter("is_delta_wobbly: need 0 < delta < 1/2");
    const double step = P.lambda() / 1e4;
    for (double t = 0.0; t <= P.lambda(); t += step) {
        double d1 = P.dR(t);
        if (d1 < 0.0) return false;
        if (d1 >= delta && !(P.ddR(t) < 0.0)) return false;
    }
    return true;
}

// Largest grid point with R' >= delta; bisection bracket for inverting R'.
inline double wobbly_radius(const TwistProfile& P, double delta) {
    const double step = P.lambda() / 1e4;
    double t_delta = 0.0;
    for (double t = 0.0; t <= P.lambda(); t += step)
        if (P.dR(t) >= delta) t_delta = t;
    return t_delta;
}

} // namespace floertwist::local
