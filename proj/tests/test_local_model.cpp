#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "floertwist/local_model.hpp"

using namespace floertwist;
using namespace floertwist::local;

namespace {

Vec random_unit(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(n);
    double s = 0;
    while (s < 1e-6) {
        for (auto& x : v) x = gauss(rng);
        s = norm(v);
    }
    return scaled(v, 1.0 / s);
}

// Random point of T*S^n with mu in [lo, hi].
CotangentPoint random_point(std::mt19937_64& rng, std::size_t n1, double lo,
                            double hi) {
    std::uniform_real_distribution<double> uni(lo, hi);
    Vec v = random_unit(rng, n1);
    Vec u = random_unit(rng, n1);
    u = axpy(-dot(u, v), v, u); // project off v
    u = scaled(u, uni(rng) / norm(u));
    return {u, v};
}

// Tangent basis of T at y: orthogonal complement of the constraint gradients
// (v, u) and (0, v) in R^{2n+2}.
std::vector<std::pair<Vec, Vec>> tangent_basis(const CotangentPoint& y) {
    std::size_t n1 = y.u.size();
    std::vector<Vec> normals;
    Vec g1 = y.v, g2 = y.u; // gradient of <u,v>: (v, u)
    std::vector<std::pair<Vec, Vec>> ortho;
    auto flat_dot = [&](const std::pair<Vec, Vec>& a, const std::pair<Vec, Vec>& b) {
        return dot(a.first, b.first) + dot(a.second, b.second);
    };
    std::vector<std::pair<Vec, Vec>> gs = {{y.v, y.u}, {Vec(n1, 0.0), y.v}};
    std::vector<std::pair<Vec, Vec>> basis;
    for (std::size_t i = 0; i < 2 * n1; ++i) {
        std::pair<Vec, Vec> e{Vec(n1, 0.0), Vec(n1, 0.0)};
        (i < n1 ? e.first[i] : e.second[i - n1]) = 1.0;
        for (auto& g : gs) {
            double c = flat_dot(e, g) / flat_dot(g, g);
            e.first = axpy(-c, g.first, e.first);
            e.second = axpy(-c, g.second, e.second);
        }
        for (auto& b : basis) {
            double c = flat_dot(e, b);
            e.first = axpy(-c, b.first, e.first);
            e.second = axpy(-c, b.second, e.second);
        }
        double nrm = std::sqrt(flat_dot(e, e));
        if (nrm > 1e-8) {
            e.first = scaled(e.first, 1.0 / nrm);
            e.second = scaled(e.second, 1.0 / nrm);
            basis.push_back(e);
        }
    }
    REQUIRE(basis.size() == 2 * n1 - 2);
    return basis;
}

// omega = sum du_k wedge dv_k on pairs of ambient tangent vectors.
double omega(const std::pair<Vec, Vec>& a, const std::pair<Vec, Vec>& b) {
    return dot(a.first, b.second) - dot(b.first, a.second);
}

// Central finite difference of the twist along an ambient direction.
std::pair<Vec, Vec> twist_derivative(const TwistProfile& P, const CotangentPoint& y,
                                     const std::pair<Vec, Vec>& X, double h) {
    CotangentPoint yp{axpy(h, X.first, y.u), axpy(h, X.second, y.v)};
    CotangentPoint ym{axpy(-h, X.first, y.u), axpy(-h, X.second, y.v)};
    CotangentPoint fp = model_twist(P, yp), fm = model_twist(P, ym);
    return {scaled(sub(fp.u, fm.u), 0.5 / h), scaled(sub(fp.v, fm.v), 0.5 / h)};
}

} // namespace

TEST_CASE("tilde_R closed form") {
    CHECK(tilde_R(0.3, 0.0) == Catch::Approx(-0.3 / 4).margin(1e-15));
    CHECK(tilde_R(0.0, 1.7) == 0.0);
    // R~_s(-t) = R~_s(t) - t
    for (double s : {0.1, 0.45}) {
        for (double t : {0.05, 1.0, 3.0}) {
            CHECK(tilde_R(s, -t) == Catch::Approx(tilde_R(s, t) - t).margin(1e-14));
        }
    }
    // decay bounds on the sampled grid
    for (int i = 1; i <= 40; ++i) {
        double s = i / 40.0;
        for (int j = 0; j < 40; ++j) {
            double t = 0.1 + j * (10.0 - 0.1) / 39.0;
            double v = tilde_R(s, t), d = tilde_R_dt(s, t);
            CHECK(v < 0.0);
            CHECK(v >= -s * s / (16.0 * t));
            CHECK(d > 0.0);
            CHECK(d <= s * s / (16.0 * t * t));
        }
    }
}

TEST_CASE("twist profile invariants") {
    TwistProfile P(0.3, 1.0);
    CHECK(P.R(0.0) == Catch::Approx(-0.3 / 4).margin(1e-12));
    CHECK(P.dR(0.0) == Catch::Approx(0.5).margin(1e-9));
    for (double t = 0.75; t <= 1.5; t += 0.05) CHECK(P.R(t) == 0.0);
    for (double t = 0.0; t <= 1.2; t += 0.003) {
        CHECK(P.dR(t) >= 0.0);
        CHECK(P.dR(t) <= 0.5 + 1e-12);
    }
    CHECK_THROWS_AS(TwistProfile(0.6), InvalidParameter);
    CHECK_THROWS_AS(TwistProfile(0.3, -1.0), InvalidParameter);

    // derivative consistency of the cutoff assembly
    for (double t : {0.1, 0.3, 0.41, 0.55, 0.7}) {
        double h = 1e-6;
        CHECK(P.dR(t) ==
              Catch::Approx((P.R(t + h) - P.R(t - h)) / (2 * h)).margin(1e-7));
        CHECK(P.ddR(t) ==
              Catch::Approx((P.dR(t + h) - P.dR(t - h)) / (2 * h)).margin(1e-6));
    }
}

TEST_CASE("geodesic flow") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto y = random_point(rng, 3, 0.05, 1.5);
        REQUIRE(is_valid(y));

        auto id = geodesic_flow(y, 0.0);
        CHECK(dist(id.u, y.u) == 0.0);
        CHECK(dist(id.v, y.v) == 0.0);

        auto anti = geodesic_flow(y, kPi);
        CHECK(dist(anti.u, scaled(y.u, -1.0)) < 1e-9);
        CHECK(dist(anti.v, scaled(y.v, -1.0)) < 1e-9);

        // composition, invariants, mu preservation
        std::uniform_real_distribution<double> uni(-3.0, 3.0);
        double s = uni(rng), t = uni(rng);
        auto a = geodesic_flow(y, s + t);
        auto b = geodesic_flow(geodesic_flow(y, t), s);
        CHECK(dist(a.u, b.u) < 1e-9);
        CHECK(dist(a.v, b.v) < 1e-9);
        CHECK(is_valid(a, 1e-9));
        CHECK(std::abs(mu(a) - mu(y)) < 1e-9);

        auto round = geodesic_flow(geodesic_flow(y, kPi), kPi);
        CHECK(dist(round.u, y.u) < 1e-9);
        CHECK(dist(round.v, y.v) < 1e-9);
    }
    CotangentPoint on_section{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
    CHECK_THROWS_AS(geodesic_flow(on_section, 0.5), ZeroSection);
}

TEST_CASE("model twist branches") {
    TwistProfile P(0.25, 1.0);
    CotangentPoint on_section{{0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    auto img = model_twist(P, on_section);
    CHECK(norm(img.u) == 0.0);
    CHECK(dist(img.v, {0.0, -1.0, 0.0}) == 0.0);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto far = random_point(rng, 3, 1.0, 2.0); // mu >= lambda
        auto fixed = model_twist(P, far);
        CHECK(dist(fixed.u, far.u) == 0.0);
        CHECK(dist(fixed.v, far.v) == 0.0);
    }
}

TEST_CASE("model twist inverse round trip") {
    TwistProfile P(0.25, 1.0);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        auto y = random_point(rng, 3, 0.01, 1.2);
        auto fwd = model_twist(P, y);
        auto back = model_twist_inverse(P, fwd);
        CHECK(dist(back.u, y.u) < 1e-7);
        CHECK(dist(back.v, y.v) < 1e-7);
    }
}

TEST_CASE("model twist is symplectic (finite differences)") {
    TwistProfile P(0.3, 1.0);
    std::mt19937_64 rng(17);
    const double h = 1e-5;
    for (int trial = 0; trial < 40; ++trial) {
        auto y = random_point(rng, 3, 0.05, 0.9); // n = 2
        auto basis = tangent_basis(y);
        std::vector<std::pair<Vec, Vec>> images;
        for (auto& X : basis) images.push_back(twist_derivative(P, y, X, h));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                CHECK(omega(images[i], images[j]) ==
                      Catch::Approx(omega(basis[i], basis[j])).margin(1e-6));
    }
}

TEST_CASE("twist moment") {
    TwistProfile P(0.3, 1.0);
    // on the zero section: K = -2 pi R(0) = pi r / 2
    CotangentPoint on_section{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
    CHECK(twist_moment(P, on_section) ==
          Catch::Approx(kPi * 0.3 / 2).margin(1e-9));

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        auto far = random_point(rng, 3, 0.8, 2.0);
        if (mu(far) >= 0.75)
            CHECK(twist_moment(P, far) == 0.0);
        // invariance under the twist
        auto y = random_point(rng, 3, 0.01, 1.2);
        CHECK(twist_moment(P, model_twist(P, y)) ==
              Catch::Approx(twist_moment(P, y)).margin(1e-9));
    }
}

TEST_CASE("tau* theta - theta = dK (finite differences)") {
    TwistProfile P(0.3, 1.0);
    std::mt19937_64 rng(25);
    const double h = 1e-5;
    auto theta = [](const CotangentPoint& y, const std::pair<Vec, Vec>& X) {
        return dot(y.u, X.second); // theta_T = u . dv
    };
    for (int trial = 0; trial < 40; ++trial) {
        auto y = random_point(rng, 3, 0.05, 0.9);
        auto basis = tangent_basis(y);
        auto ty = model_twist(P, y);
        for (auto& X : basis) {
            auto dT = twist_derivative(P, y, X, h);
            double lhs = theta(ty, dT) - theta(y, X);
            CotangentPoint yp{axpy(h, X.first, y.u), axpy(h, X.second, y.v)};
            CotangentPoint ym{axpy(-h, X.first, y.u), axpy(-h, X.second, y.v)};
            double rhs = (twist_moment(P, yp) - twist_moment(P, ym)) / (2 * h);
            CHECK(lhs == Catch::Approx(rhs).margin(1e-6));
        }
    }
}

TEST_CASE("delta-wobblyness") {
    // small r relative to the cutoff: wobbly
    CHECK(is_delta_wobbly(TwistProfile(0.05, 1.0), 0.01));
    // r near 1/2 with a tight cutoff: the ramp pushes R'' positive while
    // R' is still large, so small delta fails
    CHECK_FALSE(is_delta_wobbly(TwistProfile(0.49, 0.05), 1e-4));
    CHECK_THROWS_AS(is_delta_wobbly(TwistProfile(0.1, 1.0), 0.5), InvalidParameter);
    CHECK_THROWS_AS(is_delta_wobbly(TwistProfile(0.1, 1.0), 0.0), InvalidParameter);
}

TEST_CASE("fibre twist intersection, antipodal case") {
    TwistProfile P(0.05, 1.0);
    double delta = 0.01;
    REQUIRE(is_delta_wobbly(P, delta));
    Vec y0 = {1.0, 0.0, 0.0}, y1 = {-1.0, 0.0, 0.0};
    auto res = fibre_twist_intersection(P, y0, y1, delta);
    CHECK(res.antipodal_case);
    CHECK(res.transverse);
    CHECK(norm(res.point.u) == 0.0);
    CHECK(dist(res.point.v, y1) == 0.0);
    CHECK(res.tangent_factors[0] == std::complex<double>(1.0, 2 * kPi * P.ddR(0.0)));
    CHECK(res.tangent_factors[1] == std::complex<double>(0.0, 1.0));
    CHECK(res.tangent_factors[2] == std::complex<double>(1.0, 0.0));
}

TEST_CASE("fibre twist intersection, generic pairs") {
    TwistProfile P(0.05, 1.0);
    double delta = 0.01;
    REQUIRE(is_delta_wobbly(P, delta));
    std::mt19937_64 rng(29);
    int accepted = 0;
    while (accepted < 40) {
        Vec y0 = random_unit(rng, 3), y1 = random_unit(rng, 3);
        double theta = sphere_distance(y0, y1);
        if (theta < 2 * kPi * delta + 1e-3 || theta > kPi - 1e-3) continue;
        ++accepted;
        auto res = fibre_twist_intersection(P, y0, y1, delta);
        CHECK_FALSE(res.antipodal_case);
        CHECK(res.transverse);
        REQUIRE(is_valid(res.point, 1e-9));
        // the defining equation
        CHECK(2 * kPi * P.dR(mu(res.point)) == Catch::Approx(theta).margin(1e-9));
        // lands in the right fibre, comes from the right fibre
        CHECK(dist(res.point.v, y1) < 1e-12);
        auto back = model_twist_inverse(P, res.point);
        CHECK(dist(back.v, y0) < 1e-7);
    }

    // distance below the wobbly threshold
    Vec y0 = {1.0, 0.0, 0.0};
    Vec y1 = {std::cos(0.5 * kPi * delta), std::sin(0.5 * kPi * delta), 0.0};
    CHECK_THROWS_AS(fibre_twist_intersection(P, y0, y1, delta), NoSolution);
}

TEST_CASE("fibre twist intersection near the wobbly boundary") {
    TwistProfile P(0.05, 1.0);
    double delta = 0.01;
    // dist slightly above 2 pi delta: unique solution with R' slightly
    // above delta
    double theta = 2 * kPi * delta * 1.02;
    Vec y0 = {1.0, 0.0, 0.0}, y1 = {std::cos(theta), std::sin(theta), 0.0};
    auto res = fibre_twist_intersection(P, y0, y1, delta);
    double rp = P.dR(mu(res.point));
    CHECK(rp >= delta);
    CHECK(rp <= delta * 1.05);
}
