#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "floertwist/graded.hpp"

namespace floertwist::graded {

// The hypothesis bundle of the low-energy exactness lemma: differential
// spaces C', C, C'' with chain maps b: C' -> C, c: C -> C'', a homotopy
// h: C' -> C'' between c*b and zero, and the scale epsilon that separates
// low-order from high-order parts.  kappa_total records the boundary
// curvature constant of the scenario that produced the triple, if any.
struct ExactTriple {
    DifferentialSpace Cp, C, Cpp;
    OrderMap b, c, h;
    double epsilon = 0.0;
    double kappa_total = 0.0;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct TripleDiagnostics {
    std::vector<Check> checks;

    bool ok() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string first_failure() const {
        for (auto& c : checks)
            if (!c.pass) return c.name;
        return {};
    }
};

namespace detail {
inline void require_triple_shape(const ExactTriple& t) {
    if (!(t.b.src() == t.Cp.space()) || !(t.b.dst() == t.C.space()))
        throw InvalidParameter("ExactTriple: b must map C' to C");
    if (!(t.c.src() == t.C.space()) || !(t.c.dst() == t.Cpp.space()))
        throw InvalidParameter("ExactTriple: c must map C to C''");
    if (!(t.h.src() == t.Cp.space()) || !(t.h.dst() == t.Cpp.space()))
        throw InvalidParameter("ExactTriple: h must map C' to C''");
}
} // namespace detail

// Runs every hypothesis of the low-energy lemma against the triple and
// reports one named pass/fail entry per check.  Never throws on a failed
// check, only on a structurally malformed triple.
inline TripleDiagnostics verify_triple(const ExactTriple& t) {
    detail::require_triple_shape(t);
    TripleDiagnostics diag;
    auto add = [&](std::string name, bool pass, std::string detail = {}) {
        diag.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const double eps = t.epsilon;
    add("epsilon_positive", eps > 0);

    auto gap_check = [&](const char* name, const GradedSpace& s, double width) {
        auto bad = gap_violation(s, OrderInterval::open(0, width));
        add(name, !bad,
            bad ? "grades " + std::to_string(bad->first) + ", " +
                      std::to_string(bad->second)
                : "");
    };
    gap_check("Cp_gap_0_3eps", t.Cp.space(), 3 * eps);
    gap_check("Cpp_gap_0_3eps", t.Cpp.space(), 3 * eps);
    gap_check("C_gap_0_2eps", t.C.space(), 2 * eps);

    bool sep = true;
    std::string sep_detail;
    for (double r : t.Cp.space().support()) {
        for (double s : t.Cpp.space().support()) {
            if (std::abs(r - s) < 4 * eps) {
                sep = false;
                sep_detail = "grades " + std::to_string(r) + " vs " + std::to_string(s);
            }
        }
    }
    add("support_separation_4eps", sep, sep_detail);

    auto [beta, b_rest] = split_at(t.b, eps);
    auto [gamma, c_rest] = split_at(t.c, eps);
    add("beta_order", check_order(beta, OrderInterval::half_open(0, eps)));
    add("b_rest_order", check_order(b_rest, OrderInterval::half_open(2 * eps, kInf)));
    add("gamma_order", check_order(gamma, OrderInterval::half_open(0, eps)));
    add("c_rest_order", check_order(c_rest, OrderInterval::half_open(2 * eps, kInf)));

    std::size_t rb = beta.rank(), rg = gamma.rank();
    add("beta_injective", rb == t.Cp.space().dim());
    add("gamma_surjective", rg == t.Cpp.space().dim());
    add("rank_sum_exact", rb + rg == t.C.space().dim());
    add("gamma_beta_zero", compose(gamma, beta).is_zero());

    add("h_order", check_order(t.h, OrderInterval::nonnegative()));

    add("dCp_order_positive", check_order(t.Cp.d(), OrderInterval::positive()));
    add("dC_order_positive", check_order(t.C.d(), OrderInterval::positive()));
    add("dCpp_order_positive", check_order(t.Cpp.d(), OrderInterval::positive()));

    add("b_chain_map", compose(t.C.d(), t.b) == compose(t.b, t.Cp.d()));
    add("c_chain_map", compose(t.Cpp.d(), t.c) == compose(t.c, t.C.d()));
    // c*b = d'' h + h d' over GF(2)
    add("homotopy_identity",
        compose(t.c, t.b) == compose(t.Cpp.d(), t.h) + compose(t.h, t.Cp.d()));
    return diag;
}

namespace detail {

inline GradedSpace total_space(const ExactTriple& t) {
    std::vector<std::pair<std::string, double>> items;
    auto append = [&](const GradedSpace& s, const char* prefix) {
        for (std::size_t i = 0; i < s.dim(); ++i)
            items.emplace_back(std::string(prefix) + s.label(i), s.grade(i));
    };
    append(t.Cp.space(), "Cp.");
    append(t.C.space(), "C.");
    append(t.Cpp.space(), "Cpp.");
    return GradedSpace(std::move(items));
}

// Lower-triangular differential [[d', 0, 0], [b, d, 0], [h, c, d'']] on the
// block space C' + C + C''.
inline gf2::Matrix total_matrix(const ExactTriple& t) {
    std::size_t np = t.Cp.space().dim(), nc = t.C.space().dim(),
                nq = t.Cpp.space().dim();
    std::size_t n = np + nc + nq;
    gf2::Matrix m(n, n);
    auto put = [&](const OrderMap& f, std::size_t row0, std::size_t col0) {
        for (auto& [r, c] : f.entries()) m.set(row0 + r, col0 + c, true);
    };
    put(t.Cp.d(), 0, 0);
    put(t.b, np, 0);
    put(t.h, np + nc, 0);
    put(t.C.d(), np, np);
    put(t.c, np + nc, np);
    put(t.Cpp.d(), np + nc, np + nc);
    return m;
}

} // namespace detail

// D = C' + C + C'' with the lower-triangular cone differential.  Requires a
// triple that passes verify_triple; d_D^2 = 0 is then re-verified on the
// assembled matrix (it encodes exactly the chain-map and homotopy identities).
inline DifferentialSpace total_complex(const ExactTriple& t) {
    auto diag = verify_triple(t);
    if (!diag.ok())
        throw InvalidParameter("total_complex: triple fails check '" +
                               diag.first_failure() + "'");
    GradedSpace D = detail::total_space(t);
    gf2::Matrix m = detail::total_matrix(t);
    if (!(m * m).is_zero())
        throw ExactnessViolation("total_complex: d_D^2 != 0");
    OrderMap d = OrderMap::from_matrix(D, D, m, OrderInterval::nonnegative());
    return DifferentialSpace(std::move(D), std::move(d));
}

struct LongExactRanks {
    std::size_t hP = 0, hC = 0, hPP = 0;
    std::size_t rank_b = 0, rank_c = 0, rank_conn = 0;

    bool operator==(const LongExactRanks&) const = default;
};

namespace detail {

// Rank of the map induced by f on cohomology: push a kernel basis of the
// source through f and count what survives modulo im(d_dst).
inline std::size_t induced_rank(const OrderMap& f, const DifferentialSpace& src,
                                const DifferentialSpace& dst) {
    gf2::Matrix K = src.d().matrix().kernel_basis();
    gf2::Matrix fK = f.matrix() * K;
    gf2::Matrix im = dst.d().matrix();
    return im.concat_cols(fK).rank() - im.rank();
}

// Kernel columns of d'' that are independent modulo im(d''): representatives
// of a basis of H(C'').
inline std::vector<std::vector<bool>> cohomology_reps(const DifferentialSpace& D) {
    gf2::Matrix K = D.d().matrix().kernel_basis();
    gf2::Matrix acc = D.d().matrix();
    std::size_t base = acc.rank();
    std::vector<std::vector<bool>> reps;
    for (std::size_t j = 0; j < K.cols(); ++j) {
        gf2::Matrix cand = acc.concat_cols(K.column(j));
        if (cand.rank() > base) {
            acc = cand;
            ++base;
            std::vector<bool> v(K.rows(), false);
            for (std::size_t r = 0; r < K.rows(); ++r) v[r] = K.get(r, j);
            reps.push_back(std::move(v));
        }
    }
    return reps;
}

} // namespace detail

// Cohomology ranks of the triple, the ranks of the induced maps, and the
// connecting rank computed two independent ways: (a) by the zig-zag through
// the acyclic total complex, (b) from the exactness identities.  The two must
// agree; any discrepancy is an ExactnessViolation.
//
// Convention: the connecting map runs H(C'') -> H(C'), matching the
// lower-triangular cone. Solving d_D(x', x, x'') = (0, 0, z) for a cocycle
// z in C'' yields the connecting image class [x'].
inline LongExactRanks long_exact_ranks(const ExactTriple& t) {
    auto diag = verify_triple(t);
    if (!diag.ok())
        throw InvalidParameter("long_exact_ranks: triple fails check '" +
                               diag.first_failure() + "'");
    LongExactRanks out;
    out.hP = cohomology_rank(t.Cp);
    out.hC = cohomology_rank(t.C);
    out.hPP = cohomology_rank(t.Cpp);
    out.rank_b = detail::induced_rank(t.b, t.Cp, t.C);
    out.rank_c = detail::induced_rank(t.c, t.C, t.Cpp);

    // (a) zig-zag: lift each H(C'') class through the total complex.
    gf2::Matrix dD = detail::total_matrix(t);
    if (!(dD * dD).is_zero())
        throw ExactnessViolation("long_exact_ranks: d_D^2 != 0");
    std::size_t np = t.Cp.space().dim(), nc = t.C.space().dim(),
                nq = t.Cpp.space().dim();
    auto reps = detail::cohomology_reps(t.Cpp);
    gf2::Matrix conn_images(np, reps.size());
    for (std::size_t j = 0; j < reps.size(); ++j) {
        std::vector<bool> rhs(np + nc + nq, false);
        for (std::size_t i = 0; i < nq; ++i) rhs[np + nc + i] = reps[j][i];
        std::vector<bool> xi = dD.solve(rhs);
        if (xi.empty())
            throw ExactnessViolation(
                "long_exact_ranks: total complex is not acyclic (cocycle in C'' "
                "has no preimage)");
        for (std::size_t i = 0; i < np; ++i) conn_images.set(i, j, xi[i]);
    }
    gf2::Matrix imP = t.Cp.d().matrix();
    std::size_t conn_zigzag = imP.concat_cols(conn_images).rank() - imP.rank();

    // (b) the three exactness identities determine the same number.
    if (out.hP < out.rank_b || out.hPP < out.rank_c)
        throw ExactnessViolation("long_exact_ranks: induced rank exceeds cohomology");
    std::size_t conn_from_p = out.hP - out.rank_b;
    std::size_t conn_from_pp = out.hPP - out.rank_c;
    if (conn_from_p != conn_from_pp || out.hC != out.rank_b + out.rank_c ||
        conn_zigzag != conn_from_p)
        throw ExactnessViolation(
            "long_exact_ranks: exactness identities fail (conn zigzag " +
            std::to_string(conn_zigzag) + ", from C' " + std::to_string(conn_from_p) +
            ", from C'' " + std::to_string(conn_from_pp) + ", hC " +
            std::to_string(out.hC) + " vs " +
            std::to_string(out.rank_b + out.rank_c) + ")");
    out.rank_conn = conn_zigzag;
    return out;
}

} // namespace floertwist::graded
