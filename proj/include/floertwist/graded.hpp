#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "floertwist/gf2.hpp"
#include "floertwist/interval.hpp"

namespace floertwist::graded {

// Finite GF(2) vector space with a real grade (action value) attached to each
// basis element.  Grades are compared exactly as stored; producers of graded
// data are expected to quantize grades (the scenario generator uses multiples
// of 1/1024) so that gap checks need no tolerance.
class GradedSpace {
  public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<std::pair<std::string, double>> items) {
        basis_.reserve(items.size());
        grades_.reserve(items.size());
        for (auto& [label, grade] : items) {
            if (!std::isfinite(grade))
                throw InvalidParameter("GradedSpace: grade of '" + label +
                                       "' is not finite");
            if (index_.count(label))
                throw InvalidParameter("GradedSpace: duplicate label '" + label + "'");
            index_[label] = basis_.size();
            basis_.push_back(std::move(label));
            grades_.push_back(grade);
        }
    }

    std::size_t dim() const { return basis_.size(); }
    const std::string& label(std::size_t i) const { return basis_.at(i); }
    double grade(std::size_t i) const { return grades_.at(i); }
    double grade(const std::string& label) const { return grades_[index(label)]; }

    std::size_t index(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw InvalidParameter("GradedSpace: unknown label '" + label + "'");
        return it->second;
    }
    bool has_label(const std::string& label) const { return index_.count(label) != 0; }

    // Sorted set of grades that actually occur.
    std::vector<double> support() const {
        std::vector<double> s = grades_;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }

    bool operator==(const GradedSpace& o) const {
        return basis_ == o.basis_ && grades_ == o.grades_;
    }

  private:
    std::vector<std::string> basis_;
    std::vector<double> grades_;
    std::map<std::string, std::size_t> index_;
};

// C has gap I iff no two support values differ by an element of I.
inline std::optional<std::pair<double, double>>
gap_violation(const GradedSpace& space, const OrderInterval& I) {
    const auto supp = space.support();
    for (double r : supp)
        for (double s : supp)
            if (I.contains(r - s)) return std::make_pair(r, s);
    return std::nullopt;
}

inline bool has_gap(const GradedSpace& space, const OrderInterval& I) {
    return !gap_violation(space, I);
}

// GF(2) matrix between graded spaces, kept sparse as a set of
// (dst index, src index) pairs, together with a declared order interval.
// Construction checks that every entry's grade shift lies in the declared
// interval, so a successfully built OrderMap always satisfies its order.
class OrderMap {
  public:
    using Entry = std::pair<std::size_t, std::size_t>; // (dst, src)

    OrderMap() = default;
    OrderMap(GradedSpace src, GradedSpace dst, OrderInterval declared)
        : src_(std::move(src)), dst_(std::move(dst)), declared_(declared) {}

    OrderMap(GradedSpace src, GradedSpace dst,
             const std::vector<std::pair<std::string, std::string>>& entries,
             OrderInterval declared)
        : OrderMap(std::move(src), std::move(dst), declared) {
        for (auto& [dst_label, src_label] : entries)
            add_entry(dst_label, src_label);
    }

    static OrderMap zero(GradedSpace src, GradedSpace dst,
                         OrderInterval declared = OrderInterval::all()) {
        return OrderMap(std::move(src), std::move(dst), declared);
    }

    static OrderMap from_matrix(GradedSpace src, GradedSpace dst,
                                const gf2::Matrix& m, OrderInterval declared) {
        if (m.rows() != dst.dim() || m.cols() != src.dim())
            throw InvalidParameter("OrderMap: matrix shape does not match spaces");
        OrderMap f(std::move(src), std::move(dst), declared);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m.get(r, c)) f.add_entry_idx(r, c);
        return f;
    }

    const GradedSpace& src() const { return src_; }
    const GradedSpace& dst() const { return dst_; }
    const OrderInterval& declared_order() const { return declared_; }
    const std::set<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    double shift(const Entry& e) const {
        return dst_.grade(e.first) - src_.grade(e.second);
    }

    void add_entry(const std::string& dst_label, const std::string& src_label) {
        add_entry_idx(dst_.index(dst_label), src_.index(src_label));
    }

    gf2::Matrix matrix() const {
        gf2::Matrix m(dst_.dim(), src_.dim());
        for (auto& [r, c] : entries_) m.set(r, c, true);
        return m;
    }

    std::size_t rank() const { return matrix().rank(); }
    bool injective() const { return rank() == src_.dim(); }
    bool surjective() const { return rank() == dst_.dim(); }

    OrderMap operator+(const OrderMap& o) const {
        if (!(src_ == o.src_) || !(dst_ == o.dst_))
            throw InvalidParameter("OrderMap: sum of maps between different spaces");
        OrderMap out(src_, dst_, OrderInterval::hull(declared_, o.declared_));
        // GF(2): symmetric difference of the entry sets.
        for (auto& e : entries_)
            if (!o.entries_.count(e)) out.entries_.insert(e);
        for (auto& e : o.entries_)
            if (!entries_.count(e)) out.entries_.insert(e);
        return out;
    }

    bool operator==(const OrderMap& o) const {
        return src_ == o.src_ && dst_ == o.dst_ && entries_ == o.entries_;
    }

    friend OrderMap compose(const OrderMap& g, const OrderMap& f) {
        if (!(f.dst_ == g.src_))
            throw InvalidParameter("OrderMap: composition spaces do not match");
        return from_matrix(f.src_, g.dst_, g.matrix() * f.matrix(),
                           OrderInterval::sum(g.declared_, f.declared_));
    }

  private:
    void add_entry_idx(std::size_t dst_idx, std::size_t src_idx) {
        double sh = dst_.grade(dst_idx) - src_.grade(src_idx);
        if (!declared_.contains(sh))
            throw InvalidParameter(
                "OrderMap: entry (" + dst_.label(dst_idx) + " <- " +
                src_.label(src_idx) + ") has shift outside declared order " +
                declared_.str());
        auto [it, fresh] = entries_.insert({dst_idx, src_idx});
        if (!fresh) entries_.erase(it); // adding twice over GF(2) cancels
    }

    GradedSpace src_, dst_;
    std::set<Entry> entries_;
    OrderInterval declared_;
};

// True iff every nonzero entry's grade shift lies in I (the zero map is of
// every order).
inline bool check_order(const OrderMap& f, const OrderInterval& I) {
    for (auto& e : f.entries())
        if (!I.contains(f.shift(e))) return false;
    return true;
}

// Splits f into (low, high): low carries exactly the entries with grade shift
// < theta, high the rest; low + high = f over GF(2).
inline std::pair<OrderMap, OrderMap> split_at(const OrderMap& f, double theta) {
    double min_shift = kInf;
    for (auto& e : f.entries())
        if (f.shift(e) < theta) min_shift = std::min(min_shift, f.shift(e));
    if (min_shift == kInf) min_shift = theta - 1.0; // low part empty
    OrderMap low(f.src(), f.dst(), OrderInterval::half_open(min_shift, theta));
    OrderMap high(f.src(), f.dst(), OrderInterval::half_open(theta, kInf));
    for (auto& e : f.entries()) {
        auto& part = f.shift(e) < theta ? low : high;
        part.add_entry(f.dst().label(e.first), f.src().label(e.second));
    }
    return {low, high};
}

// A graded space with a square-zero differential.  The differential of a
// Floer cochain complex is of order (0; inf); the total complex of an exact
// triple only manages [0; inf), so that is what the type requires.
class DifferentialSpace {
  public:
    DifferentialSpace() = default;
    DifferentialSpace(GradedSpace space, OrderMap d)
        : space_(std::move(space)), d_(std::move(d)) {
        if (!(d_.src() == space_) || !(d_.dst() == space_))
            throw InvalidParameter("DifferentialSpace: d must be an endomorphism");
        if (!check_order(d_, OrderInterval::nonnegative()))
            throw InvalidParameter(
                "DifferentialSpace: differential has a negative grade shift");
        if (!compose(d_, d_).is_zero())
            throw ExactnessViolation("DifferentialSpace: d*d != 0");
    }

    static DifferentialSpace zero_differential(GradedSpace space) {
        OrderMap d = OrderMap::zero(space, space, OrderInterval::positive());
        return DifferentialSpace(std::move(space), std::move(d));
    }

    const GradedSpace& space() const { return space_; }
    const OrderMap& d() const { return d_; }

  private:
    GradedSpace space_;
    OrderMap d_;
};

// dim ker(d) - rank(d) by Gaussian elimination; deterministic.
inline std::size_t cohomology_rank(const DifferentialSpace& D) {
    std::size_t n = D.space().dim();
    std::size_t r = D.d().rank();
    return n - 2 * r;
}

enum class SpectralVerdict { Vanishes, Inconclusive, HypothesisFailed };

inline const char* to_string(SpectralVerdict v) {
    switch (v) {
        case SpectralVerdict::Vanishes: return "Vanishes";
        case SpectralVerdict::Inconclusive: return "Inconclusive";
        case SpectralVerdict::HypothesisFailed: return "HypothesisFailed";
    }
    return "?";
}

// Collapse criterion for a differential of order [0; inf): if the space has
// gap [eps; 2 eps), the part delta of d with shift in [0; eps) is itself a
// differential, and H(delta) = 0 forces H(d) = 0.
inline SpectralVerdict spectral_vanishing(const DifferentialSpace& D, double epsilon) {
    if (!(epsilon > 0))
        throw InvalidParameter("spectral_vanishing: epsilon must be positive");
    if (!has_gap(D.space(), OrderInterval::half_open(epsilon, 2 * epsilon)))
        return SpectralVerdict::HypothesisFailed;
    auto [delta, rest] = split_at(D.d(), epsilon);
    if (!compose(delta, delta).is_zero())
        throw ExactnessViolation(
            "spectral_vanishing: low-order part fails delta*delta = 0 despite gap");
    DifferentialSpace low(D.space(), delta);
    if (cohomology_rank(low) != 0) return SpectralVerdict::Inconclusive;
    if (cohomology_rank(D) != 0)
        throw ExactnessViolation(
            "spectral_vanishing: H(delta) = 0 but H(d) != 0, collapse argument broken");
    return SpectralVerdict::Vanishes;
}

} // namespace floertwist::graded
