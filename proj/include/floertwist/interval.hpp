#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "floertwist/errors.hpp"

namespace floertwist::graded {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// An interval of real grade shifts.  Endpoints may be +-infinity, in which
// case that side is forced open.  A degenerate closed point {r} is allowed;
// a degenerate half-open or open interval is empty.
struct OrderInterval {
    double lo = -kInf;
    double hi = kInf;
    bool lo_closed = false;
    bool hi_closed = false;

    OrderInterval() = default;
    OrderInterval(double lo_, double hi_, bool lo_closed_, bool hi_closed_)
        : lo(lo_), hi(hi_), lo_closed(lo_closed_), hi_closed(hi_closed_) {
        if (std::isnan(lo) || std::isnan(hi) || lo > hi)
            throw InvalidParameter("OrderInterval: need lo <= hi");
        if (std::isinf(lo)) lo_closed = false;
        if (std::isinf(hi)) hi_closed = false;
    }

    static OrderInterval open(double a, double b) { return {a, b, false, false}; }
    static OrderInterval closed(double a, double b) { return {a, b, true, true}; }
    // [a; b)
    static OrderInterval half_open(double a, double b) { return {a, b, true, false}; }
    static OrderInterval point(double r) { return {r, r, true, true}; }
    static OrderInterval all() { return {-kInf, kInf, false, false}; }
    // (0; inf), the order of a Floer differential
    static OrderInterval positive() { return {0.0, kInf, false, false}; }
    static OrderInterval nonnegative() { return {0.0, kInf, true, false}; }

    bool contains(double x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && !lo_closed) return false;
        if (x == hi && !hi_closed) return false;
        return true;
    }

    bool empty() const { return lo == hi && !(lo_closed && hi_closed); }

    bool contains_interval(const OrderInterval& in) const {
        if (in.empty()) return true;
        bool lo_ok = in.lo > lo || (in.lo == lo && (lo_closed || !in.lo_closed));
        bool hi_ok = in.hi < hi || (in.hi == hi && (hi_closed || !in.hi_closed));
        return lo_ok && hi_ok;
    }

    // Smallest interval containing both; used for sums of maps.
    static OrderInterval hull(const OrderInterval& a, const OrderInterval& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        double lo = std::min(a.lo, b.lo);
        double hi = std::max(a.hi, b.hi);
        bool lc = (a.lo == lo && a.lo_closed) || (b.lo == lo && b.lo_closed);
        bool hc = (a.hi == hi && a.hi_closed) || (b.hi == hi && b.hi_closed);
        return {lo, hi, lc, hc};
    }

    // Minkowski sum; the order of a composition of maps.
    static OrderInterval sum(const OrderInterval& a, const OrderInterval& b) {
        double lo = a.lo + b.lo;
        double hi = a.hi + b.hi;
        if (std::isnan(lo)) lo = -kInf;
        if (std::isnan(hi)) hi = kInf;
        return {lo, hi, a.lo_closed && b.lo_closed, a.hi_closed && b.hi_closed};
    }

    bool operator==(const OrderInterval& o) const = default;

    std::string str() const {
        auto num = [](double x) {
            if (x == kInf) return std::string("inf");
            if (x == -kInf) return std::string("-inf");
            return std::to_string(x);
        };
        return std::string(lo_closed ? "[" : "(") + num(lo) + "; " + num(hi) +
               (hi_closed ? "]" : ")");
    }
};

} // namespace floertwist::graded
