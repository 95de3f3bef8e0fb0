#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "floertwist/errors.hpp"

namespace floertwist::local {

using Vec = std::vector<double>;
using CVec = std::vector<std::complex<double>>;

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidParameter("dot: size mismatch");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec scaled(const Vec& a, double c) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidParameter("add: size mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidParameter("sub: size mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec axpy(double c, const Vec& x, const Vec& y) { return add(scaled(x, c), y); }

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

inline Vec real_part(const CVec& x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].real();
    return out;
}

inline Vec imag_part(const CVec& x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].imag();
    return out;
}

inline CVec to_complex(const Vec& re, const Vec& im) {
    if (re.size() != im.size()) throw InvalidParameter("to_complex: size mismatch");
    CVec out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
    return out;
}

inline CVec cscaled(const CVec& x, std::complex<double> c) {
    CVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
    return out;
}

inline CVec cadd(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw InvalidParameter("cadd: size mismatch");
    CVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline CVec conj(const CVec& x) {
    CVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::conj(x[i]);
    return out;
}

// Hermitian squared norm sum |x_k|^2.
inline double cnorm2(const CVec& x) {
    double s = 0;
    for (auto& v : x) s += std::norm(v);
    return s;
}

inline double cdist(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw InvalidParameter("cdist: size mismatch");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace floertwist::local
