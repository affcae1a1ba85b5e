#pragma once

// Internal binary128 helpers built on libquadmath. The public API works in
// double; the Wright-series and contour paths accumulate in __float128 because
// in-sector arguments cancel down from terms of size exp(+E) to values of
// size exp(-E).

#include <quadmath.h>

#include <cmath>
#include <complex>

namespace fracairy::detail {

using qreal = __float128;

inline constexpr qreal Q_EPS = 1.92592994438723585305597794258492732e-34Q;

inline double to_double(qreal x) { return static_cast<double>(x); }

struct qcomplex {
    qreal re = 0, im = 0;
    qcomplex() = default;
    qcomplex(qreal r) : re(r) {}
    qcomplex(qreal r, qreal i) : re(r), im(i) {}
    qcomplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}
    std::complex<double> to_std() const { return {to_double(re), to_double(im)}; }
};

inline qcomplex operator+(qcomplex a, qcomplex b) { return {a.re + b.re, a.im + b.im}; }
inline qcomplex operator-(qcomplex a, qcomplex b) { return {a.re - b.re, a.im - b.im}; }
inline qcomplex operator*(qcomplex a, qcomplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline qcomplex operator*(qreal s, qcomplex a) { return {s * a.re, s * a.im}; }
inline qcomplex operator/(qcomplex a, qreal s) { return {a.re / s, a.im / s}; }
inline qcomplex operator/(qcomplex a, qcomplex b) {
    qreal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline qreal qabs(qcomplex a) { return hypotq(a.re, a.im); }

inline qcomplex qexp(qcomplex a) {
    qreal m = expq(a.re);
    return {m * cosq(a.im), m * sinq(a.im)};
}
inline qcomplex qlog(qcomplex a) { return {logq(qabs(a)), atan2q(a.im, a.re)}; }
inline qcomplex qpow(qcomplex a, qreal s) {
    if (a.re == 0 && a.im == 0) return {0, 0};
    return qexp(s * qlog(a));
}

// sin(pi*x) with exact integer reduction; accurate near the zeros.
inline qreal sin_pi_q(qreal x) {
    qreal m = nearbyintq(x);
    qreal r = x - m; // exact
    qreal s = sinq(M_PIq * r);
    return (fmodq(fabsq(m), 2) == 1) ? -s : s;
}

// 1/Gamma(x) as an entire function: smooth through the poles of Gamma, where
// it crosses zero. This is the production path for series coefficients.
inline qreal reciprocal_gamma_q(qreal x) {
    if (x >= 0.5Q) {
        return expq(-lgammaq(x));
    }
    // reflection: 1/Gamma(x) = sin(pi x)/pi * Gamma(1-x)
    qreal lg = lgammaq(1 - x);
    if (lg > 11300.0Q) { // Gamma(1-x) overflows binary128; split the exponent
        qreal s = sin_pi_q(x) / M_PIq;
        return s * expq(lg - 11000.0Q) * expq(11000.0Q);
    }
    return sin_pi_q(x) / M_PIq * expq(lg);
}

} // namespace fracairy::detail
