#pragma once

// Small Gauss-Legendre toolkit: fixed rules, composite panels, and a
// recursive bisection driver. Everything is deterministic.

#include <cmath>
#include <functional>
#include <vector>

#include "fracairy/errors.hpp"

namespace fracairy {

struct GaussRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

// Nodes by Newton iteration on the Legendre recurrence.
inline GaussRule gauss_legendre(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1 - x * x) * dp * dp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

inline const GaussRule& gauss_rule_cached(int n) {
    static const GaussRule g8 = gauss_legendre(8);
    static const GaussRule g12 = gauss_legendre(12);
    static const GaussRule g16 = gauss_legendre(16);
    static const GaussRule g24 = gauss_legendre(24);
    static const GaussRule g32 = gauss_legendre(32);
    switch (n) {
        case 8: return g8;
        case 12: return g12;
        case 16: return g16;
        case 24: return g24;
        default: return g32;
    }
}

template <class F>
double gauss_panel(const F& f, double a, double b, const GaussRule& r) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0;
    for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(c + h * r.nodes[i]);
    return s * h;
}

namespace detail_quad {
template <class F>
double adapt_rec(const F& f, double a, double b, double whole, double tol,
                 const GaussRule& r, int depth, int max_depth, bool* ok) {
    double m = 0.5 * (a + b);
    double left = gauss_panel(f, a, m, r);
    double right = gauss_panel(f, m, b, r);
    double delta = left + right - whole;
    if (std::abs(delta) <= tol || depth >= max_depth) {
        if (std::abs(delta) > tol) *ok = false;
        return left + right;
    }
    return adapt_rec(f, a, m, left, 0.5 * tol, r, depth + 1, max_depth, ok) +
           adapt_rec(f, m, b, right, 0.5 * tol, r, depth + 1, max_depth, ok);
}
} // namespace detail_quad

// Adaptive bisection with a GL16 base rule; throws GridTooCoarse if the
// requested absolute tolerance is not met within max_depth.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double tol_abs,
                          int max_depth = 24, bool throw_on_failure = true) {
    if (a == b) return 0.0;
    const GaussRule& r = gauss_rule_cached(16);
    bool ok = true;
    double whole = gauss_panel(f, a, b, r);
    double v = detail_quad::adapt_rec(f, a, b, whole, tol_abs, r, 0, max_depth, &ok);
    if (!ok && throw_on_failure)
        throw GridTooCoarse("adaptive quadrature did not reach requested tolerance");
    return v;
}

// Composite rule over explicit breakpoints.
template <class F>
double integrate_panels(const F& f, const std::vector<double>& brk, int n_nodes = 12) {
    const GaussRule& r = gauss_rule_cached(n_nodes);
    double s = 0;
    for (size_t i = 0; i + 1 < brk.size(); ++i) s += gauss_panel(f, brk[i], brk[i + 1], r);
    return s;
}

// Geometric breakpoints a, a*q, ..., b (a > 0).
inline std::vector<double> log_breakpoints(double a, double b, int n_panels) {
    std::vector<double> brk(n_panels + 1);
    double la = std::log(a), lb = std::log(b);
    for (int i = 0; i <= n_panels; ++i) brk[i] = std::exp(la + (lb - la) * i / n_panels);
    brk.front() = a;
    brk.back() = b;
    return brk;
}

} // namespace fracairy
