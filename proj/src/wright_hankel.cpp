// Loop-integral representation of the Wright function, used only as a
// cross-check oracle against the series/saddle evaluator.
//
//   phi(rho,mu;z) = (1/2 pi i) \oint exp(sigma + z sigma^{-rho}) sigma^{-mu} dsigma
//
// realized as two rays at angles +-(pi - 0.1) joined by an arc of radius
// max(1, |z|^{1/(1+rho)}); Gauss-Legendre panels with doubling until two
// consecutive refinements agree.

#include <algorithm>
#include <cmath>
#include <vector>

#include "fracairy/special_functions.hpp"
#include "quad_math.hpp"

namespace fracairy {

using detail::qcomplex;
using detail::qreal;
using detail::to_double;

namespace {

struct QRule {
    std::vector<qreal> x, w;
};

// Legendre nodes refined in binary128 (double Newton start, two quad steps).
QRule qgauss(int n) {
    QRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        qreal x = cosq(M_PIq * (i + 0.75Q) / (n + 0.5Q));
        qreal dp = 0;
        for (int it = 0; it < 60; ++it) {
            qreal p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                qreal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            qreal dx = p1 / dp;
            x -= dx;
            if (fabsq(dx) < 1e-32Q) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        qreal w = 2.0Q / ((1 - x * x) * dp * dp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

const QRule& qrule24() {
    static const QRule r = qgauss(24);
    return r;
}

template <class F>
qcomplex qpanel(const F& f, qreal a, qreal b) {
    const QRule& r = qrule24();
    qreal c = (a + b) / 2, h = (b - a) / 2;
    qcomplex s{0, 0};
    for (size_t i = 0; i < r.x.size(); ++i) {
        qcomplex v = f(c + h * r.x[i]);
        s = s + r.w[i] * v;
    }
    return h * s;
}

template <class F>
qcomplex qcomposite(const F& f, qreal a, qreal b, int panels) {
    qcomplex s{0, 0};
    for (int i = 0; i < panels; ++i) {
        qreal pa = a + (b - a) * i / panels;
        qreal pb = a + (b - a) * (i + 1) / panels;
        s = s + qpanel(f, pa, pb);
    }
    return s;
}

template <class F>
qcomplex qadaptive(const F& f, qreal a, qreal b, double tol_abs, int start_panels,
                   double* achieved) {
    qcomplex prev = qcomposite(f, a, b, start_panels);
    int ok = 0;
    for (int p = start_panels * 2; p <= 8192; p *= 2) {
        qcomplex cur = qcomposite(f, a, b, p);
        double diff = to_double(qabs(cur - prev));
        prev = cur;
        ok = (diff <= tol_abs) ? ok + 1 : 0;
        if (ok >= 2) {
            *achieved = diff;
            return cur;
        }
    }
    throw QuadratureFailure("contour quadrature did not converge");
}

} // namespace

EvalResult wright_phi_hankel(const WrightParams& params, std::complex<double> z,
                             const WrightOptions& opts) {
    if (!(params.rho > -1.0 && params.rho < 0.0))
        throw DomainError("Wright parameter rho must lie in (-1,0)");
    const qreal delta = (qreal)(-params.rho);
    const qreal mu = (qreal)params.mu;
    const qcomplex zq(z);
    const qreal absz = detail::qabs(zq);

    const qreal eps0 = 0.1Q;
    const qreal psi = M_PIq - eps0;
    const qreal R = fmaxq((qreal)1, powq(absz, 1 / (1 - delta)));

    auto integrand = [&](qcomplex sigma) {
        return detail::qexp(sigma + zq * detail::qpow(sigma, delta) - mu * detail::qlog(sigma));
    };

    // arc sigma = R e^{i theta}, contributes (1/2pi) int e^{...} sigma^{1-mu} dtheta
    auto arc = [&](qreal th) {
        qcomplex sigma{R * cosq(th), R * sinq(th)};
        return integrand(sigma) * sigma;
    };
    // rays sigma = r e^{+-i psi}: (1/2pi i)[ int_up e^{i psi} - int_down e^{-i psi} ] dr
    qcomplex eup{cosq(psi), sinq(psi)};
    qcomplex edn{cosq(psi), -sinq(psi)};
    auto ray_up = [&](qreal r) { return integrand(r * eup) * eup; };
    auto ray_dn = [&](qreal r) { return integrand(r * edn) * edn; };

    // truncate the rays where the integrand magnitude is negligible
    qreal rmax = R + 60;
    for (int it = 0; it < 80; ++it) {
        qreal expo = -rmax * cosq(eps0) + absz * powq(rmax, delta) + fabsq(mu) * logq(rmax);
        if (expo < -120.0Q) break;
        rmax *= 1.5Q;
    }

    const double tol = std::max(2e-12, 10.0 * opts.tol);
    double a1 = 0, a2 = 0, a3 = 0;
    qcomplex I_arc = qadaptive(arc, -psi, psi, tol, 4, &a1);
    qcomplex I_up = qadaptive(ray_up, R, rmax, tol, 4, &a2);
    qcomplex I_dn = qadaptive(ray_dn, R, rmax, tol, 4, &a3);

    const qreal twopi = 2 * M_PIq;
    // 1/(2 pi i) * (i * I_arc_theta-form) = I_arc / (2 pi); ray parts divide by 2 pi i
    qcomplex val = I_arc / twopi + (I_up - I_dn) / qcomplex{0, twopi};

    EvalResult out;
    out.value = val.to_std();
    out.abs_error_estimate = (a1 + a2 + a3) + to_double(qabs(val)) * 1e-25 + 1e-300;
    out.terms_used = 1;
    return out;
}

} // namespace fracairy
