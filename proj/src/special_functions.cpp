#include "fracairy/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "wright_internal.hpp"

namespace fracairy {
namespace detail {

namespace {

uint64_t bits_of(double x) {
    uint64_t u;
    std::memcpy(&u, &x, sizeof u);
    return u;
}

// ---- reciprocal-gamma coefficient tables, cached per (rho, mu) ----

using CoeffVec = std::vector<qreal>;

std::shared_ptr<const CoeffVec> wright_coeffs(double rho, double mu, size_t count) {
    static std::map<std::pair<uint64_t, uint64_t>, std::shared_ptr<const CoeffVec>> cache;
    static std::shared_mutex mtx;
    const auto key = std::make_pair(bits_of(rho), bits_of(mu));
    {
        std::shared_lock lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->size() >= count) return it->second;
    }
    std::unique_lock lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->size() >= count) return it->second;
    auto vec = std::make_shared<CoeffVec>();
    if (it != cache.end()) *vec = *it->second;
    size_t n0 = vec->size();
    vec->resize(count);
    for (size_t n = n0; n < count; ++n)
        (*vec)[n] = reciprocal_gamma_q((qreal)rho * (qreal)n + (qreal)mu);
    cache[key] = vec;
    return vec;
}

void validate_params(double rho, double mu) {
    if (!(rho > -1.0 && rho < 0.0))
        throw DomainError("Wright parameter rho must lie in (-1,0)");
    if (!std::isfinite(mu)) throw DomainError("Wright parameter mu must be finite");
}

// ---- series path ----

WrightEval wright_series_q(double rho, double mu, qcomplex z, const WrightOptions& opts,
                           bool* converged) {
    const qreal delta = (qreal)(-rho);
    const qreal absz = qabs(z);
    const qreal absmu = fabsq((qreal)mu);
    const qreal tolq = (qreal)opts.tol;
    const qreal floorq = (qreal)opts.abs_floor;

    auto coeffs = wright_coeffs(rho, mu, (size_t)opts.term_cap + 1);
    const CoeffVec& c = *coeffs;

    qcomplex sum{0, 0}, p{1, 0};
    qreal maxt = 0, env = 0, tail = HUGE_VALQ;
    int n = 0;
    *converged = false;
    for (; n <= opts.term_cap; ++n) {
        qcomplex t = c[(size_t)n] * p;
        sum = sum + t;
        qreal at = qabs(t);
        if (at > maxt) maxt = at;
        env = (at > env) ? at : env;
        // envelope ratio bound for the next term (log-convexity of Gamma)
        qreal r = absz * powq(2 + delta * (n + 1) + absmu, delta) / (n + 1);
        env = env * (r > 1 ? r : 1);
        if (n >= 6 && r < 0.95Q) {
            tail = env * r / (1 - r);
            if (tail <= tolq * qabs(sum) || tail <= 0.25Q * floorq) {
                ++n;
                *converged = true;
                break;
            }
        }
        p = p * z;
        p = p / (qreal)(n + 1);
    }
    WrightEval out;
    out.value = sum;
    out.terms = std::min(n + 1, opts.term_cap + 1);
    double rounding = to_double(maxt) * (double)Q_EPS * (out.terms + 32);
    double tail_d = (tail == HUGE_VALQ) ? to_double(env) : to_double(tail);
    out.abs_err = tail_d + rounding;
    if (*converged) out.abs_err = std::min(out.abs_err, tail_d + rounding);
    return out;
}

// ---- steepest-descent path (decay sector, |saddle| >= ~10) ----

WrightEval wright_saddle_q(double rho, double mu, qcomplex z) {
    const qreal delta = (qreal)(-rho);
    if (z.im < 0) { // phi has real series coefficients
        qcomplex zc{z.re, -z.im};
        WrightEval e = wright_saddle_q(rho, mu, zc);
        e.value.im = -e.value.im;
        return e;
    }
    const qreal R = qabs(z);
    const qreal th = atan2q(z.im, z.re);
    const qreal one_m = 1 - delta;
    const qreal amag = powq(delta * R, 1 / one_m);
    const qreal aarg = (th - M_PIq) / one_m;
    qcomplex a{amag * cosq(aarg), amag * sinq(aarg)};
    qcomplex g = a + z * qpow(a, delta);
    qcomplex logv = g + ((qreal)0.5 - (qreal)mu) * qlog(a);
    qcomplex val = qexp(logv) / sqrtq(2 * M_PIq * one_m);
    qreal mq = (qreal)mu;
    qcomplex chi = (mq * (one_m - mq) / 2 + (2 - delta) * (2 * delta - 1) / 24) /
                   (one_m * a);
    val = val * (qcomplex{1, 0} + chi);
    WrightEval out;
    out.value = val;
    double am = to_double(amag);
    double ac = to_double(qabs(chi));
    // next-order residual; constant validated against the extended-precision
    // oracle over the in-scope (delta, mu) window
    out.abs_err = to_double(qabs(val)) * (2.0 / (am * am) + 10.0 * ac * ac) + 1e-300;
    out.terms = 1;
    return out;
}

} // namespace

double wright_nu_sup(double delta, double absarg) {
    double c = std::cos((M_PI - absarg) / (1.0 - delta));
    return (1.0 - delta) * std::pow(delta, delta / (1.0 - delta)) * c;
}

bool wright_in_decay_sector(double delta, double absarg) {
    return absarg > (1.0 + delta) * M_PI / 2.0 + 1e-12 && absarg <= M_PI + 1e-12;
}

WrightEval wright_eval_q(double rho, double mu, qcomplex z, const WrightOptions& opts) {
    validate_params(rho, mu);
    const double delta = -rho;
    const double absz = to_double(qabs(z));
    if (absz == 0.0) {
        qreal v = reciprocal_gamma_q((qreal)mu);
        return {qcomplex{v, 0}, std::abs(to_double(v)) * 1e-30 + 1e-300, 1};
    }
    const double absarg = std::abs(std::atan2(to_double(z.im), to_double(z.re)));
    const bool decay = wright_in_decay_sector(delta, absarg);
    const double amag = std::pow(delta * absz, 1.0 / (1.0 - delta));

    WrightEval best;
    bool have_best = false;
    if (decay && amag >= 10.0) {
        best = wright_saddle_q(rho, mu, z);
        have_best = true;
        // deep tail: do not bother with the series
        if (to_double(qabs(best.value)) + best.abs_err <= 0.25 * opts.abs_floor)
            return best;
    }

    // series viability: peak term ~ exp(E_pi), post-peak width ~ sqrt(n*/(1-d))
    const double nstar = std::pow(absz * std::pow(delta, delta), 1.0 / (1.0 - delta));
    const double e_pi = (1.0 - delta) * amag / delta;
    const double width = std::sqrt(std::max(nstar, 1.0) / (1.0 - delta));
    const double need = nstar + 0.8 * width * std::sqrt(2.0 * (e_pi + 86.0)) + 16.0;
    if (need <= (double)opts.term_cap) {
        bool conv = false;
        WrightEval s = wright_series_q(rho, mu, z, opts, &conv);
        double sv = to_double(qabs(s.value));
        if (conv && s.abs_err <= std::max(8.0 * opts.tol * sv, opts.abs_floor)) return s;
        if (!have_best || s.abs_err < best.abs_err) {
            best = s;
            have_best = true;
        }
    }
    if (have_best) {
        double bv = to_double(qabs(best.value));
        if (best.abs_err <= std::max(1e-3 * bv, 4.0 * opts.abs_floor)) return best;
    }
    throw NonConvergence("Wright series/saddle evaluation failed: |z| too large for the "
                         "series regime and argument outside the decay sector");
}

double wright_tail_bound_on_ray(double rho, double mu, double absz, double absarg) {
    const double delta = -rho;
    if (!wright_in_decay_sector(delta, absarg))
        throw SectorViolation("argument outside the decay sector (1+delta)pi/2 < |arg z| <= pi");
    const double nu_cal = 0.9 * wright_nu_sup(delta, absarg);

    struct CalKey {
        uint64_t r, m;
        int64_t arg_q;
        bool operator<(const CalKey& o) const {
            return std::tie(r, m, arg_q) < std::tie(o.r, o.m, o.arg_q);
        }
    };
    static std::map<CalKey, double> cache;
    static std::shared_mutex mtx;
    CalKey key{bits_of(rho), bits_of(mu), (int64_t)std::llround(absarg * 1e12)};
    double C = 0.0;
    bool found = false;
    {
        std::shared_lock lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) {
            C = it->second;
            found = true;
        }
    }
    if (!found) {
        // calibrate on the series-tractable window of this ray
        const double z_hi = std::pow(300.0, 1.0 - delta) / std::pow(delta, delta);
        const double z_lo = std::min(2.0, 0.45 * z_hi);
        const double inv = 1.0 / (1.0 - delta);
        WrightOptions o;
        o.tol = 1e-13;
        o.abs_floor = 1e-280;
        o.term_cap = 500;
        double cmax = 1e-280;
        for (int i = 0; i < 24; ++i) {
            double r = z_lo * std::pow(z_hi / z_lo, i / 23.0);
            qcomplex zz{(qreal)(r * std::cos(absarg)), (qreal)(r * std::sin(absarg))};
            bool conv = false;
            WrightEval e = wright_series_q(rho, mu, zz, o, &conv);
            double v = to_double(qabs(e.value)) + e.abs_err;
            cmax = std::max(cmax, v * std::exp(nu_cal * std::pow(r, inv)));
        }
        C = 1.1 * cmax;
        std::unique_lock lk(mtx);
        cache[key] = C;
    }
    return C * std::exp(-nu_cal * std::pow(absz, 1.0 / (1.0 - delta)));
}

} // namespace detail

using detail::qcomplex;
using detail::qreal;

EvalResult wright_phi(const WrightParams& params, std::complex<double> z,
                      const WrightOptions& opts) {
    detail::WrightEval e = detail::wright_eval_q(params.rho, params.mu, qcomplex(z), opts);
    return {e.value.to_std(), e.abs_err, e.terms};
}

EvalResult m_wright(double nu, std::complex<double> z, const WrightOptions& opts) {
    if (!(nu > 0.0 && nu < 1.0)) throw DomainError("m_wright requires nu in (0,1)");
    return wright_phi({-nu, 1.0 - nu}, -z, opts);
}

EvalResult f_wright(double nu, std::complex<double> z, const WrightOptions& opts) {
    if (!(nu > 0.0 && nu < 1.0)) throw DomainError("f_wright requires nu in (0,1)");
    return wright_phi({-nu, 0.0}, -z, opts);
}

double wright_tail_bound(const WrightParams& params, std::complex<double> z) {
    detail::validate_params(params.rho, params.mu);
    double absarg = std::abs(std::arg(z));
    return detail::wright_tail_bound_on_ray(params.rho, params.mu, std::abs(z), absarg);
}

double wright_decay_threshold(double delta) {
    const double z_hi = std::pow(300.0, 1.0 - delta) / std::pow(delta, delta);
    return std::min(2.0, 0.6 * z_hi);
}

double mittag_leffler(const MLParams& params, double z) {
    if (!(params.alpha > 0.0)) throw OrderOutOfRange("Mittag-Leffler requires alpha > 0");
    if (!std::isfinite(z)) throw DomainError("Mittag-Leffler argument must be finite");
    const qreal a = (qreal)params.alpha, m = (qreal)params.mu;
    const int cap = 4096;
    qreal sum = 0;
    const qreal lz = (z == 0.0) ? 0 : logq(fabsq((qreal)z));
    for (int n = 0; n < cap; ++n) {
        qreal x = a * n + m;
        qreal t;
        if (n == 0) {
            t = detail::reciprocal_gamma_q(m);
        } else if (z == 0.0) {
            break;
        } else {
            if (x >= 0.5Q) {
                t = expq((qreal)n * lz - lgammaq(x));
            } else {
                t = expq((qreal)n * lz) * detail::reciprocal_gamma_q(x);
            }
            if (z < 0 && (n & 1)) t = -t;
        }
        sum += t;
        if (n >= 2) {
            // next-term ratio overestimate: Gamma(x)/Gamma(x+a) <= (x-1/2)^{-a}
            qreal r = fabsq((qreal)z) * powq(fmaxq(x - 0.5Q, 0.5Q), -a);
            if (r < 0.9Q && fabsq(t) * r / (1 - r) <= 1e-18Q * fabsq(sum) + 1e-300Q)
                return detail::to_double(sum);
        }
    }
    if (z == 0.0) return detail::to_double(sum);
    throw NonConvergence("Mittag-Leffler series did not converge within the term cap");
}

double reciprocal_gamma(double x) {
    return detail::to_double(detail::reciprocal_gamma_q((qreal)x));
}

} // namespace fracairy
