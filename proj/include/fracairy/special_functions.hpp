#pragma once

#include <complex>

#include "fracairy/errors.hpp"

namespace fracairy {

// First parameter rho in (-1,0); second parameter mu (real covers all
// in-scope uses, so it is stored as double).
struct WrightParams {
    double rho;
    double mu;
};

struct EvalResult {
    std::complex<double> value;
    double abs_error_estimate = 0.0;
    int terms_used = 1;
};

struct MLParams {
    double alpha;
    double mu = 1.0;
};

struct WrightOptions {
    double tol = 1e-12;        // relative series-tail target
    double abs_floor = 1e-16;  // absolute accuracy floor; deep-tail values below
                               // it may be flushed toward zero with an honest
                               // error estimate
    int term_cap = 500;
};

// phi(rho,mu;z) = sum z^n / (n! Gamma(rho n + mu)). Series with binary128
// accumulation; in the decay sector large arguments switch to a steepest-
// descent evaluation. Throws NonConvergence when no path reaches an
// acceptable error estimate.
EvalResult wright_phi(const WrightParams& params, std::complex<double> z,
                      const WrightOptions& opts = {});

// Loop-integral cross-check oracle (two rays at +-(pi-0.1) plus an arc of
// radius max(1,|z|^{1/(1+rho)})). Never used by the kernel evaluators.
EvalResult wright_phi_hankel(const WrightParams& params, std::complex<double> z,
                             const WrightOptions& opts = {});

// M_nu(z) = phi(-nu, 1-nu; -z),  F_nu(z) = phi(-nu, 0; -z),  F_nu = nu z M_nu.
EvalResult m_wright(double nu, std::complex<double> z, const WrightOptions& opts = {});
EvalResult f_wright(double nu, std::complex<double> z, const WrightOptions& opts = {});

// C * exp(-nu_cal |z|^{1/(1-delta)}) with nu_cal = 0.9 * sup and C calibrated
// against the series on a per-(rho,mu,arg) window. Valid (and only defined)
// for (1+delta)pi/2 < |arg z| <= pi; throws SectorViolation otherwise.
double wright_tail_bound(const WrightParams& params, std::complex<double> z);

// |z| above which the calibrated bound is asserted to dominate |phi|.
double wright_decay_threshold(double delta);

// E_{alpha,mu}(z) = sum z^n / Gamma(alpha n + mu), alpha > 0.
double mittag_leffler(const MLParams& params, double z);

// 1/Gamma as an entire function (zero at the poles of Gamma).
double reciprocal_gamma(double x);

} // namespace fracairy
