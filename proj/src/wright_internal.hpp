#pragma once

// Shared internals of the Wright-function evaluator; used by the public
// special_functions API and directly by the kernel evaluators.

#include "fracairy/special_functions.hpp"
#include "quad_math.hpp"

namespace fracairy::detail {

struct WrightEval {
    qcomplex value;
    double abs_err = 0.0;
    int terms = 1;
};

// Full evaluation policy: series where viable, steepest descent in the decay
// sector, honest error estimates. Throws NonConvergence when nothing works.
WrightEval wright_eval_q(double rho, double mu, qcomplex z, const WrightOptions& opts);

// sup_nu of the exponential decay estimate at argument angle absarg.
double wright_nu_sup(double delta, double absarg);

bool wright_in_decay_sector(double delta, double absarg);

// Calibrated bound C * exp(-0.9 nu_sup |z|^{1/(1-delta)}) on the ray absarg.
double wright_tail_bound_on_ray(double rho, double mu, double absz, double absarg);

} // namespace fracairy::detail
