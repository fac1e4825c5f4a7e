#pragma once

#include "gxpeakon/solve.hpp"
#include "gxpeakon/types.hpp"

namespace gx {

/// Field values at one query point. ux and vx are the mean of the
/// one-sided derivatives, so they vanish at a lone peak (sgn(0) = 0 for
/// the self term). |ux| <= u and |vx| <= v hold term by term.
struct FieldSample {
    double u = 0.0, ux = 0.0;
    double v = 0.0, vx = 0.0;
};

/// u(xq) = sum m_i exp(-|xq - x_i|) and its derivative, likewise v from
/// the (y, n) component.
FieldSample eval_fields(const PeakonState& state, double xq);

/// Right-hand side of the peakon ODE system, with the amplitude
/// equations in logarithmic form:
///   dx/dt      = u v            at each x,
///   dy/dt      = u v            at each y,
///   d(ln m)/dt = u vx - 2 ux v  at each x,
///   d(ln n)/dt = ux v - 2 u vx  at each y.
/// Throws std::domain_error if an x position coincides with a y position
/// (overlapping peakons are outside the pure peakon sector).
struct OdeRates {
    std::vector<std::vector<double>> dx, dlog_m;
    std::vector<std::vector<double>> dy, dlog_n;
};
/// With `resolve_ties_by_chain_order` the sign of x_i - x_q for two
/// distinct peakons whose computed positions coincide (possible at large
/// |t|, where gaps shrink like exp(-c|t|) and underflow double
/// resolution) is taken from the chain order instead of throwing. States
/// that genuinely overlap (user input with x_i == y_j) are rejected in
/// the default strict mode.
OdeRates ode_rhs(const PeakonState& state, bool resolve_ties_by_chain_order = false);

/// Classical fixed-step RK4 from state0.t to t1 in `steps` steps,
/// integrating (x, y, ln m, ln n). Throws std::runtime_error if the
/// strict chain ordering breaks at a step boundary (it never does for a
/// valid pure peakon configuration unless the step is far too coarse).
PeakonState integrate(const PeakonState& state0, double t1, int steps);

/// Max relative defect of the closed form against the ODE right-hand
/// side at time t: central differences with step h of every x, y, ln m,
/// ln n are compared to ode_rhs on the closed-form state, and the max of
/// |difference - rhs| / (1 + |rhs|) is returned.
double ode_residual(const Solver& solver, double t, double h);

}  // namespace gx
