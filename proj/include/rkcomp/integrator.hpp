#pragma once

#include <memory>

#include "rkcomp/multideriv.hpp"
#include "rkcomp/ode.hpp"
#include "rkcomp/tableau.hpp"

namespace rkcomp {

/// One step of the Runge-Kutta method given by `tab`. Implicit stage
/// systems are solved by simplified Newton with the Jacobian frozen at
/// (t, y); strictly lower-triangular tableaux are evaluated explicitly.
StepRecord rk_step(const ButcherTableau& tab, const OdeProblem& problem, double t,
                   const Vec& y, double h, const NewtonOptions& opts = {},
                   NewtonStats* stats = nullptr);

/// One step of the fourth-order Gauss method that also emits the half-step
/// point of its implicit-Euler-like factor: the two-stage system is solved
/// once, the end state uses the Gauss weights and y_half the factor weights
/// over the same stages. stats->solves increments by exactly one.
StepRecord gauss4_composed_step(const OdeProblem& problem, double t, const Vec& y, double h,
                                const NewtonOptions& opts = {}, NewtonStats* stats = nullptr);

/// Fills record.f_half with one rhs evaluation at (t + h/2, y_half) when it
/// is not already present. Dense evaluation requires it.
void attach_midpoint_derivative(StepRecord& record, const OdeProblem& problem);

/// Degree-three dense output centered at the step midpoint,
/// tau in [-1/2, 1/2]:
///   y(tau) = y_half + tau h f_half + tau^2 h^2 / 2 D1 + tau^3 h^3 / 6 D2,
/// with D1, D2 the centered differences over the outermost stage
/// derivatives and f_half. Passes through the step endpoints at
/// tau = -/+ 1/2.
Vec dense_eval(const StepRecord& record, double tau, AlphaParam alpha, double h);

/// Collocation polynomial through the stage derivatives,
/// theta in [0, 1]: u(t + theta h) = y_start + h sum_i f_i int_0^theta l_i.
Vec collocation_eval(const StepRecord& record, double theta, double h);

/// A stepping strategy with per-trajectory state (stage predictors, carried
/// stages). reset() returns the stepper to the start-of-trajectory state.
class Stepper {
public:
    virtual ~Stepper() = default;
    virtual StepRecord step(const OdeProblem& problem, double t, const Vec& y, double h,
                            const NewtonOptions& opts, NewtonStats* stats) = 0;
    virtual void reset() {}
    /// Offset parameter for dense_eval on this stepper's records; NaN when
    /// the records carry no midpoint data.
    virtual double dense_alpha() const;
};

/// Generic tableau stepper. Stage guesses extrapolate the previous step's
/// collocation polynomial; the first step uses the constant predictor.
std::unique_ptr<Stepper> make_rk_stepper(ButcherTableau tab);
std::unique_ptr<Stepper> make_gauss4_composed_stepper();
std::unique_ptr<Stepper> make_amdmp4_stepper(AlphaParam alpha);
std::unique_ptr<Stepper> make_amdtr4_stepper(AlphaParam alpha);

struct Trajectory {
    double t0 = 0.0;
    Vec y0;
    double h = 0.0;
    std::vector<StepRecord> steps;
    NewtonStats stats;
};

/// Applies `stepper` n_steps times from (t0, y0) at fixed step h. The
/// stepper is reset first, so carried state never leaks across
/// trajectories. Step failures are rethrown as integration_error with the
/// failing step index.
Trajectory integrate_fixed(Stepper& stepper, const OdeProblem& problem, double t0,
                           const Vec& y0, double h, long n_steps,
                           const NewtonOptions& opts = {});

}  // namespace rkcomp
