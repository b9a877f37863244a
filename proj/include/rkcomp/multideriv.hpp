#pragma once

#include "rkcomp/ode.hpp"
#include "rkcomp/tableau.hpp"

namespace rkcomp {

/// Offset of the auxiliary stages in units of the step. Entries of the
/// associated tableaux scale like 1/alpha^2, so values below 1e-3 are
/// rejected rather than allowed to degrade silently.
class AlphaParam {
public:
    explicit AlphaParam(double value);
    double value() const { return value_; }

private:
    double value_;
};

/// Symmetric and exactly alpha-independent for quadratics: the value that
/// recovers the classical Gauss method elsewhere in this library.
double gauss4_alpha();  // sqrt(3)/6

/// Centered-difference surrogate for the first Lie derivative of f along
/// the flow: (f_plus - f_minus) / (2 alpha h).
Vec centered_d1(const Vec& f_minus, const Vec& f_plus, AlphaParam alpha, double h);

/// Centered-difference surrogate for the second Lie derivative:
/// (f_plus - 2 f_center + f_minus) / (alpha^2 h^2).
Vec centered_d2(const Vec& f_minus, const Vec& f_center, const Vec& f_plus,
                AlphaParam alpha, double h);

/// Three-stage tableau of the midpoint-type multiderivative scheme whose
/// Lie derivatives are replaced by centered differences over a quadratic
/// collocation polynomial. Abscissae (1/2 - alpha, 1/2, 1/2 + alpha);
/// symmetric and of order four for admissible alpha, symplectic exactly at
/// alpha = sqrt(3)/6 where it reduces to the two-stage Gauss method.
ButcherTableau amdmp4_c2_tableau(AlphaParam alpha);

/// One step of the midpoint-type scheme: a single Newton solve over the
/// three coupled stages, then the midpoint value and the end state are
/// combined explicitly. The record carries the midpoint (y_half, f_half)
/// so a degree-three dense output is available at no extra cost.
StepRecord amdmp4_c2_step(const OdeProblem& problem, double t, const Vec& y, double h,
                          AlphaParam alpha, const NewtonOptions& opts = {},
                          NewtonStats* stats = nullptr);

/// Stages around the current trajectory point, carried between steps of the
/// trapezoidal-type scheme so each step after the bootstrap costs exactly
/// one nonlinear solve.
struct Amdtr4State {
    bool ready = false;
    Vec y_minus, y_plus;  // auxiliary stages at t -/+ alpha h
    Vec f_minus, f_plus;
    Vec f_center;  // f at the trajectory point itself
};

/// One step of the trapezoidal-type multiderivative scheme. On the first
/// call (carried.ready == false) the stages around y are bootstrapped with
/// an extra nonlinear solve; afterwards the explicit half of the step
/// reuses the carried stages and the implicit half solves one coupled
/// system for the new point and its auxiliary stages.
StepRecord amdtr4_c2_step(const OdeProblem& problem, double t, const Vec& y, double h,
                          AlphaParam alpha, Amdtr4State& carried,
                          const NewtonOptions& opts = {}, NewtonStats* stats = nullptr);

}  // namespace rkcomp
