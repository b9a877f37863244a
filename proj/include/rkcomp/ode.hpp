#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rkcomp/linalg.hpp"

namespace rkcomp {

using RhsFn = std::function<Vec(double, const Vec&)>;
using JacFn = std::function<Matrix(double, const Vec&)>;
using ExactFn = std::function<Vec(double)>;

/// Initial-value problem y' = f(t, y). The Jacobian and the exact solution
/// are optional; a missing Jacobian is replaced by central finite
/// differences inside the stage solver.
struct OdeProblem {
    int dim = 0;
    RhsFn rhs;
    JacFn jacobian;  // may be empty
    ExactFn exact;   // may be empty
};

/// Canonical Hamiltonian system in 2m variables y = (q, p) with
/// y' = J grad H(y), J the canonical symplectic block matrix.
struct HamiltonianProblem {
    int m = 0;
    std::function<double(const Vec&)> hamiltonian;
    std::function<Vec(const Vec&)> gradient;  // length 2m

    OdeProblem to_ode() const;
};

struct NewtonOptions {
    double tol = 1e-12;  // max-norm of the stage increment
    int max_iter = 50;
};

/// Counters accumulated across a trajectory. `solves` counts nonlinear
/// stage systems, not Newton iterations.
struct NewtonStats {
    long solves = 0;
    long iterations = 0;
    long jacobian_evals = 0;
};

class newton_error : public std::runtime_error {
public:
    newton_error(const std::string& what, int iterations, double residual)
        : std::runtime_error(what), iterations(iterations), residual(residual) {}
    int iterations;
    double residual;
};

class integration_error : public std::runtime_error {
public:
    integration_error(const std::string& what, long step_index)
        : std::runtime_error(what), step_index(step_index) {}
    long step_index;
};

/// One accepted step: start state, end state, internal stages ordered by
/// abscissa, their derivatives, and (for methods that expose one) the
/// midpoint value with its lazily attached derivative.
struct StepRecord {
    double t = 0.0;  // start of the step
    double h = 0.0;
    Vec y_start;
    Vec y;  // accepted state at t + h
    std::optional<Vec> y_half;
    std::optional<Vec> f_half;
    std::vector<Vec> stages;
    std::vector<Vec> stage_derivs;
    Vec abscissae;  // stage abscissae in units of h
};

/// Central finite-difference Jacobian with per-column offset 1e-7 (1 + |y_j|).
Matrix numerical_jacobian(const OdeProblem& problem, double t, const Vec& y);

/// Compares an analytic Jacobian against finite differences at a probe
/// point; throws std::invalid_argument on mismatch beyond 1e-5 scaled
/// relative error. Used once when a problem enters the built-in catalog.
void validate_jacobian(const OdeProblem& problem, double t, const Vec& y);

}  // namespace rkcomp
