#pragma once

#include <string>

#include "rkcomp/ode.hpp"

namespace rkcomp {

/// Named test problem bundling the ODE, the canonical start state, and (for
/// Hamiltonian systems) the energy functional.
struct Problem {
    std::string name;
    OdeProblem ode;
    Vec y0;
    std::function<double(const Vec&)> energy;  // empty for non-Hamiltonian problems
};

/// H = (q^2 + p^2)/2, start (1, 0).
Problem harmonic_problem();

/// H = p^2/2 - cos q, start (2, 0).
Problem pendulum_problem();

/// Planar Kepler problem, eccentricity 0.6: H = |p|^2/2 - 1/|q|,
/// start q = (0.4, 0), p = (0, 2).
Problem kepler_problem();

/// First-order form of the singularly perturbed two-point problem
/// eps y'' = y on [0, 1]; state (y, y'). Carries the exact solution of the
/// boundary-value formulation y(0) = 1, y(1) = 0.
OdeProblem bvp_layer_ode(double eps);

/// Exact solution of the boundary-value problem above and its derivative.
double bvp_exact(double eps, double x);
double bvp_exact_deriv(double eps, double x);

/// Lookup by name: harmonic | pendulum | kepler.
Problem problem_by_name(const std::string& name);

}  // namespace rkcomp
