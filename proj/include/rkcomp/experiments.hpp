#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rkcomp/integrator.hpp"
#include "rkcomp/problems.hpp"

namespace rkcomp {

struct ConvergenceRow {
    double h = 0.0;
    double error = 0.0;
    double rate = 0.0;  // log2(error_{2h} / error_h); 0 for the first row
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
};

/// Method descriptors accepted by the experiment drivers and the CLI:
///   gauss4        shared-stage composed Gauss-4 (dense output capable)
///   conjugate4    four-stage conjugate-symplectic counterpart
///   amdmp4:A      midpoint-type multiderivative scheme with offset A
///   amdtr4:A      trapezoidal-type multiderivative scheme with offset A
///   phi | psi     the two half-step factors of Gauss-4
///   gauss:S       direct S-stage Gauss collocation
///   midpoint | trapezoidal | rk4
/// A may be a decimal or the literal `gauss` for sqrt(3)/6.
std::unique_ptr<Stepper> make_stepper(const std::string& descriptor);

/// Design order of a descriptor's method, or -1 when unknown.
int expected_order(const std::string& descriptor);

/// Whether long-time energy boundedness is part of the method's contract
/// (symplectic, conjugate-symplectic, or symmetric schemes).
bool is_structure_preserving(const std::string& descriptor);

// ---------------------------------------------------------------------------
// Boundary-layer convergence study (dense output vs collocation polynomial)
// ---------------------------------------------------------------------------

struct Table1Options {
    double eps = 0.1;
    std::vector<double> h_list;  // empty selects 1/8 .. 1/512
    int samples_per_step = 33;
    NewtonOptions newton;
};

struct Table1Result {
    double eps = 0.0;
    ConvergenceReport dense;        // degree-3 dense output error
    ConvergenceReport collocation;  // degree-2 collocation polynomial error
};

/// Solves the layer problem by linear shooting (two basis integrations with
/// the composed Gauss-4 stepper, combined to enforce the right boundary
/// value) and reports the max absolute error of both continuous extensions
/// on the solution component, sampled at samples_per_step points per step.
Table1Result run_table1(const Table1Options& opts);

std::vector<double> default_table1_steps();  // 1/8, 1/16, ..., 1/512

// ---------------------------------------------------------------------------
// Energy drift monitoring
// ---------------------------------------------------------------------------

struct EnergyOptions {
    std::string problem = "pendulum";
    std::string method = "conjugate4";
    double h = 0.1;
    long steps = 1000;
    NewtonOptions newton;
};

struct EnergySummary {
    double max_drift = 0.0;   // max |H - H0|
    double half_ratio = 0.0;  // max |H - H0| over second half / first half
    double slope = 0.0;       // least-squares slope of |H - H0| against t
};

struct EnergyResult {
    std::vector<double> t;
    std::vector<double> error;  // H - H0, starting with 0 at t0
    EnergySummary summary;
};

EnergyResult run_energy(const EnergyOptions& opts);

// ---------------------------------------------------------------------------
// Empirical convergence order against a refined self-reference
// ---------------------------------------------------------------------------

struct ConvergenceOptions {
    std::string method = "gauss4";
    std::string problem = "pendulum";
    double h0 = 0.2;
    int levels = 4;      // >= 3
    double t_end = 2.0;  // rounded to a whole number of h0 steps
    NewtonOptions newton;
};

/// Errors at t_end for h0, h0/2, ..., against the same method run at
/// h0 / 2^(levels + 2).
ConvergenceReport run_convergence(const ConvergenceOptions& opts);

// ---------------------------------------------------------------------------
// CSV output (comma separated, header row, LF terminated)
// ---------------------------------------------------------------------------

void write_convergence_csv(const std::string& path, const ConvergenceReport& report);
void write_table1_csv(const std::string& path, const Table1Result& result);
void write_energy_csv(const std::string& path, const EnergyResult& result);

}  // namespace rkcomp
