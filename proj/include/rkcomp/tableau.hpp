#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

#include "rkcomp/linalg.hpp"

namespace rkcomp {

/// Runge-Kutta coefficients: s stages, coupling matrix A (s x s),
/// weights b and abscissae c (length s, c in units of the step).
struct ButcherTableau {
    int s = 0;
    Matrix A;
    Vec b;
    Vec c;
};

/// Measures how far a tableau is from the algebraic condition that makes a
/// Runge-Kutta map preserve the canonical symplectic two-form:
/// m_ij = b_i a_ij + b_j a_ji - b_i b_j.
struct SymplecticityResidual {
    Matrix M;
    double norm = 0.0;  // max |m_ij|
};

/// Residuals of the B/C/D simplifying assumptions up to a requested order.
/// Entry k-1 holds the order-k residual.
struct SimplifyingResiduals {
    Vec b;  // |sum_i b_i c_i^{k-1} - 1/k|
    Vec c;  // max_i |sum_j a_ij c_j^{k-1} - c_i^k / k|
    Vec d;  // max_j |sum_i b_i c_i^{k-1} a_ij - b_j (1 - c_j^k) / k|
};

/// Throws std::invalid_argument unless dimensions agree and all entries are finite.
void validate(const ButcherTableau& tab);

double weight_sum(const ButcherTableau& tab);

/// max |A*1 - c|; zero for stage-consistent tableaux.
double stage_consistency_deviation(const ButcherTableau& tab);

/// Max entrywise deviation over A, b, c; +infinity when stage counts differ.
double max_deviation(const ButcherTableau& lhs, const ButcherTableau& rhs);

/// A tableau is symmetric when it equals its adjoint.
bool is_symmetric(const ButcherTableau& tab, double tol = 1e-10);

SimplifyingResiduals simplifying_residuals(const ButcherTableau& tab, int p);

/// Residuals of the eight rooted-tree order conditions through order four:
/// sum(b)-1, sum(bc)-1/2, sum(bc^2)-1/3, sum(bAc)-1/6,
/// sum(bc^3)-1/4, sum(b c.(Ac))-1/8, sum(bAc^2)-1/12, sum(bA(Ac))-1/24.
std::array<double, 8> order_conditions_p4(const ButcherTableau& tab);

SymplecticityResidual symplecticity_residual(const ButcherTableau& tab);

/// Adjoint method (inverse with negated step):
/// a*_ij = b_{s+1-j} - a_{s+1-i,s+1-j}, b*_i = b_{s+1-i}, c*_i = 1 - c_{s+1-i}.
/// Requires consistent weights (|sum b - 1| <= 1e-12).
ButcherTableau adjoint(const ButcherTableau& tab);

/// Block tableau of `first` applied over the initial fraction theta1 of the
/// step followed by `second` over the remaining theta2. Requires theta1 +
/// theta2 = 1 within 1e-14.
ButcherTableau compose(const ButcherTableau& first, const ButcherTableau& second,
                       double theta1, double theta2);

/// Merges equivalent stages by partition refinement: classes start from
/// equal abscissae (within tol) and split until all members of a class have
/// equal row sums over every class. Idempotent; returns the input when no
/// stages merge.
ButcherTableau s_reduce(const ButcherTableau& tab, double tol = 1e-12);

/// R(z) = 1 + z b^T (I - zA)^{-1} 1. Signals singular_matrix_error when the
/// linear solve encounters a pivot magnitude below 1e-300.
std::complex<double> stability_function(const ButcherTableau& tab, std::complex<double> z);

// Text format: line 1 holds s, line 2 the abscissae, the next s lines the
// rows of A, and the final line the weights. The writer emits 17
// significant digits so values round-trip exactly.
ButcherTableau read_tableau(std::istream& in);
ButcherTableau load_tableau(const std::string& path);
void write_tableau(std::ostream& out, const ButcherTableau& tab);
void save_tableau(const std::string& path, const ButcherTableau& tab);

// Small catalog of classical methods.
ButcherTableau explicit_euler();
ButcherTableau implicit_euler();
ButcherTableau implicit_midpoint();
ButcherTableau trapezoidal();
ButcherTableau classical_rk4();

}  // namespace rkcomp
