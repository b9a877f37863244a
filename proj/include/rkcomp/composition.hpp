#pragma once

#include "rkcomp/tableau.hpp"

namespace rkcomp {

/// A base method theta together with the two half-step factors whose
/// composition reproduces it: phi = (2A, w(2c), 2c) advances the first half
/// step, psi = (2A - 1 b_phi^T, w(2c - 1), 2c - 1) the second, with w(.)
/// the interpolatory quadrature weights.
struct CompositionPair {
    ButcherTableau theta;
    ButcherTableau phi;
    ButcherTableau psi;
};

/// Splits theta into its phi/psi factors. Requires pairwise distinct
/// abscissae and a weight vector of quadrature order at least s.
CompositionPair factorize(const ButcherTableau& theta);

/// Builds compose(phi, psi, 1/2, 1/2), S-reduces it, and compares the
/// result entrywise against theta. Returns the max deviation; throws
/// std::runtime_error when it exceeds tol.
double verify_composition(const CompositionPair& pair, double tol);

/// The reverse composition compose(psi, phi, 1/2, 1/2), returned without
/// S-reduction (its 2s stages are genuinely distinct). For symmetric
/// symplectic theta this is the conjugate-symplectic counterpart.
ButcherTableau conjugate_counterpart(const CompositionPair& pair);

}  // namespace rkcomp
