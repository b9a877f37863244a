#pragma once

#include "rkcomp/tableau.hpp"

namespace rkcomp {

/// Roots of the degree-s Legendre polynomial shifted to [0, 1], strictly
/// increasing and symmetric about 1/2. Supported for 1 <= s <= 10.
Vec legendre_nodes(int s);

/// Weights w solving the moment system sum_i w_i x_i^{k-1} = 1/k for
/// k = 1..s, i.e. the interpolatory quadrature weights on [0, 1] for the
/// given (pairwise distinct) nodes. The nodes themselves may lie outside
/// [0, 1].
Vec interpolatory_weights(const Vec& nodes);

/// Gauss-Legendre collocation tableau with s stages (order 2s).
ButcherTableau gauss_tableau(int s);

}  // namespace rkcomp
