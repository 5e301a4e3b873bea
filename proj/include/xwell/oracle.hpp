#ifndef XWELL_ORACLE_HPP
#define XWELL_ORACLE_HPP

#include "xwell/bound.hpp"
#include "xwell/model.hpp"
#include "xwell/scatter.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace xwell::oracle {

// Independent verification machinery. Nothing here reuses the closed
// forms it is meant to check.

// Numerov integration of psi'' = c (V - E) psi from x = 0 outward with
// (psi, psi')(0) = (1, 0) even / (0, 1) odd. Returns psi(x_max) up to a
// positive rescaling applied when the tail overflows.
double numerov_shoot(const WellParams& params, bound::Parity parity, double energy,
                     double h, double x_max);

// Numerov integration run inward (from x_start down to x_a), the stable
// direction for a decaying tail: any growing-solution admixture picked up
// along the way shrinks instead of swamping the signal. Returns
// psi(x_b) / psi(x_a); requires x_a < x_b < x_start on a common h-grid.
double numerov_decay_ratio(const WellParams& params, double energy,
                           double x_a, double x_b, double x_start, double h);

// Eigenvalues by tail sign-change bracketing + bisection to 1e-6.
std::vector<std::pair<int, double>> shoot_spectrum(const WellParams& params, int n_max);

// K_nu(x) via K = pi (I_{-nu} - I_nu) / (2 sin(pi nu)), the series route
// independent of the quadrature representation in specfun.
Complex k_series_oracle(Complex nu, double x);

// Direct numerical solve of the x = 0 matching system with A = 1,
// using only Hankel values (no closed-form coefficient expressions).
scatter::MatchCoefficients matching_linear_solve(const BarrierParams& params,
                                                 double energy);

// Direct quadrature of the defining action integrals (turning-point
// singularities removed by the x = x2 sin(theta) substitution).
double wkb_action_quadrature(const WellParams& params, double energy);   // f(E)
double wkb_action_quadrature(const BarrierParams& params, double energy); // F(E)

// Runs every oracle-vs-main comparison, one line per check.
// Returns true when all pass.
bool selfcheck(std::ostream& os);

} // namespace xwell::oracle

#endif
