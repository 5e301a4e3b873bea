#ifndef XWELL_SEMICLASSICAL_HPP
#define XWELL_SEMICLASSICAL_HPP

#include "xwell/model.hpp"

#include <utility>
#include <vector>

namespace xwell::semiclassical {

struct ActionValue {
    double value;  // f (well, in units of pi) or F (barrier)
    double g_or_G; // sqrt((E+v0)/v0) or sqrt(1 - E/u0)
};

// Closed-form phase-space action of the well,
// f(E) = (2 q a g / pi) (atanh(sqrt(g^2-1)/g) - sqrt(g^2-1)/g).
ActionValue action_f(const WellParams& params, double energy);

// E_n solving f(E) = n + 1/2, n = 0..n_max.
std::vector<std::pair<int, double>> wkb_spectrum(const WellParams& params, int n_max);

// Closed-form barrier action F for E < 0,
// F = 2 s a G (atanh(sqrt(G^2-1)/G) - sqrt(G^2-1)/G).
ActionValue barrier_action_F(const BarrierParams& params, double energy);

// Kemble transmission T = 1 / (1 + e^{2F}), E < 0.
double t_wkb(const BarrierParams& params, double energy);

// Pole of the continued T_WKB at F = (n + 1/2) pi; coincides with the
// WKB eigenvalue of the well with v0 = -u0 continuation.
double wkb_pole_condition(const WellParams& params, int n);

} // namespace xwell::semiclassical

#endif
