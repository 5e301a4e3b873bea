#ifndef XWELL_BOUND_HPP
#define XWELL_BOUND_HPP

#include "xwell/model.hpp"

#include <vector>

namespace xwell::bound {

enum class Parity { even, odd };

struct Eigenstate {
    int n = 0;           // quantum number = node count
    Parity parity = Parity::even;
    double energy = 0.0;
    double k = 0.0;      // sqrt(c (E + v0))
    double norm_constant = 0.0; // 0 means not normalized
};

// Energy scan for root isolation.
struct EnergyScan {
    double e_lo;
    double e_hi;
    double step;
};

EnergyScan default_scan(const WellParams& params, double e_hi);

// Quantization condition value: K'_{ika}(qa) for even parity,
// K_{ika}(qa) for odd parity. Roots in E are the eigenvalues.
double parity_condition(const WellParams& params, double energy, Parity parity);

// States 0..n_max with alternating parity and strictly increasing energy.
// The scan upper edge is extended automatically until enough roots exist.
std::vector<Eigenstate> solve_spectrum(const WellParams& params, int n_max);
std::vector<Eigenstate> solve_spectrum(const WellParams& params, int n_max,
                                       const EnergyScan& scan);

// Largest |x| for which the K argument qa e^{|x|/a} stays inside the
// validated series/quadrature domain used elsewhere.
double x_cap(const WellParams& params);

// psi(x); un-normalized (amplitude 1) unless state.norm_constant is set.
double eigenfunction(const WellParams& params, const Eigenstate& state, double x);

int count_nodes(const WellParams& params, const Eigenstate& state,
                int grid_points = 4001);

// Returns a copy with norm_constant set so that Int psi^2 dx = 1.
// cap_scale stretches the integration cap beyond x_cap; the K quadrature
// route stays valid there, and the tail is double-exponentially small.
Eigenstate normalize(const WellParams& params, const Eigenstate& state,
                     double cap_scale = 1.0);

} // namespace xwell::bound

#endif
