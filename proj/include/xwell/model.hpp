#ifndef XWELL_MODEL_HPP
#define XWELL_MODEL_HPP

#include <complex>
#include <utility>

namespace xwell {

using Complex = std::complex<double>;

// Open well V(x) = v0 (e^{2|x|/a} - 1), v0 > 0.
// two_mu_over_hbar2 defaults to 1 (the 2*mu = hbar = 1 convention).
struct WellParams {
    double v0 = 1.0;
    double a = 1.0;
    double two_mu_over_hbar2 = 1.0;
};

// Bottomless barrier V(x) = -u0 (e^{2|x|/a} - 1), u0 > 0.
struct BarrierParams {
    double u0 = 5.0;
    double a = 1.0;
    double two_mu_over_hbar2 = 1.0;
};

// Derived wavenumbers for one energy. For the barrier below the top of the
// exponential (E < u0) the branch p = +i sqrt(c (u0 - E)) is used, so the
// order nu = i p a is real and <= 0; above, p is real and nu purely imaginary.
struct Wavenumbers {
    Complex k_or_p;  // k (well) or p (barrier)
    double q_or_s;   // q (well) or s (barrier)
    Complex order;   // nu = i * k_or_p * a
    double lambda;   // q_or_s * a
};

double potential_value(const WellParams& params, double x);
double potential_value(const BarrierParams& params, double x);

Wavenumbers wavenumbers(const WellParams& params, double energy);
Wavenumbers wavenumbers(const BarrierParams& params, double energy);

// Classical turning points (x1, x2) with x1 = -x2 < 0 < x2.
// Well: requires E > 0; barrier: requires E < 0.
std::pair<double, double> turning_points(const WellParams& params, double energy);
std::pair<double, double> turning_points(const BarrierParams& params, double energy);

void validate(const WellParams& params);
void validate(const BarrierParams& params);

} // namespace xwell

#endif
