#include "xwell/model.hpp"
#include "xwell/errors.hpp"

#include <cmath>
#include <string>

namespace xwell {

void validate(const WellParams& p)
{
    if (!(p.v0 > 0.0) || !(p.a > 0.0) || !(p.two_mu_over_hbar2 > 0.0))
        throw Error("WellParams requires v0 > 0, a > 0, two_mu_over_hbar2 > 0");
}

void validate(const BarrierParams& p)
{
    if (!(p.u0 > 0.0) || !(p.a > 0.0) || !(p.two_mu_over_hbar2 > 0.0))
        throw Error("BarrierParams requires u0 > 0, a > 0, two_mu_over_hbar2 > 0");
}

double potential_value(const WellParams& p, double x)
{
    return p.v0 * std::expm1(2.0 * std::abs(x) / p.a);
}

double potential_value(const BarrierParams& p, double x)
{
    return -p.u0 * std::expm1(2.0 * std::abs(x) / p.a);
}

Wavenumbers wavenumbers(const WellParams& p, double energy)
{
    validate(p);
    const double c = p.two_mu_over_hbar2;
    if (!(energy > -p.v0))
        throw EnergyBelowWellBottom("E = " + std::to_string(energy) +
                                    " is not above -v0 = " + std::to_string(-p.v0));
    Wavenumbers w;
    w.k_or_p = Complex(std::sqrt(c * (energy + p.v0)), 0.0);
    w.q_or_s = std::sqrt(c * p.v0);
    w.order = Complex(0.0, 1.0) * w.k_or_p * p.a;
    w.lambda = w.q_or_s * p.a;
    return w;
}

Wavenumbers wavenumbers(const BarrierParams& p, double energy)
{
    validate(p);
    const double c = p.two_mu_over_hbar2;
    Wavenumbers w;
    if (energy >= p.u0)
        w.k_or_p = Complex(std::sqrt(c * (energy - p.u0)), 0.0);
    else
        w.k_or_p = Complex(0.0, std::sqrt(c * (p.u0 - energy)));
    w.q_or_s = std::sqrt(c * p.u0);
    w.order = Complex(0.0, 1.0) * w.k_or_p * p.a;
    w.lambda = w.q_or_s * p.a;
    return w;
}

std::pair<double, double> turning_points(const WellParams& p, double energy)
{
    validate(p);
    if (!(energy > 0.0))
        throw NoClassicalTurningPoints("well needs E > 0, got " + std::to_string(energy));
    double x2 = 0.5 * p.a * std::log1p(energy / p.v0);
    return {-x2, x2};
}

std::pair<double, double> turning_points(const BarrierParams& p, double energy)
{
    validate(p);
    if (!(energy < 0.0))
        throw NoClassicalTurningPoints("barrier needs E < 0, got " + std::to_string(energy));
    double x2 = 0.5 * p.a * std::log1p(-energy / p.u0);
    return {-x2, x2};
}

} // namespace xwell
