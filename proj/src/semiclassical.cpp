#include "xwell/semiclassical.hpp"
#include "xwell/errors.hpp"
#include "xwell/rootfind.hpp"

#include <cmath>
#include <string>

namespace xwell::semiclassical {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// atanh(sqrt(g^2-1)/g) - sqrt(g^2-1)/g for g >= 1; the atanh term equals
// acosh(g), which handles the removable singularity at g = 1 directly.
double bracket_term(double g)
{
    if (g <= 1.0)
        return 0.0;
    return std::acosh(g) - std::sqrt(g * g - 1.0) / g;
}

double solve_action_level(const WellParams& params, double target)
{
    auto f = [&](double e) { return action_f(params, e).value - target; };
    double e_hi = params.v0;
    int doublings = 0;
    while (f(e_hi) < 0.0) {
        e_hi *= 2.0;
        if (++doublings > 60)
            throw BracketingFailed("f(E) never reached " + std::to_string(target));
    }
    return rootfind::bisect_secant(f, 0.0, e_hi, 1e-10, 3);
}

} // namespace

ActionValue action_f(const WellParams& params, double energy)
{
    validate(params);
    if (energy < 0.0)
        throw NegativeEnergyForWellAction("E = " + std::to_string(energy));
    const double g = std::sqrt((energy + params.v0) / params.v0);
    const double qa = std::sqrt(params.two_mu_over_hbar2 * params.v0) * params.a;
    return {2.0 * qa * g / kPi * bracket_term(g), g};
}

std::vector<std::pair<int, double>> wkb_spectrum(const WellParams& params, int n_max)
{
    std::vector<std::pair<int, double>> out;
    for (int n = 0; n <= n_max; ++n)
        out.emplace_back(n, solve_action_level(params, n + 0.5));
    return out;
}

ActionValue barrier_action_F(const BarrierParams& params, double energy)
{
    validate(params);
    if (!(energy < 0.0))
        throw EnergyNotBelowBarrierTop("E = " + std::to_string(energy));
    const double g_big = std::sqrt(1.0 - energy / params.u0);
    const double sa = std::sqrt(params.two_mu_over_hbar2 * params.u0) * params.a;
    return {2.0 * sa * g_big * bracket_term(g_big), g_big};
}

double t_wkb(const BarrierParams& params, double energy)
{
    double f2 = 2.0 * barrier_action_F(params, energy).value;
    return 1.0 / (1.0 + std::exp(f2));
}

double wkb_pole_condition(const WellParams& params, int n)
{
    if (n < 0)
        throw Error("wkb_pole_condition needs n >= 0");
    return solve_action_level(params, n + 0.5);
}

} // namespace xwell::semiclassical
