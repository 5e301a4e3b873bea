#include "xwell/bound.hpp"
#include "xwell/errors.hpp"
#include "xwell/quadrature.hpp"
#include "xwell/rootfind.hpp"
#include "xwell/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace xwell::bound {

namespace {

double condition_at(const WellParams& params, double energy, Parity parity)
{
    Wavenumbers w = wavenumbers(params, energy);
    const double ka = w.order.imag(); // k * a
    if (parity == Parity::even)
        return specfun::k_imag_order_deriv(ka, w.lambda);
    return specfun::k_imag_order(ka, w.lambda);
}

struct Root {
    double energy;
    Parity parity;
};

std::vector<Root> scan_roots(const WellParams& params, const EnergyScan& scan)
{
    std::vector<Root> roots;
    double e_prev = scan.e_lo;
    double even_prev = condition_at(params, e_prev, Parity::even);
    double odd_prev = condition_at(params, e_prev, Parity::odd);
    for (double e = scan.e_lo + scan.step; e <= scan.e_hi + 0.5 * scan.step; e += scan.step) {
        double even_cur = condition_at(params, e, Parity::even);
        double odd_cur = condition_at(params, e, Parity::odd);
        for (Parity parity : {Parity::even, Parity::odd}) {
            double f_prev = (parity == Parity::even) ? even_prev : odd_prev;
            double f_cur = (parity == Parity::even) ? even_cur : odd_cur;
            if ((f_prev > 0.0) != (f_cur > 0.0)) {
                auto f = [&](double x) { return condition_at(params, x, parity); };
                double root = rootfind::bisect_secant(f, e_prev, e, 1e-8, 3);
                roots.push_back({root, parity});
            }
        }
        e_prev = e;
        even_prev = even_cur;
        odd_prev = odd_cur;
    }
    std::sort(roots.begin(), roots.end(),
              [](const Root& a, const Root& b) { return a.energy < b.energy; });
    return roots;
}

std::vector<Eigenstate> label_states(const WellParams& params,
                                     const std::vector<Root>& roots, int n_max)
{
    if (static_cast<int>(roots.size()) < n_max + 1)
        throw TooFewStatesInRange("found " + std::to_string(roots.size()) +
                                  " roots, need " + std::to_string(n_max + 1));
    std::vector<Eigenstate> states;
    for (int n = 0; n <= n_max; ++n) {
        const Root& r = roots[n];
        Parity expected = (n % 2 == 0) ? Parity::even : Parity::odd;
        if (r.parity != expected)
            throw BracketingFailed("parity alternation broken at n = " + std::to_string(n) +
                                   " (E = " + std::to_string(r.energy) + "); refine the scan");
        Eigenstate s;
        s.n = n;
        s.parity = r.parity;
        s.energy = r.energy;
        s.k = wavenumbers(params, r.energy).k_or_p.real();
        states.push_back(s);
    }
    return states;
}

} // namespace

EnergyScan default_scan(const WellParams& params, double e_hi)
{
    return {-params.v0 + 1e-6, e_hi, 0.05 * params.v0};
}

double parity_condition(const WellParams& params, double energy, Parity parity)
{
    return condition_at(params, energy, parity);
}

std::vector<Eigenstate> solve_spectrum(const WellParams& params, int n_max,
                                       const EnergyScan& scan)
{
    return label_states(params, scan_roots(params, scan), n_max);
}

std::vector<Eigenstate> solve_spectrum(const WellParams& params, int n_max)
{
    validate(params);
    double e_hi = 10.0 * params.v0;
    for (int attempt = 0; attempt < 12; ++attempt) {
        auto roots = scan_roots(params, default_scan(params, e_hi));
        if (static_cast<int>(roots.size()) >= n_max + 2 ||
            (static_cast<int>(roots.size()) >= n_max + 1 && attempt > 0))
            return label_states(params, roots, n_max);
        e_hi *= 2.0;
    }
    throw TooFewStatesInRange("could not isolate " + std::to_string(n_max + 1) +
                              " bound states");
}

double x_cap(const WellParams& params)
{
    double lambda = wavenumbers(params, 0.0).lambda;
    if (lambda >= specfun::kSeriesZMax)
        throw ArgumentOutOfSpecfunDomain("qa already beyond the validated domain");
    return params.a * std::log(specfun::kSeriesZMax / lambda);
}

double eigenfunction(const WellParams& params, const Eigenstate& state, double x)
{
    Wavenumbers w = wavenumbers(params, state.energy);
    double z = w.lambda * std::exp(std::abs(x) / params.a);
    if (z > specfun::kSeriesZMax * (1.0 + 1e-12))
        throw ArgumentOutOfSpecfunDomain("|x| beyond x_cap for this well");
    double amp = state.norm_constant > 0.0 ? state.norm_constant : 1.0;
    double value = specfun::k_imag_order(state.k * params.a, z);
    if (state.parity == Parity::odd) {
        double sign = (x > 0.0) ? 1.0 : (x < 0.0 ? -1.0 : 0.0); // sgn(0) = 0
        return amp * sign * value;
    }
    return amp * value;
}

int count_nodes(const WellParams& params, const Eigenstate& state, int grid_points)
{
    const double cap = x_cap(params);
    int nodes = 0;
    double prev_sign = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        double x = -cap + 2.0 * cap * i / (grid_points - 1);
        double v = eigenfunction(params, state, x);
        double s = (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
        if (s == 0.0)
            continue;
        if (prev_sign != 0.0 && s != prev_sign)
            ++nodes;
        prev_sign = s;
    }
    return nodes;
}

Eigenstate normalize(const WellParams& params, const Eigenstate& state,
                     double cap_scale)
{
    if (!(cap_scale >= 1.0))
        throw Error("normalize cap_scale must be >= 1");
    const double cap = x_cap(params) * cap_scale;
    Wavenumbers w = wavenumbers(params, state.energy);
    auto psi2 = [&](double x) {
        // bypasses the x_cap guard of eigenfunction: the quadrature route
        // for K has no series-domain cap
        double v = specfun::k_imag_order(state.k * params.a,
                                         w.lambda * std::exp(x / params.a));
        return v * v;
    };
    // psi^2 is even for both parities; the tail beyond x_cap is below 1e-10
    // of the total (K decays like e^{-z} with z >= 30 there).
    auto q = quad::integrate(psi2, 0.0, cap, 1e-12, 0.0, 14);
    double total = 2.0 * q.value;
    Eigenstate out = state;
    out.norm_constant = 1.0 / std::sqrt(total);
    return out;
}

} // namespace xwell::bound
