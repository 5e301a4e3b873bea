#include "xwell/scatter.hpp"
#include "xwell/bound.hpp"
#include "xwell/errors.hpp"
#include "xwell/rootfind.hpp"
#include "xwell/specfun.hpp"

#include <atomic>
#include <cmath>
#include <optional>
#include <string>
#include <thread>

namespace xwell::scatter {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const Complex kI{0.0, 1.0};

struct HankelSet {
    Complex h1_nu, h2_nu;   // H^(1,2)_{nu}(z)
    Complex h1_mnu, h2_mnu; // H^(1,2)_{-nu}(z)
    Complex d1_nu, d2_nu;   // derivatives at order nu
    Complex d1_mnu, d2_mnu; // derivatives at order -nu
};

HankelSet hankel_set(Complex nu, Complex z)
{
    HankelSet s;
    auto hp = specfun::hankel_pair_arg(nu, z);
    auto hm = specfun::hankel_pair_arg(-nu, z);
    auto dp = specfun::hankel_deriv_pair_arg(nu, z);
    auto dm = specfun::hankel_deriv_pair_arg(-nu, z);
    s.h1_nu = hp.h1;
    s.h2_nu = hp.h2;
    s.h1_mnu = hm.h1;
    s.h2_mnu = hm.h2;
    s.d1_nu = dp.h1;
    s.d2_nu = dp.h2;
    s.d1_mnu = dm.h1;
    s.d2_mnu = dm.h2;
    return s;
}

// The printed closed form has A with the opposite sign; this sign makes
// A, B, C satisfy the x = 0 matching system and the B/A, C/A ratio forms
// simultaneously. R and T are unaffected either way.
MatchCoefficients coefficients_from(const HankelSet& s)
{
    MatchCoefficients m;
    m.a = -2.0 * s.h1_mnu * s.d1_nu;
    m.b = s.d1_nu * s.h2_nu + s.h1_nu * s.d2_nu;
    m.c = s.h1_mnu * s.d2_nu - s.d1_mnu * s.h2_nu;
    return m;
}

ScatterPoint point_from(const MatchCoefficients& m, Complex p, double a_len, double energy)
{
    if (std::abs(m.a) < 1e-290)
        throw PoleEncountered("denominator amplitude A vanished at E = " +
                              std::to_string(energy));
    ScatterPoint pt;
    pt.energy = energy;
    pt.p = p;
    pt.r_amp = m.b / m.a;
    pt.t_ratio = m.c / m.a;
    Complex phase = std::exp(kPi * p * a_len);
    pt.r = std::norm(pt.r_amp);
    pt.t = std::norm(phase * pt.t_ratio);
    return pt;
}

} // namespace

MatchCoefficients coefficients_ABC(const BarrierParams& params, double energy)
{
    Wavenumbers w = wavenumbers(params, energy);
    return coefficients_from(hankel_set(w.order, Complex(w.lambda, 0.0)));
}

ScatterPoint rt_probabilities(const BarrierParams& params, double energy)
{
    Wavenumbers w = wavenumbers(params, energy);
    MatchCoefficients m = coefficients_from(hankel_set(w.order, Complex(w.lambda, 0.0)));
    return point_from(m, w.k_or_p, params.a, energy);
}

ScatterPoint rt_probabilities_ratio_route(const BarrierParams& params, double energy)
{
    Wavenumbers w = wavenumbers(params, energy);
    HankelSet s = hankel_set(w.order, Complex(w.lambda, 0.0));
    Complex phase = std::exp(kPi * w.k_or_p * params.a);
    Complex r = -0.5 * phase * (s.h2_nu / s.h1_nu + s.d2_nu / s.d1_nu);
    Complex t = (2.0 * kI / (kPi * w.lambda)) / (s.h1_nu * s.d1_nu);
    ScatterPoint pt;
    pt.energy = energy;
    pt.p = w.k_or_p;
    pt.r_amp = r;
    pt.t_ratio = t;
    pt.r = std::norm(r);
    pt.t = std::norm(phase * t);
    return pt;
}

Currents current_densities(const BarrierParams& params, double energy,
                           const MatchCoefficients& coeffs)
{
    Wavenumbers w = wavenumbers(params, energy);
    const double j0 = 4.0 / (kPi * params.a * params.two_mu_over_hbar2);
    const double aa = std::norm(coeffs.a);
    const double bb = std::norm(coeffs.b);
    const double cc = std::norm(coeffs.c);
    if (w.k_or_p.imag() == 0.0) {
        // real p: e^{-+ pi p a} factors from the order-reflection identities
        double down = std::exp(-kPi * w.k_or_p.real() * params.a);
        double up = std::exp(kPi * w.k_or_p.real() * params.a);
        return {j0 * down * aa, -j0 * down * bb, j0 * up * cc};
    }
    return {j0 * aa, -j0 * bb, j0 * cc};
}

CurveTable sweep(const BarrierParams& params, const EnergyGridSpec& grid, int n_threads)
{
    validate(params);
    if (grid.points < 1)
        throw Error("sweep needs at least one grid point");

    std::vector<std::optional<ScatterPoint>> pts(grid.points);
    int workers = std::max(1, n_threads);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int i = next.fetch_add(1); i < grid.points; i = next.fetch_add(1)) {
            try {
                pts[i] = rt_probabilities(params, grid.at(i));
            } catch (const Error&) {
                pts[i] = std::nullopt; // marked invalid, reported in metadata
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    CurveTable table;
    table.columns = {{"E", "energy"}, {"R", ""}, {"T", ""}, {"unitarity_defect", ""}};
    double max_defect = 0.0;
    int invalid = 0;
    for (int i = 0; i < grid.points; ++i) {
        if (!pts[i]) {
            ++invalid;
            continue;
        }
        const ScatterPoint& p = *pts[i];
        double defect = std::abs(p.r + p.t - 1.0);
        max_defect = std::max(max_defect, defect);
        table.add_row({p.energy, p.r, p.t, defect});
    }
    table.metadata["u0"] = format_double(params.u0);
    table.metadata["a"] = format_double(params.a);
    table.metadata["two_mu_over_hbar2"] = format_double(params.two_mu_over_hbar2);
    table.metadata["e_min"] = format_double(grid.e_min);
    table.metadata["e_max"] = format_double(grid.e_max);
    table.metadata["points"] = std::to_string(grid.points);
    table.metadata["max_unitarity_defect"] = format_double(max_defect);
    table.metadata["invalid_points"] = std::to_string(invalid);
    return table;
}

double find_crossover(const BarrierParams& params, double e_lo, double e_hi)
{
    auto half_defect = [&](double e) { return rt_probabilities(params, e).r - 0.5; };
    const double step = 0.05;
    double prev = e_lo;
    double f_prev = half_defect(prev);
    while (prev < e_hi) {
        double cur = std::min(prev + step, e_hi);
        double f_cur = half_defect(cur);
        if ((f_prev > 0.0) != (f_cur > 0.0))
            return rootfind::bisect_secant(half_defect, prev, cur, 1e-8, 3);
        prev = cur;
        f_prev = f_cur;
    }
    throw NoSignChange("R - 1/2 does not change sign on [" + std::to_string(e_lo) +
                       ", " + std::to_string(e_hi) + "]");
}

std::vector<std::pair<double, PoleKind>> pole_locate(const WellParams& params, int n_max)
{
    auto states = bound::solve_spectrum(params, n_max);
    std::vector<std::pair<double, PoleKind>> poles;
    for (const auto& s : states) {
        double k_val = bound::parity_condition(params, s.energy, bound::Parity::odd);
        double kp_val = bound::parity_condition(params, s.energy, bound::Parity::even);
        PoleKind kind = (std::abs(k_val) < std::abs(kp_val)) ? PoleKind::k_zero
                                                             : PoleKind::kprime_zero;
        poles.emplace_back(s.energy, kind);
    }
    return poles;
}

ScatterPoint substituted_rt(const WellParams& params, double energy)
{
    Wavenumbers w = wavenumbers(params, energy); // k plays the role of p
    Complex z = kI * w.lambda;                    // sa -> i qa
    MatchCoefficients m = coefficients_from(hankel_set(w.order, z));
    return point_from(m, w.k_or_p, params.a, energy);
}

} // namespace xwell::scatter
