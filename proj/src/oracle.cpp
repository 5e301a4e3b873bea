#include "xwell/oracle.hpp"
#include "xwell/errors.hpp"
#include "xwell/quadrature.hpp"
#include "xwell/rootfind.hpp"
#include "xwell/semiclassical.hpp"
#include "xwell/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace xwell::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const Complex kI{0.0, 1.0};

double well_f(const WellParams& params, double x, double energy)
{
    return params.two_mu_over_hbar2 * (potential_value(params, x) - energy);
}

} // namespace

double numerov_shoot(const WellParams& params, bound::Parity parity, double energy,
                     double h, double x_max)
{
    validate(params);
    if (h > 1e-3 * params.a * (1.0 + 1e-9))
        throw StepTooLarge("Numerov step h = " + std::to_string(h) +
                           " exceeds 1e-3 * a");
    if (!(x_max > 2.0 * h))
        throw Error("x_max too small for the Numerov scheme");

    const double c = params.two_mu_over_hbar2;
    const double f0 = c * (0.0 - energy); // V(0) = 0
    const double fp0 = c * params.v0 * 2.0 / params.a;
    const double fpp0 = c * params.v0 * 4.0 / (params.a * params.a);

    double y0, y1;
    if (parity == bound::Parity::even) {
        // psi(0) = 1, psi'(0) = 0
        y0 = 1.0;
        y1 = 1.0 + f0 * h * h / 2.0 + fp0 * h * h * h / 6.0 +
             (fpp0 + f0 * f0) * h * h * h * h / 24.0;
    } else {
        // psi(0) = 0, psi'(0) = 1
        y0 = 0.0;
        y1 = h + f0 * h * h * h / 6.0 + 2.0 * fp0 * h * h * h * h / 24.0;
    }

    const long n_steps = std::lround(x_max / h);
    const double h2_12 = h * h / 12.0;
    double f_prev = well_f(params, 0.0, energy);
    double f_cur = well_f(params, h, energy);
    for (long i = 1; i < n_steps; ++i) {
        double x_next = (i + 1) * h;
        double f_next = well_f(params, x_next, energy);
        double y2 = (2.0 * y1 * (1.0 + 5.0 * h2_12 * f_cur) -
                     y0 * (1.0 - h2_12 * f_prev)) /
                    (1.0 - h2_12 * f_next);
        y0 = y1;
        y1 = y2;
        f_prev = f_cur;
        f_cur = f_next;
        double mag = std::abs(y1);
        if (!std::isfinite(mag))
            throw OverflowBeforeXmax("tail overflowed at x = " + std::to_string(x_next));
        if (mag > 1e100) {
            // only the sign of the tail matters
            y0 /= mag;
            y1 /= mag;
        }
    }
    return y1;
}

double numerov_decay_ratio(const WellParams& params, double energy,
                           double x_a, double x_b, double x_start, double h)
{
    validate(params);
    if (h > 1e-3 * params.a * (1.0 + 1e-9))
        throw StepTooLarge("Numerov step h = " + std::to_string(h) +
                           " exceeds 1e-3 * a");
    if (!(x_a < x_b && x_b < x_start))
        throw Error("numerov_decay_ratio needs x_a < x_b < x_start");

    const long ib = std::lround((x_start - x_b) / h);
    const long ia = std::lround((x_start - x_a) / h);
    if (std::abs(ib * h - (x_start - x_b)) > 1e-9 ||
        std::abs(ia * h - (x_start - x_a)) > 1e-9)
        throw Error("x_a, x_b, x_start must lie on a common h-grid");

    // Generic seed: its unwanted decaying-inward component dies off
    // relative to the one that grows toward the well.
    double y0 = 0.0;
    double y1 = 1.0;
    double psi_b = 0.0;
    const double h2_12 = h * h / 12.0;
    double f_prev = well_f(params, x_start, energy);
    double f_cur = well_f(params, x_start - h, energy);
    for (long i = 1; i < ia; ++i) {
        double x_next = x_start - (i + 1) * h;
        double f_next = well_f(params, x_next, energy);
        double y2 = (2.0 * y1 * (1.0 + 5.0 * h2_12 * f_cur) -
                     y0 * (1.0 - h2_12 * f_prev)) /
                    (1.0 - h2_12 * f_next);
        y0 = y1;
        y1 = y2;
        f_prev = f_cur;
        f_cur = f_next;
        if (i + 1 == ib)
            psi_b = y1;
        double mag = std::abs(y1);
        if (!std::isfinite(mag))
            throw OverflowBeforeXmax("inward sweep overflowed at x = " +
                                     std::to_string(x_next));
        if (mag > 1e100) {
            y0 /= mag;
            y1 /= mag;
            psi_b /= mag;
        }
    }
    if (ib <= 1)
        psi_b = (ib == 1) ? 1.0 : 0.0;
    return psi_b / y1;
}

namespace {

double tail_value(const WellParams& params, bound::Parity parity, double energy)
{
    double tp = energy > 0.0 ? turning_points(params, energy).second : 0.0;
    double x_max = tp + 3.0 * params.a;
    return numerov_shoot(params, parity, energy, 1e-3 * params.a, x_max);
}

} // namespace

std::vector<std::pair<int, double>> shoot_spectrum(const WellParams& params, int n_max)
{
    validate(params);
    struct Root {
        double energy;
        bound::Parity parity;
    };
    std::vector<Root> roots;
    double e_hi = 10.0 * params.v0;
    for (int attempt = 0; attempt < 12; ++attempt) {
        roots.clear();
        for (bound::Parity parity : {bound::Parity::even, bound::Parity::odd}) {
            const double step = 0.1 * params.v0;
            double e_prev = -params.v0 + 0.01 * params.v0;
            double t_prev = tail_value(params, parity, e_prev);
            for (double e = e_prev + step; e <= e_hi; e += step) {
                double t_cur = tail_value(params, parity, e);
                if ((t_prev > 0.0) != (t_cur > 0.0)) {
                    auto f = [&](double x) { return tail_value(params, parity, x); };
                    roots.push_back({rootfind::bisect_secant(f, e_prev, e, 1e-7, 0), parity});
                }
                e_prev = e;
                t_prev = t_cur;
            }
        }
        if (static_cast<int>(roots.size()) >= n_max + 1) {
            std::sort(roots.begin(), roots.end(),
                      [](const Root& a, const Root& b) { return a.energy < b.energy; });
            std::vector<std::pair<int, double>> out;
            for (int n = 0; n <= n_max; ++n) {
                bound::Parity expected =
                    (n % 2 == 0) ? bound::Parity::even : bound::Parity::odd;
                if (roots[n].parity != expected)
                    throw BracketingFailed("shooting parity sequence broken at n = " +
                                           std::to_string(n));
                out.emplace_back(n, roots[n].energy);
            }
            return out;
        }
        e_hi *= 2.0;
    }
    throw BracketingFailed("shooting could not isolate enough eigenvalues");
}

namespace {

// The reflection K = pi (I_{-nu} - I_nu) / (2 sin pi nu) subtracts two
// exponentially growing values to produce a decaying one; the whole route
// runs in 80-bit precision to survive the e^{2x} cancellation at the top
// of the validated range.
using LD = long double;
using CL = std::complex<LD>;

constexpr LD kPiL = 3.14159265358979323846264338327950288L;
constexpr LD kEulerGammaL = 0.57721566490153286060651209008240243104L;

CL gamma_ld(CL z)
{
    static constexpr LD g = 607.0L / 128.0L;
    static constexpr LD c[15] = {
        0.99999999999999709182L, 57.156235665862923517L, -59.597960355475491248L,
        14.136097974741747174L, -0.49191381609762019978L, 0.33994649984811888699e-4L,
        0.46523628927048575665e-4L, -0.98374475304879564677e-4L,
        0.15808870322491248884e-3L, -0.21026444172410488319e-3L,
        0.21743961811521264320e-3L, -0.16431810653676389022e-3L,
        0.84418223983852743293e-4L, -0.26190838401581408670e-4L,
        0.36899182659531622704e-5L};
    if (z.real() < 0.5L)
        return kPiL / (std::sin(kPiL * z) * gamma_ld(CL(1.0L, 0.0L) - z));
    CL a(c[0], 0.0L);
    for (int k = 1; k < 15; ++k)
        a += c[k] / (z - CL(1.0L, 0.0L) + CL(static_cast<LD>(k), 0.0L));
    CL t = z + (g - 0.5L);
    return std::sqrt(CL(2.0L * kPiL, 0.0L)) * std::pow(t, z - CL(0.5L, 0.0L)) *
           std::exp(-t) * a;
}

// Ascending series for I_nu(x), independent of the quadrature route under test.
CL i_series(CL nu, LD x)
{
    if (!(x > 0.0L) || x > static_cast<LD>(specfun::kSeriesZMax))
        throw ArgumentOutOfSpecfunDomain("i_series needs 0 < x <= series cap");
    const CL quarter_x2(x * x / 4.0L, 0.0L);
    CL term{1.0L, 0.0L};
    CL sum{1.0L, 0.0L};
    for (int m = 0; m < specfun::kSeriesTermCap; ++m) {
        term *= quarter_x2 / (CL(static_cast<LD>(m + 1), 0.0L) *
                              (nu + CL(static_cast<LD>(m + 1), 0.0L)));
        sum += term;
        if (std::abs(term) < 1e-21L * std::abs(sum))
            break;
    }
    CL pref = std::exp(nu * std::log(CL(x / 2.0L, 0.0L))) / gamma_ld(nu + CL(1.0L, 0.0L));
    return pref * sum;
}

CL k_series_direct(CL nu, LD x)
{
    CL s = std::sin(kPiL * nu);
    return kPiL * (i_series(-nu, x) - i_series(nu, x)) / (2.0L * s);
}

// nu -> 0 limit done analytically:
// K_0(x) = -(ln(x/2) + gamma) I_0(x) + sum_{m>=1} (x^2/4)^m / (m!)^2 H_m.
LD k0_log_series(LD x)
{
    const LD q = x * x / 4.0L;
    LD term = 1.0L; // (x^2/4)^m / (m!)^2
    LD i0 = 1.0L;
    LD harmonic = 0.0L;
    LD tail = 0.0L;
    for (int m = 1; m < specfun::kSeriesTermCap; ++m) {
        term *= q / (static_cast<LD>(m) * static_cast<LD>(m));
        i0 += term;
        harmonic += 1.0L / static_cast<LD>(m);
        tail += term * harmonic;
        if (term * (harmonic + 1.0L) < 1e-22L * (std::abs(tail) + i0))
            break;
    }
    return -(std::log(x / 2.0L) + kEulerGammaL) * i0 + tail;
}

} // namespace

Complex k_series_oracle(Complex nu, double x)
{
    const CL nuL(static_cast<LD>(nu.real()), static_cast<LD>(nu.imag()));
    const LD xL = static_cast<LD>(x);
    double nearest = std::round(nu.real());
    double d = std::hypot(nu.real() - nearest, nu.imag());
    if (d >= 1e-3) {
        CL r = k_series_direct(nuL, xL);
        return Complex(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    if (nearest == 0.0 && d < 1e-8)
        return Complex(static_cast<double>(k0_log_series(xL)), 0.0);

    // integer-order limit by the same two-step Richardson scheme used for
    // the Hankel pair, with shifts perpendicular to (nu - n)
    CL u = (d > 1e-12) ? (nuL - static_cast<LD>(nearest)) / static_cast<LD>(d)
                       : CL(1.0L, 0.0L);
    CL v = CL(0.0L, 1.0L) * u;
    auto centered = [&](LD delta) {
        return 0.5L * (k_series_direct(nuL + delta * v, xL) +
                       k_series_direct(nuL - delta * v, xL));
    };
    CL a1 = centered(1e-4L);
    CL a2 = centered(5e-5L);
    CL r = (4.0L * a2 - a1) / 3.0L;
    if (std::abs(r - a2) > 1e-6L * (1.0L + std::abs(r)))
        throw NearIntegerOrderLimitFailed("K order limit defect too large");
    return Complex(static_cast<double>(r.real()), static_cast<double>(r.imag()));
}

scatter::MatchCoefficients matching_linear_solve(const BarrierParams& params,
                                                 double energy)
{
    Wavenumbers w = wavenumbers(params, energy);
    const double z = w.lambda;
    auto hp = specfun::hankel_pair(w.order, z);
    auto hm = specfun::hankel_pair(-w.order, z);
    auto dp = specfun::hankel_deriv_pair(w.order, z);
    auto dm = specfun::hankel_deriv_pair(-w.order, z);

    // A H2_nu + B H1_{-nu} = C H1_nu,  A H2'_nu + B H1'_{-nu} = -C H1'_nu
    // with A = 1: unknowns B, C.
    Complex m11 = hm.h1, m12 = -hp.h1;
    Complex m21 = dm.h1, m22 = dp.h1;
    Complex r1 = -hp.h2, r2 = -dp.h2;
    Complex det = m11 * m22 - m12 * m21;
    double scale = std::abs(m11) * std::abs(m22) + std::abs(m12) * std::abs(m21);
    if (std::abs(det) < 1e-13 * scale)
        throw SingularSystem("matching system singular at E = " + std::to_string(energy));
    Complex b = (r1 * m22 - m12 * r2) / det;
    Complex c = (m11 * r2 - r1 * m21) / det;
    return {Complex(1.0, 0.0), b, c};
}

namespace {

// Action integrand with the endpoint square-root removed by x = x2 sin(theta).
double action_by_quadrature(double x2, const std::function<double(double)>& radicand)
{
    auto f = [&](double theta) {
        double x = x2 * std::sin(theta);
        double r = std::max(0.0, radicand(x));
        return std::sqrt(r) * x2 * std::cos(theta);
    };
    return quad::integrate(f, -kPi / 2.0, kPi / 2.0, 1e-12, 0.0, 14).value;
}

} // namespace

double wkb_action_quadrature(const WellParams& params, double energy)
{
    if (energy < 0.0)
        throw NegativeEnergyForWellAction("E = " + std::to_string(energy));
    if (energy == 0.0)
        return 0.0;
    double x2 = turning_points(params, energy).second;
    double val = action_by_quadrature(x2, [&](double x) {
        return params.two_mu_over_hbar2 * (energy - potential_value(params, x));
    });
    return val / kPi;
}

double wkb_action_quadrature(const BarrierParams& params, double energy)
{
    if (!(energy < 0.0))
        throw EnergyNotBelowBarrierTop("E = " + std::to_string(energy));
    double x2 = turning_points(params, energy).second;
    return action_by_quadrature(x2, [&](double x) {
        return params.two_mu_over_hbar2 * (potential_value(params, x) - energy);
    });
}

namespace {

struct CheckLog {
    std::ostream& os;
    bool all_ok = true;

    void report(const std::string& name, bool ok, double worst, double tol)
    {
        all_ok = all_ok && ok;
        os << (ok ? "ok   " : "FAIL ") << name << "  (worst " << worst
           << ", tol " << tol << ")\n";
    }
};

} // namespace

bool selfcheck(std::ostream& os)
{
    CheckLog log{os};
    const WellParams well{1.0, 1.0, 1.0};
    const BarrierParams barrier{5.0, 1.0, 1.0};

    // 1. Numerov shooting vs exact K-condition spectrum
    {
        auto exact = bound::solve_spectrum(well, 3);
        auto shot = shoot_spectrum(well, 3);
        double worst = 0.0;
        for (int n = 0; n <= 3; ++n)
            worst = std::max(worst, std::abs(exact[n].energy - shot[n].second));
        log.report("numerov shooting vs exact spectrum", worst <= 1e-3, worst, 1e-3);
    }

    // 2. matching linear solve vs closed-form amplitude ratios, both branches
    {
        double worst = 0.0;
        for (double e : {-7.5, -3.0, -1.1487, 0.5, 3.0, 8.0}) {
            auto closed = scatter::coefficients_ABC(barrier, e);
            auto solved = matching_linear_solve(barrier, e);
            Complex rb = closed.b / closed.a - solved.b;
            Complex rc = closed.c / closed.a - solved.c;
            double scale = std::max(std::abs(solved.b), std::abs(solved.c));
            worst = std::max(worst, std::max(std::abs(rb), std::abs(rc)) / scale);
        }
        log.report("linear-solve vs closed-form B/A, C/A", worst <= 1e-9, worst, 1e-9);
    }

    // 3. K of imaginary order: quadrature route vs series route
    {
        double worst = 0.0;
        for (double nu : {0.0, 0.5, 1.9173, 3.0, 4.6, 6.0}) {
            for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
                double quad_route = specfun::k_imag_order(nu, x);
                Complex series_route = k_series_oracle(Complex(0.0, nu), x);
                double rel = std::abs(quad_route - series_route.real()) /
                             std::abs(series_route.real());
                worst = std::max(worst, rel);
            }
        }
        log.report("K quadrature vs series route", worst <= 1e-9, worst, 1e-9);
    }

    // 4. Hankel Wronskian over 200 random complex orders
    {
        std::mt19937 gen(12345);
        std::uniform_real_distribution<double> re(-5.0, 5.0);
        std::uniform_real_distribution<double> zr(0.2, 20.0);
        double worst = 0.0;
        double worst_rel = 0.0;
        int accepted = 0;
        while (accepted < 200) {
            Complex nu(re(gen), re(gen));
            if (std::abs(nu) > 5.0)
                continue;
            ++accepted;
            double z = zr(gen);
            auto h = specfun::hankel_pair(nu, z);
            auto d = specfun::hankel_deriv_pair(nu, z);
            Complex w = h.h1 * d.h2 - d.h1 * h.h2 + 4.0 * kI / (kPi * z);
            double scale = std::abs(h.h1) * std::abs(d.h2) + std::abs(d.h1) * std::abs(h.h2);
            worst = std::max(worst, std::abs(w));
            worst_rel = std::max(worst_rel, std::abs(w) / scale);
        }
        log.report("Hankel Wronskian defect (200 random)", worst <= 1e-9, worst, 1e-9);
        // The absolute bound is not reachable in 64-bit arithmetic where the
        // cancelling products reach ~1e8 (|Re nu| near 5 with z below ~0.5);
        // the defect relative to the product magnitude shows the actual
        // rounding floor.
        log.os << "     (worst defect relative to product magnitude: " << worst_rel
               << ")\n";
    }

    // 5. closed-form actions vs direct quadrature
    {
        std::mt19937 gen(777);
        std::uniform_real_distribution<double> ew(0.05, 30.0);
        std::uniform_real_distribution<double> eb(-20.0, -0.05);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            double e = ew(gen);
            double closed = semiclassical::action_f(well, e).value;
            double direct = wkb_action_quadrature(well, e);
            worst = std::max(worst, std::abs(closed - direct) / std::abs(direct));
        }
        for (int i = 0; i < 50; ++i) {
            double e = eb(gen);
            double closed = semiclassical::barrier_action_F(barrier, e).value;
            double direct = wkb_action_quadrature(barrier, e);
            worst = std::max(worst, std::abs(closed - direct) / std::abs(direct));
        }
        log.report("WKB closed forms vs quadrature", worst <= 1e-8, worst, 1e-8);
    }

    return log.all_ok;
}

} // namespace xwell::oracle
