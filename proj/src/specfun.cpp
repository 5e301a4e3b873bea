#include "xwell/specfun.hpp"
#include "xwell/errors.hpp"
#include "xwell/quadrature.hpp"

#include <array>
#include <cmath>

namespace xwell::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const Complex kI{0.0, 1.0};

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool is_nonpositive_integer(Complex z)
{
    if (z.imag() != 0.0)
        return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-13;
}

Complex gamma_positive_half(Complex z)
{
    // valid for Re(z) >= 0.5
    Complex a{kLanczos[0], 0.0};
    for (int k = 1; k < 15; ++k)
        a += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
    Complex t = z + (kLanczosG - 0.5);
    return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * a;
}

} // namespace

Complex gamma_complex(Complex z)
{
    if (is_nonpositive_integer(z))
        throw PoleAtNonPositiveInteger("gamma pole at z = " + std::to_string(z.real()));
    if (z.real() < 0.5)
        return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
    return gamma_positive_half(z);
}

namespace {

using CL = std::complex<long double>;

// Ascending series J_nu(z) = (z/2)^nu / Gamma(nu+1) * sum_m c_m,
// c_0 = 1, c_{m+1} = c_m * (-(z/2)^2) / ((m+1)(nu+m+1)).
// Terms accumulate in extended precision; the per-term recurrence keeps the
// gamma evaluation out of the cancelling part of the sum.
SpecFunResult series_j(Complex nu, Complex z)
{
    const double az = std::abs(z);
    if (!(az > 0.0))
        throw ArgumentOutOfSpecfunDomain("bessel_j needs |z| > 0");
    if (az > kSeriesZMax)
        throw ArgumentTooLargeForSeries("|z| = " + std::to_string(az) +
                                        " exceeds series cap " + std::to_string(kSeriesZMax));

    // J_{-m}(z) = (-1)^m J_m(z) for integer m; the recurrence below would
    // divide by zero there.
    if (nu.imag() == 0.0) {
        double r = std::round(nu.real());
        if (r < 0.0 && std::abs(nu.real() - r) < 1e-13) {
            SpecFunResult pos = series_j(Complex(-r, 0.0), z);
            double sign = (static_cast<long long>(-r) % 2 == 0) ? 1.0 : -1.0;
            return {sign * pos.value, pos.est_abs_error};
        }
    }

    const CL quarter_z2 = CL(z) * CL(z) / CL(4.0L);
    const CL nuL(nu);
    CL term{1.0L, 0.0L};
    CL sum{1.0L, 0.0L};
    long double max_mag = 1.0L;
    int m = 0;
    int small_streak = 0;
    long double last_mag = 1.0L;
    for (; m < kSeriesTermCap; ++m) {
        term *= -quarter_z2 / (CL(static_cast<long double>(m + 1)) * (nuL + CL(static_cast<long double>(m + 1))));
        sum += term;
        last_mag = std::abs(term);
        if (last_mag > max_mag)
            max_mag = last_mag;
        if (last_mag < 1e-19L * std::abs(sum)) {
            if (++small_streak >= 2)
                break;
        } else {
            small_streak = 0;
        }
    }
    if (m >= kSeriesTermCap)
        throw NonConvergence("bessel series hit the term cap");

    Complex pref = std::exp(nu * std::log(z / 2.0)) / gamma_complex(nu + 1.0);
    Complex value = pref * Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    double est = std::abs(pref) * (static_cast<double>(last_mag) + static_cast<double>(max_mag) * 1.1e-19);
    return {value, est};
}

HankelPair hankel_direct(Complex nu, Complex z)
{
    Complex jp = series_j(nu, z).value;
    Complex jm = series_j(-nu, z).value;
    Complex s = std::sin(kPi * nu);
    Complex h1 = (jm - std::exp(-kI * kPi * nu) * jp) / (kI * s);
    Complex h2 = (std::exp(kI * kPi * nu) * jp - jm) / (kI * s);
    return {h1, h2};
}

// Distance from nu to the nearest integer in the complex plane.
double integer_distance(Complex nu, double& nearest)
{
    nearest = std::round(nu.real());
    return std::hypot(nu.real() - nearest, nu.imag());
}

// sin(pi nu) vanishes at integer orders while H itself stays analytic in nu.
// Evaluate at nu +- delta along a direction perpendicular to (nu - n), so
// the shifted points keep their distance from the integer, then Richardson-
// extrapolate the even-order error away (delta and delta/2).
HankelPair hankel_integer_limit(Complex nu, Complex z, double n, double d)
{
    Complex u = (d > 1e-12) ? (nu - n) / d : Complex(1.0, 0.0);
    Complex v = kI * u;

    auto centered = [&](double delta) {
        HankelPair a = hankel_direct(nu + delta * v, z);
        HankelPair b = hankel_direct(nu - delta * v, z);
        return HankelPair{0.5 * (a.h1 + b.h1), 0.5 * (a.h2 + b.h2)};
    };

    HankelPair a1 = centered(1e-4);
    HankelPair a2 = centered(5e-5);
    HankelPair r{(4.0 * a2.h1 - a1.h1) / 3.0, (4.0 * a2.h2 - a1.h2) / 3.0};

    double defect = std::max(std::abs(r.h1 - a2.h1), std::abs(r.h2 - a2.h2));
    double scale = 1.0 + std::max(std::abs(r.h1), std::abs(r.h2));
    if (defect > 1e-6 * scale)
        throw NearIntegerOrderLimitFailed("order limit defect " + std::to_string(defect));
    return r;
}

HankelPair hankel_any(Complex nu, Complex z)
{
    double nearest = 0.0;
    double d = integer_distance(nu, nearest);
    if (d < 1e-3)
        return hankel_integer_limit(nu, z, nearest, d);
    return hankel_direct(nu, z);
}

HankelPair hankel_deriv_any(Complex nu, Complex z)
{
    HankelPair at_nu = hankel_any(nu, z);
    HankelPair below = hankel_any(nu - 1.0, z);
    return {below.h1 - (nu / z) * at_nu.h1, below.h2 - (nu / z) * at_nu.h2};
}

} // namespace

SpecFunResult bessel_j(Complex nu, double z)
{
    if (!(z > 0.0))
        throw ArgumentOutOfSpecfunDomain("bessel_j needs z > 0");
    return series_j(nu, Complex(z, 0.0));
}

SpecFunResult bessel_j_arg(Complex nu, Complex z)
{
    return series_j(nu, z);
}

HankelPair hankel_pair(Complex nu, double z)
{
    if (!(z > 0.0))
        throw ArgumentOutOfSpecfunDomain("hankel_pair needs z > 0");
    return hankel_any(nu, Complex(z, 0.0));
}

HankelPair hankel_pair_arg(Complex nu, Complex z)
{
    return hankel_any(nu, z);
}

HankelPair hankel_deriv_pair(Complex nu, double z)
{
    if (!(z > 0.0))
        throw ArgumentOutOfSpecfunDomain("hankel_deriv_pair needs z > 0");
    return hankel_deriv_any(nu, Complex(z, 0.0));
}

HankelPair hankel_deriv_pair_arg(Complex nu, Complex z)
{
    return hankel_deriv_any(nu, z);
}

Complex hankel_asymptotic(int kind, Complex nu, double z)
{
    Complex phase = Complex(z, 0.0) - nu * (kPi / 2.0) - (kPi / 4.0);
    Complex amp = std::sqrt(2.0 / (kPi * z));
    if (kind == 1)
        return amp * std::exp(kI * phase);
    if (kind == 2)
        return amp * std::exp(-kI * phase);
    throw ArgumentOutOfSpecfunDomain("hankel kind must be 1 or 2");
}

namespace {

// Upper limit where exp(-x cosh t) is negligible relative to exp(-x).
double cosh_cutoff(double x)
{
    return std::acosh(1.0 + 76.0 / x);
}

double k_integral(double nu_im, double x, bool deriv)
{
    if (!(x > 0.0))
        throw ArgumentOutOfSpecfunDomain("k_imag_order needs x > 0");
    const double nu = std::abs(nu_im); // K is even in the order
    const double t_max = cosh_cutoff(x);
    auto f = [&](double t) {
        double c = std::cosh(t);
        double v = std::exp(-x * c) * std::cos(nu * t);
        return deriv ? -c * v : v;
    };
    double scale = t_max * std::exp(-x) * (deriv ? std::cosh(t_max) : 1.0);
    auto q = quad::integrate(f, 0.0, t_max, 1e-13, 1e-15 * scale + 1e-300, 16);
    return q.value;
}

} // namespace

double k_imag_order(double nu_im, double x)
{
    return k_integral(nu_im, x, false);
}

double k_imag_order_deriv(double nu_im, double x)
{
    return k_integral(nu_im, x, true);
}

} // namespace xwell::specfun
