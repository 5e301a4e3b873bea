#ifndef XWELL_SPECFUN_HPP
#define XWELL_SPECFUN_HPP

#include <complex>

namespace xwell::specfun {

using Complex = std::complex<double>;

struct SpecFunResult {
    Complex value;
    double est_abs_error; // upper-bound estimate from truncation / refinement
};

struct HankelPair {
    Complex h1;
    Complex h2;
};

// Ascending series are trusted up to this argument magnitude.
inline constexpr double kSeriesZMax = 30.0;
inline constexpr int kSeriesTermCap = 200;

// Gamma function for complex argument, Lanczos approximation with
// reflection for Re(z) < 1/2. Throws PoleAtNonPositiveInteger on poles.
Complex gamma_complex(Complex z);

// Bessel J of complex order, real argument 0 < z <= kSeriesZMax,
// by the ascending power series.
SpecFunResult bessel_j(Complex nu, double z);

// Same series engine with a complex argument; used by the analytic
// continuation of the scattering amplitudes (z = i*qa).
SpecFunResult bessel_j_arg(Complex nu, Complex z);

// H^(1), H^(2) of complex order from the J_{+-nu} combination, with a
// Richardson order-limit near integer orders.
HankelPair hankel_pair(Complex nu, double z);
HankelPair hankel_pair_arg(Complex nu, Complex z);

// d/dz of the pair via H'_nu = H_{nu-1} - (nu/z) H_nu.
HankelPair hankel_deriv_pair(Complex nu, double z);
HankelPair hankel_deriv_pair_arg(Complex nu, Complex z);

// Large-z asymptotic form sqrt(2/(pi z)) exp(+-i(z - nu pi/2 - pi/4)),
// kind = 1 or 2. Escape hatch for arguments beyond the series cap.
Complex hankel_asymptotic(int kind, Complex nu, double z);

// K of purely imaginary order i*nu_im at real x > 0, via the real
// integral representation K_{i nu}(x) = Int_0^inf exp(-x cosh t) cos(nu t) dt.
double k_imag_order(double nu_im, double x);

// dK/dx = -Int_0^inf exp(-x cosh t) cosh(t) cos(nu t) dt.
double k_imag_order_deriv(double nu_im, double x);

} // namespace xwell::specfun

#endif
