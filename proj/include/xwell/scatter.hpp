#ifndef XWELL_SCATTER_HPP
#define XWELL_SCATTER_HPP

#include "xwell/curve_table.hpp"
#include "xwell/model.hpp"

#include <utility>
#include <vector>

namespace xwell::scatter {

struct EnergyGridSpec {
    double e_min;
    double e_max;
    int points;

    double at(int i) const
    {
        if (points == 1)
            return e_min;
        return e_min + (e_max - e_min) * i / (points - 1.0);
    }
};

struct MatchCoefficients {
    Complex a;
    Complex b;
    Complex c;
};

struct ScatterPoint {
    double energy = 0.0;
    Complex p;       // branch from model::wavenumbers
    Complex r_amp;   // B/A
    Complex t_ratio; // C/A
    double r = 0.0;
    double t = 0.0;
};

struct Currents {
    double ji;
    double jr;
    double jt;
};

// Matching amplitudes at x = 0 from the Hankel closed forms at z = sa.
MatchCoefficients coefficients_ABC(const BarrierParams& params, double energy);

// R = |B/A|^2, T = |e^{pi p a} C/A|^2, via coefficients_ABC.
ScatterPoint rt_probabilities(const BarrierParams& params, double energy);

// Independent amplitude-ratio route straight from the H2/H1 ratio forms.
// Gives the same R and T as rt_probabilities; kept separate for
// cross-validation.
ScatterPoint rt_probabilities_ratio_route(const BarrierParams& params, double energy);

// Incident / reflected / transmitted current densities for the given
// amplitudes, with the e^{-+ pi p a} factors active on the real-p branch.
Currents current_densities(const BarrierParams& params, double energy,
                           const MatchCoefficients& coeffs);

// Columns E, R, T, unitarity_defect; metadata records the parameters and
// the max unitarity defect. Points that fail numerically are skipped and
// counted in metadata ("invalid_points"). Evaluation may be parallel.
CurveTable sweep(const BarrierParams& params, const EnergyGridSpec& grid,
                 int n_threads = 1);

// Root of R(E) - 1/2 on the given interval.
double find_crossover(const BarrierParams& params, double e_lo, double e_hi);

enum class PoleKind { k_zero, kprime_zero };

// Poles of the u0 -> -v0 continued amplitudes: exactly the roots of
// K_{ipa}(qa) (odd states) and K'_{ipa}(qa) (even states).
std::vector<std::pair<double, PoleKind>> pole_locate(const WellParams& params, int n_max);

// Formal R, T of the continued amplitudes for the well (diverges at poles;
// throws PoleEncountered when the denominator vanishes).
ScatterPoint substituted_rt(const WellParams& params, double energy);

} // namespace xwell::scatter

#endif
