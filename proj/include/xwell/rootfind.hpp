#ifndef XWELL_ROOTFIND_HPP
#define XWELL_ROOTFIND_HPP

#include "xwell/errors.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace xwell::rootfind {

// Bracketed bisection to the requested width, then a few secant steps.
// f(lo) and f(hi) must have opposite signs.
inline double bisect_secant(const std::function<double(double)>& f,
                            double lo, double hi,
                            double width = 1e-8, int secant_steps = 3)
{
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw BracketingFailed("no sign change on [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
    while (hi - lo > width) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    double x0 = lo, x1 = hi, f0 = flo, f1 = fhi;
    for (int i = 0; i < secant_steps; ++i) {
        if (f1 == f0)
            break;
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 >= lo - width && x2 <= hi + width))
            break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1);
        if (f1 == 0.0)
            break;
    }
    return x1;
}

} // namespace xwell::rootfind

#endif
