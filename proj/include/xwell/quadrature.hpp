#ifndef XWELL_QUADRATURE_HPP
#define XWELL_QUADRATURE_HPP

#include <array>
#include <functional>

namespace xwell::quad {

// Nodes and weights of the 32-point Gauss-Legendre rule on [-1, 1].
// Computed once by Newton iteration on the Legendre recurrence.
const std::array<double, 32>& gl32_nodes();
const std::array<double, 32>& gl32_weights();

struct QuadResult {
    double value;
    double est_abs_error; // |last refinement step|
};

// Composite 32-point Gauss-Legendre on [a, b]. Starts with one panel and
// doubles the panel count until successive estimates agree to
// rel_tol * |I| (with an absolute floor of abs_floor), up to max_doublings.
// Throws QuadratureNonConvergence if the tolerance is never met.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-13, double abs_floor = 0.0,
                     int max_doublings = 14);

} // namespace xwell::quad

#endif
