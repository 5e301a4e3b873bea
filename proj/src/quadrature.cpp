#include "xwell/quadrature.hpp"
#include "xwell/errors.hpp"

#include <cmath>
#include <mutex>

namespace xwell::quad {

namespace {

struct Gl32Table {
    std::array<double, 32> x{};
    std::array<double, 32> w{};
};

// Classic gauleg: roots of P_32 via Newton on the three-term recurrence.
Gl32Table build_gl32()
{
    constexpr int n = 32;
    Gl32Table t;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-16)
                break;
        }
        t.x[i] = -z;
        t.x[n - 1 - i] = z;
        t.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        t.w[n - 1 - i] = t.w[i];
    }
    return t;
}

const Gl32Table& table()
{
    static const Gl32Table t = build_gl32();
    return t;
}

double composite(const std::function<double(double)>& f, double a, double b, int panels)
{
    const auto& t = table();
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double s = 0.0;
        for (int i = 0; i < 32; ++i)
            s += t.w[i] * f(mid + 0.5 * h * t.x[i]);
        sum += 0.5 * h * s;
    }
    return sum;
}

} // namespace

const std::array<double, 32>& gl32_nodes() { return table().x; }
const std::array<double, 32>& gl32_weights() { return table().w; }

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_floor, int max_doublings)
{
    int panels = 1;
    double prev = composite(f, a, b, panels);
    for (int it = 0; it < max_doublings; ++it) {
        panels *= 2;
        double cur = composite(f, a, b, panels);
        double diff = std::abs(cur - prev);
        if (diff <= rel_tol * std::abs(cur) + abs_floor)
            return {cur, diff};
        prev = cur;
    }
    throw QuadratureNonConvergence("composite Gauss-Legendre did not settle on [" +
                                   std::to_string(a) + ", " + std::to_string(b) + "]");
}

} // namespace xwell::quad
