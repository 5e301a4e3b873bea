#include "doctest.h"

#include "xwell/errors.hpp"
#include "xwell/model.hpp"

#include <cmath>
#include <random>

using namespace xwell;

TEST_CASE("well potential values")
{
    WellParams w{1.0, 1.0, 1.0};
    CHECK(potential_value(w, 0.0) == 0.0);
    CHECK(potential_value(w, 1.0) == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-14));
    CHECK(potential_value(w, -1.0) == potential_value(w, 1.0));
}

TEST_CASE("barrier potential values")
{
    BarrierParams b{5.0, 0.2, 1.0};
    CHECK(potential_value(b, 0.2) ==
          doctest::Approx(-5.0 * (std::exp(2.0) - 1.0)).epsilon(1e-14));
    CHECK(potential_value(b, -0.2) == potential_value(b, 0.2));
}

TEST_CASE("well wavenumbers")
{
    WellParams w{1.0, 1.0, 1.0};
    Wavenumbers v = wavenumbers(w, 2.6759);
    CHECK(v.k_or_p.real() == doctest::Approx(std::sqrt(3.6759)).epsilon(1e-12));
    CHECK(v.k_or_p.imag() == 0.0);
    CHECK(v.q_or_s == doctest::Approx(1.0));
    CHECK(v.lambda == doctest::Approx(1.0));
    CHECK(v.order == Complex(0.0, 1.0) * v.k_or_p * w.a);
    CHECK_THROWS_AS((void)wavenumbers(w, -1.0), EnergyBelowWellBottom);
}

TEST_CASE("barrier wavenumber branches")
{
    BarrierParams b{5.0, 1.0, 1.0};
    Wavenumbers top = wavenumbers(b, 5.0);
    CHECK(std::abs(top.k_or_p) == 0.0);
    CHECK(std::abs(top.order) == 0.0);

    Wavenumbers below = wavenumbers(b, 0.0);
    CHECK(below.k_or_p.real() == 0.0);
    CHECK(below.k_or_p.imag() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
    CHECK(below.order.imag() == 0.0);
    CHECK(below.order.real() == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-14));

    Wavenumbers above = wavenumbers(b, 8.0);
    CHECK(above.k_or_p.imag() == 0.0);
    CHECK(above.order.real() == 0.0);
}

TEST_CASE("order is continuous across the barrier top")
{
    BarrierParams b{5.0, 1.0, 1.0};
    CHECK(std::abs(wavenumbers(b, 5.0 + 1e-6).order) <= 2e-3);
    CHECK(std::abs(wavenumbers(b, 5.0 - 1e-6).order) <= 2e-3);
}

TEST_CASE("turning points")
{
    WellParams w{1.0, 1.0, 1.0};
    CHECK(turning_points(w, 1e-14).second == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(turning_points(w, std::exp(2.0) - 1.0).second == doctest::Approx(1.0).epsilon(1e-12));
    auto [x1, x2] = turning_points(w, 3.0);
    CHECK(x1 == -x2);
    CHECK_THROWS_AS((void)turning_points(w, -0.5), NoClassicalTurningPoints);

    BarrierParams b{5.0, 0.2, 1.0};
    CHECK(turning_points(b, -5.0).second == doctest::Approx(0.1 * std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS((void)turning_points(b, 0.5), NoClassicalTurningPoints);
}

TEST_CASE("potential at the turning point recovers the energy")
{
    std::mt19937 gen(99);
    WellParams w{1.3, 0.7, 2.0};
    std::uniform_real_distribution<double> ew(0.01, 40.0);
    for (int i = 0; i < 100; ++i) {
        double e = ew(gen);
        double x2 = turning_points(w, e).second;
        CHECK(potential_value(w, x2) == doctest::Approx(e).epsilon(1e-12));
    }
    BarrierParams b{4.2, 0.4, 1.0};
    std::uniform_real_distribution<double> eb(-40.0, -0.01);
    for (int i = 0; i < 100; ++i) {
        double e = eb(gen);
        double x2 = turning_points(b, e).second;
        CHECK(potential_value(b, x2) == doctest::Approx(e).epsilon(1e-12));
    }
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(validate(WellParams{-1.0, 1.0, 1.0}), Error);
    CHECK_THROWS_AS(validate(WellParams{1.0, 0.0, 1.0}), Error);
    CHECK_THROWS_AS(validate(BarrierParams{5.0, 1.0, -2.0}), Error);
    CHECK_NOTHROW(validate(WellParams{}));
    CHECK_NOTHROW(validate(BarrierParams{}));
}
