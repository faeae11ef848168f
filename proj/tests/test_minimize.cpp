#include <doctest.h>

#include <cmath>

#include "hellmann/errors.hpp"
#include "hellmann/minimize.hpp"

using namespace hellmann;

TEST_CASE("golden_section on a parabola") {
    auto const m = golden_section([](double x) { return (x - 3.0) * (x - 3.0) - 1.0; }, 0.0, 10.0);
    CHECK(m.x == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(m.value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("scan_minimize finds the global minimum among several") {
    // local minimum near x = 10, deeper one near x = 0.1
    auto f = [](double x) {
        double const a = std::log(x / 0.1);
        double const b = std::log(x / 10.0);
        return std::min(a * a - 2.0, b * b - 1.0);
    };
    auto const m = scan_minimize(f, {1e-4, 1e4});
    CHECK(m.x == doctest::Approx(0.1).epsilon(1e-6));
    CHECK(m.value == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("scan_minimize breaks ties toward the smallest x") {
    // two flat wells of equal depth
    auto f = [](double x) { return (x >= 0.1 && x <= 0.2) || (x >= 10.0 && x <= 20.0) ? -1.0 : 0.0; };
    auto const m = scan_minimize(f, {1e-3, 1e3, 2001});
    CHECK(m.value == -1.0);
    CHECK(m.x >= 0.09);
    CHECK(m.x <= 0.21);
}

TEST_CASE("scan_minimize reports a boundary minimum") {
    CHECK_THROWS_AS(scan_minimize([](double x) { return x; }, {1.0, 10.0}), NumericalError);
    CHECK_THROWS_AS(scan_minimize([](double x) { return x; }, {0.0, 10.0}), DomainError);
}
