#include <doctest.h>

#include <cmath>

#include "aaee/errors.hpp"
#include "aaee/field.hpp"
#include "aaee/init.hpp"
#include "aaee/interpolate.hpp"
#include "aaee/spectral.hpp"

using namespace aaee;

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

ScalarField fill(const Grid2D& g, double (*f)(double, double)) {
    ScalarField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) out(i, j) = f(g.x(i), g.y(j));
    return out;
}
}  // namespace

TEST_CASE("make_grid basic spacings") {
    Grid2D g = make_grid(64, 64, kTwoPi, kTwoPi);
    CHECK(g.dx == doctest::Approx(kTwoPi / 64).epsilon(1e-15));
    CHECK(g.dy == doctest::Approx(kTwoPi / 64).epsilon(1e-15));

    Grid2D h = make_grid(8, 16, 1.0, 2.0);
    CHECK(h.dx == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(h.dy == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("make_grid rejects bad input") {
    CHECK_THROWS_AS(make_grid(7, 8, 1.0, 1.0), config_error);
    CHECK_THROWS_AS(make_grid(8, 9, 1.0, 1.0), config_error);
    CHECK_THROWS_AS(make_grid(4, 8, 1.0, 1.0), config_error);
    CHECK_THROWS_AS(make_grid(8, 8, 0.0, 1.0), config_error);
    CHECK_THROWS_AS(make_grid(8, 8, 1.0, -2.0), config_error);
}

TEST_CASE("spectral_deriv of resolved modes is exact") {
    Grid2D g = make_grid(64, 64, kTwoPi, kTwoPi);
    ScalarField f = fill(g, [](double x, double) { return std::sin(x); });
    ScalarField d = spectral_deriv(f, Axis::x);
    double err = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            err = std::max(err, std::abs(d(i, j) - std::cos(g.x(i))));
    CHECK(err < 1e-12);

    ScalarField c(g);
    for (double& v : c.v) v = 3.7;
    CHECK(spectral_deriv(c, Axis::x).linf() < 1e-13);
    CHECK(spectral_deriv(c, Axis::y).linf() < 1e-13);

    ScalarField f3 = fill(g, [](double, double y) { return std::sin(3.0 * y); });
    ScalarField d3 = spectral_deriv(f3, Axis::y);
    err = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            err = std::max(err, std::abs(d3(i, j) - 3.0 * std::cos(3.0 * g.y(j))));
    CHECK(err < 1e-12);
}

TEST_CASE("spectral_deriv properties: commutation and zero mean") {
    Grid2D g = make_grid(32, 32, kTwoPi, kTwoPi);
    SplitMix64 rng(42);
    for (int rep = 0; rep < 5; ++rep) {
        ScalarField f = random_scalar(g, rng, 5, 1.0);
        ScalarField dxy = spectral_deriv(spectral_deriv(f, Axis::x), Axis::y);
        ScalarField dyx = spectral_deriv(spectral_deriv(f, Axis::y), Axis::x);
        CHECK((dxy - dyx).linf() < 1e-12);
        CHECK(std::abs(spectral_deriv(f, Axis::x).integral()) < 1e-12);
        CHECK(std::abs(spectral_deriv(f, Axis::y).integral()) < 1e-12);
    }
}

TEST_CASE("dealiased product of band-limited fields is the exact projection") {
    Grid2D g = make_grid(32, 32, kTwoPi, kTwoPi);
    const Spectral& sp = spectral_for(g);
    // product of two single modes: cos(a)cos(b) = (cos(a+b)+cos(a-b))/2,
    // all modes resolved at 32^2
    ScalarField a = fill(g, [](double x, double y) { return std::cos(5.0 * x + y); });
    ScalarField b = fill(g, [](double x, double y) { return std::cos(3.0 * x - 2.0 * y); });
    ScalarField p = sp.mul(a, b);
    double err = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double x = g.x(i), y = g.y(j);
            double exact = 0.5 * (std::cos(8.0 * x - y) + std::cos(2.0 * x + 3.0 * y));
            err = std::max(err, std::abs(p(i, j) - exact));
        }
    CHECK(err < 1e-13);
}

TEST_CASE("interpolation reproduces nodes and is 4th-order accurate") {
    Grid2D g = make_grid(64, 64, kTwoPi, kTwoPi);
    ScalarField f = fill(g, [](double x, double) { return std::sin(x); });
    BicubicSpline s(f);
    double node_err = 0.0;
    for (int j = 0; j < g.ny; j += 7)
        for (int i = 0; i < g.nx; i += 5)
            node_err = std::max(node_err, std::abs(s(g.x(i), g.y(j)) - f(i, j)));
    CHECK(node_err < 1e-12);

    // constant field anywhere
    ScalarField c(g);
    for (double& v : c.v) v = -2.5;
    CHECK(interpolate(c, 1.2345, 5.4321) == doctest::Approx(-2.5).epsilon(1e-13));

    // midpoints of sin x
    double mid_err = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        double x = (i + 0.5) * g.dx;
        mid_err = std::max(mid_err, std::abs(s(x, 1.0) - std::sin(x)));
    }
    CHECK(mid_err < 1e-6);

    // periodic wrap: same value at x and x +- L
    CHECK(s(0.3, 0.4) == doctest::Approx(s(0.3 + kTwoPi, 0.4 - kTwoPi)).epsilon(1e-13));
}

TEST_CASE("build_F_from_samples") {
    Grid2D g = make_grid(16, 16, kTwoPi, kTwoPi);

    SUBCASE("two axis-aligned unit samples give half identity") {
        VectorField ex(g), ey(g);
        for (double& v : ex.x.v) v = 1.0;
        for (double& v : ey.y.v) v = 1.0;
        SymTensorField F = build_F_from_samples({{0.5, ex}, {0.5, ey}});
        CHECK((F.c11 - ScalarField(g)).linf() == doctest::Approx(0.5));
        CHECK(F.c12.linf() < 1e-15);
        CHECK((F.c22 - ScalarField(g)).linf() == doctest::Approx(0.5));
    }

    SUBCASE("single diagonal sample is PSD but singular") {
        VectorField d(g);
        for (double& v : d.x.v) v = 1.0;
        for (double& v : d.y.v) v = 1.0;
        SymTensorField F = build_F_from_samples({{1.0, d}});
        CHECK(F.c11(3, 4) == doctest::Approx(1.0));
        CHECK(F.c12(3, 4) == doctest::Approx(1.0));
        CHECK(F.c22(3, 4) == doctest::Approx(1.0));
        CHECK(F.det().linf() < 1e-14);
        CHECK_FALSE(F.spd(1e-8));
    }

    SUBCASE("random sample set matches per-point outer-product sum") {
        SplitMix64 rng(7);
        std::vector<std::pair<double, VectorField>> samples;
        for (int s = 0; s < 5; ++s) {
            VectorField xi(g);
            xi.x = random_scalar(g, rng, 3, 1.0);
            xi.y = random_scalar(g, rng, 3, 1.0);
            samples.emplace_back(0.1 + rng.uniform(), xi);
        }
        SymTensorField F = build_F_from_samples(samples);
        double err = 0.0;
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                double f11 = 0, f12 = 0, f22 = 0;
                for (const auto& [w, xi] : samples) {
                    f11 += w * xi.x(i, j) * xi.x(i, j);
                    f12 += w * xi.x(i, j) * xi.y(i, j);
                    f22 += w * xi.y(i, j) * xi.y(i, j);
                }
                err = std::max({err, std::abs(F.c11(i, j) - f11),
                                std::abs(F.c12(i, j) - f12), std::abs(F.c22(i, j) - f22)});
            }
        }
        CHECK(err < 1e-14);
        CHECK(F.min_eigenvalue() > -1e-14);
    }

    SUBCASE("input validation") {
        CHECK_THROWS_AS(build_F_from_samples({}), config_error);
        VectorField xi(g);
        CHECK_THROWS_AS(build_F_from_samples({{-1.0, xi}}), config_error);
        CHECK_THROWS_AS(build_F_from_samples({{0.0, xi}}), config_error);
    }
}

TEST_CASE("random sample families stay pointwise PSD") {
    Grid2D g = make_grid(16, 16, kTwoPi, kTwoPi);
    SplitMix64 rng(99);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<std::pair<double, VectorField>> samples;
        int ns = 1 + static_cast<int>(rng.uniform() * 4);
        for (int s = 0; s < ns; ++s) {
            VectorField xi(g);
            xi.x = random_scalar(g, rng, 4, 1.5);
            xi.y = random_scalar(g, rng, 4, 1.5);
            samples.emplace_back(rng.uniform() + 1e-3, xi);
        }
        SymTensorField F = build_F_from_samples(samples);
        CHECK(F.min_eigenvalue() >= -1e-14);
    }
}
