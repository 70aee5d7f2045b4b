#include "aaee/init.hpp"

#include <cmath>

#include "aaee/spectral.hpp"

namespace aaee {

VectorField taylor_green_u(const Grid2D& g) {
    VectorField u(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double x = g.x(i), y = g.y(j);
            u.x(i, j) = std::sin(x) * std::cos(y);
            u.y(i, j) = -std::cos(x) * std::sin(y);
        }
    }
    return u;
}

VectorField shear_u(const Grid2D& g) {
    VectorField u(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) u.x(i, j) = std::sin(g.y(j));
    return u;
}

VectorField random_seeded_u(const Grid2D& g, std::uint64_t seed, double amplitude) {
    SplitMix64 rng(seed);
    VectorField u(g);
    const double tx = 2.0 * M_PI / g.lx, ty = 2.0 * M_PI / g.ly;
    for (int kx = -3; kx <= 3; ++kx) {
        for (int ky = -3; ky <= 3; ++ky) {
            if (kx == 0 && ky == 0) continue;
            double c = rng.symmetric() / (kx * kx + ky * ky);
            double phi = 2.0 * M_PI * rng.uniform();
            // psi contribution amp*c*cos(kx x' + ky y' + phi);
            // u = (d psi / dy, -d psi / dx), accumulated analytically
            for (int j = 0; j < g.ny; ++j) {
                for (int i = 0; i < g.nx; ++i) {
                    double arg = kx * tx * g.x(i) + ky * ty * g.y(j) + phi;
                    double s = std::sin(arg);
                    u.x(i, j) += -amplitude * c * ky * ty * s;
                    u.y(i, j) += amplitude * c * kx * tx * s;
                }
            }
        }
    }
    return u;
}

SymTensorField identity_F(const Grid2D& g) {
    SymTensorField F(g);
    for (double& x : F.c11.v) x = 1.0;
    for (double& x : F.c22.v) x = 1.0;
    return F;
}

SymTensorField constant_spd_F(const Grid2D& g, double a, double b, double c) {
    SymTensorField F(g);
    for (double& x : F.c11.v) x = a;
    for (double& x : F.c12.v) x = b;
    for (double& x : F.c22.v) x = c;
    return F;
}

OneFormField unit_x_oneform(const Grid2D& g) {
    OneFormField a(g);
    for (double& x : a.c1.v) x = 1.0;
    return a;
}

OneFormField unit_y_oneform(const Grid2D& g) {
    OneFormField a(g);
    for (double& x : a.c2.v) x = 1.0;
    return a;
}

ScalarField random_scalar(const Grid2D& g, SplitMix64& rng, int kmax, double amp) {
    ScalarField f(g);
    const double tx = 2.0 * M_PI / g.lx, ty = 2.0 * M_PI / g.ly;
    for (int kx = -kmax; kx <= kmax; ++kx) {
        for (int ky = -kmax; ky <= kmax; ++ky) {
            if (kx == 0 && ky == 0) continue;
            double c = amp * rng.symmetric() / (1.0 + kx * kx + ky * ky);
            double phi = 2.0 * M_PI * rng.uniform();
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i)
                    f(i, j) += c * std::cos(kx * tx * g.x(i) + ky * ty * g.y(j) + phi);
        }
    }
    return f;
}

VectorField random_divfree(const Grid2D& g, SplitMix64& rng, int kmax, double amp) {
    ScalarField psi = random_scalar(g, rng, kmax, amp);
    VectorField u(g);
    u.x = spectral_deriv(psi, Axis::y);
    u.y = -1.0 * spectral_deriv(psi, Axis::x);
    return u;
}

SymTensorField random_spd_tensor(const Grid2D& g, SplitMix64& rng, int kmax, double amp) {
    SymTensorField F(g);
    ScalarField a = random_scalar(g, rng, kmax, amp);
    ScalarField b = random_scalar(g, rng, kmax, amp);
    ScalarField c = random_scalar(g, rng, kmax, amp);
    for (std::size_t n = 0; n < F.c11.v.size(); ++n) {
        F.c11.v[n] = 1.8 + a.v[n];
        F.c12.v[n] = 0.3 + 0.5 * b.v[n];
        F.c22.v[n] = 1.2 + c.v[n];
    }
    return F;
}

SymTensorField random_sym_tensor(const Grid2D& g, SplitMix64& rng, int kmax, double amp) {
    SymTensorField K(g);
    K.c11 = random_scalar(g, rng, kmax, amp);
    K.c12 = random_scalar(g, rng, kmax, amp);
    K.c22 = random_scalar(g, rng, kmax, amp);
    return K;
}

}  // namespace aaee
