#pragma once

#include <cstdint>

#include "aaee/field.hpp"
#include "aaee/grid.hpp"

namespace aaee {

/// Counter-based generator (splitmix64): identical streams for identical
/// seeds on any platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// uniform in [0, 1)
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    /// uniform in [-1, 1)
    double symmetric() { return 2.0 * uniform() - 1.0; }
};

// canonical initial velocity presets
VectorField taylor_green_u(const Grid2D& g);
VectorField shear_u(const Grid2D& g);
/// Divergence-free field from a random low-mode stream function: for every
/// mode pair (kx, ky) with 1 <= kx^2+ky^2 and |kx|,|ky| <= 3 the stream
/// function gains amp * c / (kx^2+ky^2) * cos(kx x' + ky y' + phi) with
/// c in [-1,1) and phi in [0, 2 pi) drawn in a fixed order from splitmix64.
VectorField random_seeded_u(const Grid2D& g, std::uint64_t seed, double amplitude);

SymTensorField identity_F(const Grid2D& g);
SymTensorField constant_spd_F(const Grid2D& g, double a, double b, double c);

OneFormField unit_x_oneform(const Grid2D& g);
OneFormField unit_y_oneform(const Grid2D& g);

// band-limited random fields for the verification suites
ScalarField random_scalar(const Grid2D& g, SplitMix64& rng, int kmax, double amp);
VectorField random_divfree(const Grid2D& g, SplitMix64& rng, int kmax, double amp);
/// Pointwise SPD tensor: smooth random perturbation of a constant SPD base.
SymTensorField random_spd_tensor(const Grid2D& g, SplitMix64& rng, int kmax, double amp);
SymTensorField random_sym_tensor(const Grid2D& g, SplitMix64& rng, int kmax, double amp);

}  // namespace aaee
