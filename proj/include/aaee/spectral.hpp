#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "aaee/field.hpp"
#include "aaee/grid.hpp"

namespace aaee {

/// Unnormalized r2c spectrum of a real field, layout ny rows by (nx/2+1)
/// columns, kx fastest. Physical values are recovered by Spectral::inv,
/// which divides by nx*ny.
struct Spec {
    Grid2D grid;
    std::vector<std::complex<double>> c;

    Spec() = default;
    explicit Spec(const Grid2D& g)
        : grid(g), c(static_cast<std::size_t>(g.ny) * (g.nx / 2 + 1)) {}
    std::complex<double>& at(int i, int j) {
        return c[static_cast<std::size_t>(j) * (grid.nx / 2 + 1) + i];
    }
    const std::complex<double>& at(int i, int j) const {
        return c[static_cast<std::size_t>(j) * (grid.nx / 2 + 1) + i];
    }
};

/// Real samples on the 2x zero-padded grid, used to evaluate products of
/// band-limited fields without aliasing (padding factor 2 is exact through
/// cubic nonlinearities).
struct Padded {
    Grid2D grid;  // the base grid
    std::vector<double> v;
};

/// FFT engine bound to one grid. Owns FFTW plans for the base and padded
/// sizes; all methods are pure (per-call buffers) and safe to invoke
/// concurrently from multiple threads.
class Spectral {
  public:
    explicit Spectral(const Grid2D& g);
    ~Spectral();
    Spectral(const Spectral&) = delete;
    Spectral& operator=(const Spectral&) = delete;

    const Grid2D& grid() const { return grid_; }

    Spec fwd(const ScalarField& f) const;
    ScalarField inv(const Spec& s) const;

    // in-place spectral multipliers; all zero the Nyquist row/column
    void mul_ikx(Spec& s) const;
    void mul_iky(Spec& s) const;
    void mul_minus_k2(Spec& s) const;
    void mul_inv_helmholtz(Spec& s, double c) const;  // 1/(1 + c k^2)
    void dealias_mask(Spec& s) const;                 // zero Nyquist modes

    ScalarField deriv_x(const ScalarField& f) const;
    ScalarField deriv_y(const ScalarField& f) const;
    ScalarField laplacian(const ScalarField& f) const;
    VectorField laplacian(const VectorField& u) const;
    ScalarField inv_helmholtz(const ScalarField& f, double c) const;
    VectorField inv_helmholtz(const VectorField& u, double c) const;

    /// L2-orthogonal projection onto divergence-free fields.
    VectorField leray(const VectorField& u) const;
    ScalarField divergence(const VectorField& u) const;
    VectorField gradient(const ScalarField& p) const;

    /// Zero-pad to the double grid and transform to physical samples.
    Padded pad(const Spec& s) const;
    Padded pad(const ScalarField& f) const;
    /// Transform padded samples back and truncate to the base band.
    Spec reduce_spec(const Padded& p) const;
    ScalarField reduce(const Padded& p) const;

    /// Dealiased product of two band-limited fields.
    ScalarField mul(const ScalarField& a, const ScalarField& b) const;

  private:
    Grid2D grid_;
    struct Plans;
    std::unique_ptr<Plans> plans_;
};

/// Shared per-grid engine (plan cache). Returned reference stays valid for
/// the program lifetime.
const Spectral& spectral_for(const Grid2D& g);

/// Spectral partial derivative of a sampled field; exact for band-limited
/// trigonometric input, Nyquist mode zeroed.
enum class Axis { x, y };
ScalarField spectral_deriv(const ScalarField& f, Axis axis);

// pointwise helpers on padded samples
inline void padded_mul_acc(const Padded& a, const Padded& b, double s, Padded& acc) {
    for (std::size_t n = 0; n < acc.v.size(); ++n) acc.v[n] += s * a.v[n] * b.v[n];
}

}  // namespace aaee
