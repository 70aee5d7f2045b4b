#pragma once

#include <utility>
#include <vector>

#include "aaee/grid.hpp"

namespace aaee {

/// Real scalar samples on a Grid2D, row-major, x fastest.
struct ScalarField {
    Grid2D grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const Grid2D& g) : grid(g), v(g.size(), 0.0) {}

    double& operator()(int i, int j) { return v[grid.index(i, j)]; }
    double operator()(int i, int j) const { return v[grid.index(i, j)]; }

    bool finite() const;
    double min() const;
    double max() const;
    double linf() const;
    /// Grid-sum quadrature of the field (exact for band-limited integrands).
    double integral() const;
};

/// Contravariant velocity-type field (components u^1, u^2).
struct VectorField {
    ScalarField x;
    ScalarField y;

    VectorField() = default;
    explicit VectorField(const Grid2D& g) : x(g), y(g) {}
    const Grid2D& grid() const { return x.grid; }
    bool finite() const { return x.finite() && y.finite(); }
};

/// Covariant one-form field (components xi_1, xi_2). On the flat torus the
/// musical isomorphisms are componentwise; the type keeps the distinction.
struct OneFormField {
    ScalarField c1;
    ScalarField c2;

    OneFormField() = default;
    explicit OneFormField(const Grid2D& g) : c1(g), c2(g) {}
    const Grid2D& grid() const { return c1.grid; }
    bool finite() const { return c1.finite() && c2.finite(); }
};

/// Symmetric rank-2 tensor field storing the three independent components.
/// Used both for the contravariant fluctuation tensor F (indices up) and for
/// covariant tensors such as Def u and (Def u)^2 (indices down).
struct SymTensorField {
    ScalarField c11;
    ScalarField c12;
    ScalarField c22;

    SymTensorField() = default;
    explicit SymTensorField(const Grid2D& g) : c11(g), c12(g), c22(g) {}
    const Grid2D& grid() const { return c11.grid; }
    bool finite() const { return c11.finite() && c12.finite() && c22.finite(); }

    /// Pointwise determinant c11*c22 - c12^2.
    ScalarField det() const;
    /// Minimum over the grid of the smaller eigenvalue.
    double min_eigenvalue() const;
    /// True if pointwise symmetric positive definite with det >= floor.
    bool spd(double det_floor) const;
};

/// Flat-metric index lowering/raising: componentwise identity, explicit type.
OneFormField flat(const VectorField& u);
VectorField sharp(const OneFormField& a);

/// Discrete L2 inner products (grid sum times cell area).
double inner(const ScalarField& a, const ScalarField& b);
double inner(const VectorField& a, const VectorField& b);
double norm2(const ScalarField& a);
double norm2(const VectorField& a);

/// Tensor L2 pairing between a covariant and a contravariant symmetric
/// tensor: <A,B> = (1/2) * integral of A_ij B^ij.  The 1/2 weight is the
/// normalization under which the fluctuation-tensor functional derivative of
/// the kinetic energy equals 2 alpha^2 (Def u)^2.
double tensor_inner(const SymTensorField& a, const SymTensorField& b);

/// F^{ij}(x) = sum_s w_s xi_s^i(x) xi_s^j(x) over weighted fluctuation samples.
/// Rejects an empty sample list and negative weights; requires positive
/// total weight. The result is symmetric positive semi-definite pointwise.
SymTensorField build_F_from_samples(
    const std::vector<std::pair<double, VectorField>>& samples);

// arithmetic helpers used throughout the solver kernels
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);
VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double s, const VectorField& a);
SymTensorField operator+(const SymTensorField& a, const SymTensorField& b);
SymTensorField operator-(const SymTensorField& a, const SymTensorField& b);
SymTensorField operator*(double s, const SymTensorField& a);
void axpy(double s, const ScalarField& x, ScalarField& y);
void axpy(double s, const VectorField& x, VectorField& y);
void axpy(double s, const SymTensorField& x, SymTensorField& y);

}  // namespace aaee
