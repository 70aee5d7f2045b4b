#pragma once

#include "aaee/field.hpp"
#include "aaee/grid.hpp"

namespace aaee {

/// Periodic bicubic spline interpolant of a scalar field.
///
/// Coefficients solve the cubic B-spline collocation problem (computed
/// spectrally), so grid values are reproduced exactly; evaluation is a local
/// 4x4 tensor-product B-spline sum, C^2, fourth-order accurate. Coordinates
/// are wrapped periodically.
class BicubicSpline {
  public:
    explicit BicubicSpline(const ScalarField& f);
    double operator()(double x, double y) const;
    const Grid2D& grid() const { return coef_.grid; }

  private:
    ScalarField coef_;
};

/// One-shot periodic bicubic interpolation.
double interpolate(const ScalarField& f, double x, double y);

/// Velocity evaluator for marker advection: both components share one grid.
class VelocitySampler {
  public:
    explicit VelocitySampler(const VectorField& u) : sx_(u.x), sy_(u.y) {}
    double ux(double x, double y) const { return sx_(x, y); }
    double uy(double x, double y) const { return sy_(x, y); }

  private:
    BicubicSpline sx_;
    BicubicSpline sy_;
};

}  // namespace aaee
