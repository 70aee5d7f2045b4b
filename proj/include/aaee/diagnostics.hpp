#pragma once

#include <optional>
#include <vector>

#include "aaee/dynamics.hpp"

namespace aaee {

struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;
    double detf_min = 0.0;
    double detf_max = 0.0;
    double div_norm = 0.0;
    double enstrophy = 0.0;
    std::optional<double> circulation;
    std::optional<double> kelvin_residual;
};

/// Kinetic energy of the averaged model,
///   (1/2) integral( |u|^2 + 2 alpha^2 F^jl D_ij D_il ),
/// evaluated by the grid-sum quadrature with the dealiased (Def u)^2; this is
/// the quantity conserved by the inviscid dynamics.
double energy(const VectorField& u, const SymTensorField& F, double alpha);

/// Scalar vorticity w = d_x u^2 - d_y u^1.
ScalarField vorticity(const VectorField& u);

DiagnosticsRecord compute_diagnostics(const SimState& state, const ModelParams& params);

/// Circulation of the momentum one-form ((1 - alpha^2 C) u)^flat around the
/// material loop: closed composite trapezoid over marker segments, with
/// bicubic interpolation of the momentum components. Throws config_error if
/// the state has no loop.
double circulation(const SimState& state, const ModelParams& params);

/// Loop integral of an arbitrary one-form over a marker loop (trapezoid).
double loop_integral(const OneFormField& a, const MaterialLoop& loop);

/// Kelvin circulation-theorem residual: central-difference d/dt of the
/// circulation over three consecutive uniformly spaced states minus the
/// loop integral of the theorem's right-hand side at the middle state.
/// Requires >= 3 states with loops at uniform dt; throws config_error
/// otherwise. Returns the absolute residual.
double kelvin_residual(const std::vector<SimState>& history, const ModelParams& params);

/// The Kelvin theorem's right-hand-side integrand,
///   alpha^2 [ F : grad (Def u)^2 - 2 Div((Def u)^2 . F) ]^flat.
OneFormField kelvin_rhs_integrand(const VectorField& u, const SymTensorField& F,
                                  double alpha);

}  // namespace aaee
