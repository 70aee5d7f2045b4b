#pragma once

#include <optional>

#include "aaee/field.hpp"
#include "aaee/spectral.hpp"

namespace aaee {

/// Rate of deformation tensor D_ij = (u_i,j + u_j,i)/2 (covariant indices;
/// flat metric, so covariant derivatives are plain partials).
SymTensorField def_tensor(const VectorField& u);

/// Padded-space representation of a symmetric coefficient tensor, prepared
/// once and reused across many operator applications.
struct TensorCoeff {
    Grid2D grid;
    Padded c11, c12, c22;

    explicit TensorCoeff(const SymTensorField& A);
};

/// The second-order tensor operator: C_A u = Div(Def u_flat . A + A . Def u_flat),
/// divergence over the second index. With A = F this is the operator whose
/// momentum form (1 - alpha^2 C) is the functional derivative of the kinetic
/// energy with respect to u; with F = identity it reduces to the vector
/// Laplacian plus grad(div u). Products are dealiased (2x zero padding).
VectorField apply_C(const VectorField& u, const TensorCoeff& A);
VectorField apply_C(const VectorField& u, const SymTensorField& A);

/// Momentum operator (1 - alpha^2 C_F): self-adjoint and positive definite
/// in the discrete L2 pairing for pointwise SPD F.
class MomentumOperator {
  public:
    /// Validates that F is pointwise SPD with det F >= det_floor.
    MomentumOperator(SymTensorField F, double alpha, double tolerance = 1e-10,
                     int max_iterations = 500, double det_floor = 1e-8);

    const SymTensorField& F() const { return F_; }
    double alpha() const { return alpha_; }
    double tolerance() const { return tolerance_; }
    int max_iterations() const { return max_iterations_; }
    double det_floor() const { return det_floor_; }
    /// domain mean of the F eigenvalues, used by the spectral preconditioners
    double coeff_mean() const { return cbar_; }

    VectorField apply(const VectorField& u) const;

  private:
    SymTensorField F_;
    double alpha_;
    double tolerance_;
    int max_iterations_;
    double det_floor_;
    double cbar_;
    std::optional<TensorCoeff> prep_;
};

/// Solves (1 - alpha^2 C) u = v by preconditioned conjugate gradients
/// (constant-coefficient Helmholtz preconditioner). Optional warm start.
/// Throws solver_error on non-convergence, carrying the final residual.
VectorField momentum_invert(const VectorField& v, const MomentumOperator& op,
                            const VectorField* warm_start = nullptr,
                            int* iterations_out = nullptr);

/// Stokes decomposition w = v + (1 - alpha^2 C)^{-1} grad p with div v = 0
/// and mean-zero p, via a Schur-complement CG on p. Optional warm start for
/// the pressure. Throws solver_error on non-convergence.
struct StokesResult {
    VectorField v;
    ScalarField p;
    int outer_iterations = 0;
};
StokesResult stokes_project(const VectorField& w, const MomentumOperator& op,
                            const ScalarField* pressure_warm_start = nullptr,
                            double pressure_rtol = 1e-9);

}  // namespace aaee
