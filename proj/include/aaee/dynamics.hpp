#pragma once

#include <optional>

#include "aaee/field.hpp"
#include "aaee/loop.hpp"
#include "aaee/operators.hpp"

namespace aaee {

/// Full simulation state: time, divergence-free velocity, SPD fluctuation
/// tensor, optional advected corrector one-form, optional material loop.
struct SimState {
    double t = 0.0;
    VectorField u;
    SymTensorField F;
    std::optional<OneFormField> xi_flat;
    std::optional<MaterialLoop> loop;
};

struct ModelParams {
    double alpha = 0.0;
    double nu = 0.0;
    double momentum_tol = 1e-10;
    int momentum_maxit = 500;
    double pressure_tol = 1e-9;
    double det_floor = 1e-8;

    MomentumOperator make_operator(const SymTensorField& F) const {
        return MomentumOperator(F, alpha, momentum_tol, momentum_maxit, det_floor);
    }
};

/// Lie derivative of a contravariant symmetric 2-tensor along u,
/// (L_u F)^ij = u^k F^ij_,k - F^kj u^i_,k - F^ik u^j_,k (dealiased products).
SymTensorField lie_derivative_tensor(const VectorField& u, const SymTensorField& F);

/// Tendency of the advected fluctuation tensor: dF/dt = -u.grad F + M(grad u) F,
/// with M the traceless 3x3 generator acting on (F11, F12, F22).
SymTensorField advect_F_rhs(const SymTensorField& F, const VectorField& u);

/// Diagonal entries of the generator M(grad u); their sum is identically zero
/// for divergence-free u and is asserted by the property tests.
ScalarField generator_trace(const VectorField& u);

/// One-form advection (dt + L_u) xi_flat = 0:
/// dt xi_i = -u^j d_j xi_i - (d_i u^j) xi_j.
OneFormField advect_oneform_rhs(const OneFormField& xi_flat, const VectorField& u);

/// O(alpha) velocity corrector u + alpha * (Def u) . xi (flat-metric raising).
VectorField corrector_field(const VectorField& u, const VectorField& xi, double alpha);

/// Isotropic reference tendency (constant-coefficient, fully spectral):
/// dt(1 - a^2 Lap) u + grad_u (1 - a^2 Lap) u - a^2 (grad u)^T Lap u = -grad p.
/// Kept independent of the anisotropic operator machinery; used as the
/// F = identity reduction oracle.
VectorField iso_rhs(const VectorField& u, double alpha);

/// Individually testable pieces of the alpha^2 bracket whose momentum-solve
/// is U^alpha. The assembled tendency is
///   dt u = P_e( -grad_u u - (1-a^2 C)^{-1}[ a^2 * brace - nu Lap u ] ).
namespace ualpha_terms {
/// Div(Def u . L_u F + L_u F . Def u): commuting d_t past the tensor operator
/// along the F-advection.
VectorField time_commutator_div(const VectorField& u, const SymTensorField& F);
/// -C_{grad_u F} u: advected-coefficient part of the transport commutator.
VectorField advected_tensor_term(const VectorField& u, const SymTensorField& F);
/// Div(S F + F S) with S = sym((grad u)^2): velocity-curvature part of the
/// transport commutator.
VectorField velocity_square_term(const VectorField& u, const SymTensorField& F);
/// R_i = (D F + F D)_il,m u^m_,l: momentum-flux gradient contracted with grad u.
VectorField flux_gradient_term(const VectorField& u, const SymTensorField& F);
/// -(grad u)^T . C u.
VectorField transpose_gradient_term(const VectorField& u, const SymTensorField& F);
/// -F : grad (Def u)^2, the tensor-force gradient part.
VectorField def_sq_gradient_term(const VectorField& u, const SymTensorField& F);
/// +2 Div((Def u)^2 . F), the tensor-force flux part.
VectorField def_sq_flux_div_term(const VectorField& u, const SymTensorField& F);
/// Sum of all bracket terms.
VectorField assemble_brace(const VectorField& u, const SymTensorField& F);
}  // namespace ualpha_terms

/// U^alpha(u, F) = alpha^2 (1 - alpha^2 C)^{-1} assemble_brace(u, F).
VectorField ualpha(const VectorField& u, const SymTensorField& F,
                   const MomentumOperator& op);

/// Warm-start carrier for the iterative solves inside aaee_rhs; optional,
/// purely an accelerator (results are identical with or without it).
struct RhsWorkspace {
    std::optional<VectorField> momentum_guess;
    std::optional<ScalarField> pressure_guess;
};

/// Velocity tendency of the anisotropic averaged Euler / Navier-Stokes
/// system; divergence-free to the projection tolerance.
VectorField aaee_rhs(const SimState& state, const ModelParams& params,
                     RhsWorkspace* ws = nullptr);

}  // namespace aaee
