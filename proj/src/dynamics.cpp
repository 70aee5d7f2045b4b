#include "aaee/dynamics.hpp"

#include <cmath>

#include "aaee/errors.hpp"

namespace aaee {

namespace {

struct GradU {
    ScalarField u1x, u1y, u2x, u2y;
    explicit GradU(const VectorField& u) {
        const Spectral& sp = spectral_for(u.grid());
        u1x = sp.deriv_x(u.x);
        u1y = sp.deriv_y(u.x);
        u2x = sp.deriv_x(u.y);
        u2y = sp.deriv_y(u.y);
    }
};

ScalarField advect_scalar(const Spectral& sp, const VectorField& u, const ScalarField& f) {
    return sp.mul(u.x, sp.deriv_x(f)) + sp.mul(u.y, sp.deriv_y(f));
}

// (Def u)^2, covariant; dealiased
SymTensorField def_sq(const Spectral& sp, const SymTensorField& D) {
    SymTensorField t(D.grid());
    t.c11 = sp.mul(D.c11, D.c11) + sp.mul(D.c12, D.c12);
    t.c12 = sp.mul(D.c12, D.c11 + D.c22);
    t.c22 = sp.mul(D.c12, D.c12) + sp.mul(D.c22, D.c22);
    return t;
}

// Div over the second index of the (generally non-symmetric) product A.B of
// two symmetric tensors: out_k = d_i (A_kj B_ji)
VectorField div_product(const Spectral& sp, const SymTensorField& A,
                        const SymTensorField& B) {
    ScalarField s11 = sp.mul(A.c11, B.c11) + sp.mul(A.c12, B.c12);
    ScalarField s12 = sp.mul(A.c11, B.c12) + sp.mul(A.c12, B.c22);
    ScalarField s21 = sp.mul(A.c12, B.c11) + sp.mul(A.c22, B.c12);
    ScalarField s22 = sp.mul(A.c12, B.c12) + sp.mul(A.c22, B.c22);
    VectorField r(A.grid());
    r.x = sp.deriv_x(s11) + sp.deriv_y(s12);
    r.y = sp.deriv_x(s21) + sp.deriv_y(s22);
    return r;
}

}  // namespace

SymTensorField lie_derivative_tensor(const VectorField& u, const SymTensorField& F) {
    const Spectral& sp = spectral_for(u.grid());
    GradU g(u);
    SymTensorField L(F.grid());
    L.c11 = advect_scalar(sp, u, F.c11) -
            2.0 * (sp.mul(F.c11, g.u1x) + sp.mul(F.c12, g.u1y));
    L.c12 = advect_scalar(sp, u, F.c12) - sp.mul(F.c12, g.u1x) - sp.mul(F.c22, g.u1y) -
            sp.mul(F.c11, g.u2x) - sp.mul(F.c12, g.u2y);
    L.c22 = advect_scalar(sp, u, F.c22) -
            2.0 * (sp.mul(F.c12, g.u2x) + sp.mul(F.c22, g.u2y));
    return L;
}

SymTensorField advect_F_rhs(const SymTensorField& F, const VectorField& u) {
    const Spectral& sp = spectral_for(u.grid());
    GradU g(u);
    SymTensorField r(F.grid());
    r.c11 = -1.0 * advect_scalar(sp, u, F.c11) +
            2.0 * (sp.mul(g.u1x, F.c11) + sp.mul(g.u1y, F.c12));
    r.c12 = -1.0 * advect_scalar(sp, u, F.c12) + sp.mul(g.u2x, F.c11) +
            sp.mul(g.u1y, F.c22);
    r.c22 = -1.0 * advect_scalar(sp, u, F.c22) +
            2.0 * (sp.mul(g.u2x, F.c12) - sp.mul(g.u1x, F.c22));
    return r;
}

ScalarField generator_trace(const VectorField& u) {
    GradU g(u);
    ScalarField m11 = 2.0 * g.u1x;
    ScalarField m22(u.grid());  // middle diagonal entry is identically zero
    ScalarField m33 = -2.0 * g.u1x;
    return m11 + m22 + m33;
}

OneFormField advect_oneform_rhs(const OneFormField& xi_flat, const VectorField& u) {
    const Spectral& sp = spectral_for(u.grid());
    GradU g(u);
    OneFormField r(u.grid());
    r.c1 = -1.0 * advect_scalar(sp, u, xi_flat.c1) - sp.mul(g.u1x, xi_flat.c1) -
           sp.mul(g.u2x, xi_flat.c2);
    r.c2 = -1.0 * advect_scalar(sp, u, xi_flat.c2) - sp.mul(g.u1y, xi_flat.c1) -
           sp.mul(g.u2y, xi_flat.c2);
    return r;
}

VectorField corrector_field(const VectorField& u, const VectorField& xi, double alpha) {
    const Spectral& sp = spectral_for(u.grid());
    SymTensorField D = def_tensor(u);
    VectorField r = u;
    if (alpha == 0.0) return r;
    axpy(alpha, sp.mul(D.c11, xi.x) + sp.mul(D.c12, xi.y), r.x);
    axpy(alpha, sp.mul(D.c12, xi.x) + sp.mul(D.c22, xi.y), r.y);
    return r;
}

VectorField iso_rhs(const VectorField& u, double alpha) {
    const Spectral& sp = spectral_for(u.grid());
    const double a2 = alpha * alpha;
    // m = (1 - a^2 Lap) u, spectrally exact
    VectorField lap = sp.laplacian(u);
    VectorField m = u;
    axpy(-a2, lap, m);
    GradU g(u);
    VectorField r(u.grid());
    r.x = -1.0 * advect_scalar(sp, u, m.x) +
          a2 * (sp.mul(g.u1x, lap.x) + sp.mul(g.u2x, lap.y));
    r.y = -1.0 * advect_scalar(sp, u, m.y) +
          a2 * (sp.mul(g.u1y, lap.x) + sp.mul(g.u2y, lap.y));
    return sp.leray(sp.inv_helmholtz(r, a2));
}

namespace ualpha_terms {

VectorField time_commutator_div(const VectorField& u, const SymTensorField& F) {
    return apply_C(u, lie_derivative_tensor(u, F));
}

VectorField advected_tensor_term(const VectorField& u, const SymTensorField& F) {
    const Spectral& sp = spectral_for(u.grid());
    SymTensorField adF(F.grid());
    adF.c11 = advect_scalar(sp, u, F.c11);
    adF.c12 = advect_scalar(sp, u, F.c12);
    adF.c22 = advect_scalar(sp, u, F.c22);
    return -1.0 * apply_C(u, adF);
}

VectorField velocity_square_term(const VectorField& u, const SymTensorField& F) {
    const Spectral& sp = spectral_for(u.grid());
    GradU g(u);
    SymTensorField S(u.grid());  // sym((grad u)^2)
    S.c11 = sp.mul(g.u1x, g.u1x) + sp.mul(g.u1y, g.u2x);
    S.c22 = sp.mul(g.u2x, g.u1y) + sp.mul(g.u2y, g.u2y);
    ScalarField gg12 = sp.mul(g.u1x, g.u1y) + sp.mul(g.u1y, g.u2y);
    ScalarField gg21 = sp.mul(g.u2x, g.u1x) + sp.mul(g.u2y, g.u2x);
    S.c12 = 0.5 * (gg12 + gg21);
    return div_product(sp, S, F) + div_product(sp, F, S);
}

VectorField flux_gradient_term(const VectorField& u, const SymTensorField& F) {
    const Spectral& sp = spectral_for(u.grid());
    SymTensorField D = def_tensor(u);
    // T = D F + F D
    SymTensorField T(u.grid());
    T.c11 = 2.0 * (sp.mul(D.c11, F.c11) + sp.mul(D.c12, F.c12));
    T.c12 = sp.mul(D.c11, F.c12) + sp.mul(D.c12, F.c22) + sp.mul(F.c11, D.c12) +
            sp.mul(F.c12, D.c22);
    T.c22 = 2.0 * (sp.mul(D.c12, F.c12) + sp.mul(D.c22, F.c22));
    GradU g(u);
    VectorField r(u.grid());
    // R_i = T_il,m u^m_,l
    r.x = sp.mul(sp.deriv_x(T.c11), g.u1x) + sp.mul(sp.deriv_y(T.c11), g.u2x) +
          sp.mul(sp.deriv_x(T.c12), g.u1y) + sp.mul(sp.deriv_y(T.c12), g.u2y);
    r.y = sp.mul(sp.deriv_x(T.c12), g.u1x) + sp.mul(sp.deriv_y(T.c12), g.u2x) +
          sp.mul(sp.deriv_x(T.c22), g.u1y) + sp.mul(sp.deriv_y(T.c22), g.u2y);
    return r;
}

VectorField transpose_gradient_term(const VectorField& u, const SymTensorField& F) {
    const Spectral& sp = spectral_for(u.grid());
    VectorField cu = apply_C(u, F);
    GradU g(u);
    VectorField r(u.grid());
    r.x = -1.0 * (sp.mul(g.u1x, cu.x) + sp.mul(g.u2x, cu.y));
    r.y = -1.0 * (sp.mul(g.u1y, cu.x) + sp.mul(g.u2y, cu.y));
    return r;
}

VectorField def_sq_gradient_term(const VectorField& u, const SymTensorField& F) {
    const Spectral& sp = spectral_for(u.grid());
    SymTensorField t = def_sq(sp, def_tensor(u));
    VectorField r(u.grid());
    auto fgrad = [&](auto deriv) {
        return sp.mul(F.c11, deriv(t.c11)) + 2.0 * sp.mul(F.c12, deriv(t.c12)) +
               sp.mul(F.c22, deriv(t.c22));
    };
    r.x = -1.0 * fgrad([&](const ScalarField& f) { return sp.deriv_x(f); });
    r.y = -1.0 * fgrad([&](const ScalarField& f) { return sp.deriv_y(f); });
    return r;
}

VectorField def_sq_flux_div_term(const VectorField& u, const SymTensorField& F) {
    const Spectral& sp = spectral_for(u.grid());
    SymTensorField t = def_sq(sp, def_tensor(u));
    return 2.0 * div_product(sp, t, F);
}

VectorField assemble_brace(const VectorField& u, const SymTensorField& F) {
    VectorField b = time_commutator_div(u, F);
    b = b + advected_tensor_term(u, F);
    b = b + velocity_square_term(u, F);
    b = b + flux_gradient_term(u, F);
    b = b + transpose_gradient_term(u, F);
    b = b + def_sq_gradient_term(u, F);
    b = b + def_sq_flux_div_term(u, F);
    return b;
}

}  // namespace ualpha_terms

VectorField ualpha(const VectorField& u, const SymTensorField& F,
                   const MomentumOperator& op) {
    const double a2 = op.alpha() * op.alpha();
    if (a2 == 0.0) return VectorField(u.grid());
    VectorField brace = ualpha_terms::assemble_brace(u, F);
    return momentum_invert(a2 * brace, op);
}

VectorField aaee_rhs(const SimState& state, const ModelParams& params, RhsWorkspace* ws) {
    const VectorField& u = state.u;
    const SymTensorField& F = state.F;
    const Spectral& sp = spectral_for(u.grid());
    const double a2 = params.alpha * params.alpha;

    MomentumOperator op = params.make_operator(F);

    // advective transport, outside the momentum solve
    VectorField adv(u.grid());
    adv.x = advect_scalar(sp, u, u.x);
    adv.y = advect_scalar(sp, u, u.y);

    VectorField w = -1.0 * adv;
    if (a2 > 0.0 || params.nu > 0.0) {
        VectorField h(u.grid());
        if (a2 > 0.0) h = a2 * ualpha_terms::assemble_brace(u, F);
        if (params.nu > 0.0) axpy(-params.nu, sp.laplacian(u), h);
        const VectorField* guess =
            (ws && ws->momentum_guess) ? &*ws->momentum_guess : nullptr;
        VectorField sol = momentum_invert(h, op, guess);
        if (ws) ws->momentum_guess = sol;
        w = w - sol;
    }

    const ScalarField* pguess =
        (ws && ws->pressure_guess) ? &*ws->pressure_guess : nullptr;
    StokesResult proj = stokes_project(w, op, pguess, params.pressure_tol);
    if (ws) ws->pressure_guess = proj.p;
    return proj.v;
}

}  // namespace aaee
