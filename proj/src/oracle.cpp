#include "aaee/oracle.hpp"

#include <cmath>
#include <functional>

#include "aaee/diagnostics.hpp"
#include "aaee/errors.hpp"
#include "aaee/init.hpp"

namespace aaee {

namespace {

double centered_richardson(const std::function<double(double)>& L_of_eps, double h) {
    auto slope = [&](double step) {
        return (L_of_eps(step) - L_of_eps(-step)) / (2.0 * step);
    };
    double d1 = slope(h);
    double d2 = slope(h / 2.0);
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

FdPair fd_dL_du(const VectorField& u, const SymTensorField& F, double alpha,
                const VectorField& direction) {
    double nd = norm2(direction);
    if (!(nd > 0.0)) throw config_error("fd_dL_du: zero direction");
    double h = 1e-5 * std::max(norm2(u), 1.0) / nd;
    FdPair out;
    out.lhs = centered_richardson(
        [&](double eps) {
            VectorField up = u;
            axpy(eps, direction, up);
            return energy(up, F, alpha);
        },
        h);
    MomentumOperator op(F, alpha);
    out.rhs = inner(op.apply(u), direction);
    return out;
}

FdPair fd_dL_dF(const VectorField& u, const SymTensorField& F, double alpha,
                const SymTensorField& direction) {
    double nd = std::sqrt(tensor_inner(direction, direction));
    if (!(nd > 0.0)) throw config_error("fd_dL_dF: zero direction");
    double nf = std::sqrt(tensor_inner(F, F));
    double h = 1e-5 * std::max(nf, 1.0) / nd;
    FdPair out;
    out.lhs = centered_richardson(
        [&](double eps) {
            SymTensorField Fp = F;
            axpy(eps, direction, Fp);
            return energy(u, Fp, alpha);
        },
        h);
    const Spectral& sp = spectral_for(u.grid());
    SymTensorField D = def_tensor(u);
    SymTensorField t(u.grid());
    t.c11 = sp.mul(D.c11, D.c11) + sp.mul(D.c12, D.c12);
    t.c12 = sp.mul(D.c12, D.c11 + D.c22);
    t.c22 = sp.mul(D.c12, D.c12) + sp.mul(D.c22, D.c22);
    out.rhs = tensor_inner(2.0 * alpha * alpha * t, direction);
    return out;
}

VectorField diamond(const SymTensorField& K, const SymTensorField& F) {
    const Spectral& sp = spectral_for(K.grid());
    // d_i (F^ij K_kj): divergence over the second index of K.F
    ScalarField s11 = sp.mul(K.c11, F.c11) + sp.mul(K.c12, F.c12);
    ScalarField s12 = sp.mul(K.c11, F.c12) + sp.mul(K.c12, F.c22);
    ScalarField s21 = sp.mul(K.c12, F.c11) + sp.mul(K.c22, F.c12);
    ScalarField s22 = sp.mul(K.c12, F.c12) + sp.mul(K.c22, F.c22);
    VectorField r(K.grid());
    r.x = sp.deriv_x(s11) + sp.deriv_y(s12);
    r.y = sp.deriv_x(s21) + sp.deriv_y(s22);
    auto fgradk = [&](auto deriv) {
        return sp.mul(F.c11, deriv(K.c11)) + 2.0 * sp.mul(F.c12, deriv(K.c12)) +
               sp.mul(F.c22, deriv(K.c22));
    };
    axpy(-0.5, fgradk([&](const ScalarField& f) { return sp.deriv_x(f); }), r.x);
    axpy(-0.5, fgradk([&](const ScalarField& f) { return sp.deriv_y(f); }), r.y);
    return r;
}

double diamond_residual(const SymTensorField& K, const SymTensorField& F,
                        const VectorField& u) {
    VectorField dia = diamond(K, F);
    double lhs = inner(dia, u);
    SymTensorField lie = lie_derivative_tensor(u, F);
    double rhs = tensor_inner(lie, K);
    double scale = norm2(dia) * norm2(u) +
                   std::sqrt(tensor_inner(lie, lie)) * std::sqrt(tensor_inner(K, K));
    if (scale == 0.0) return 0.0;
    return std::abs(lhs - rhs) / scale;
}

VectorField euler_rhs_reference(const VectorField& u) {
    const Spectral& sp = spectral_for(u.grid());
    VectorField adv(u.grid());
    adv.x = sp.mul(u.x, sp.deriv_x(u.x)) + sp.mul(u.y, sp.deriv_y(u.x));
    adv.y = sp.mul(u.x, sp.deriv_x(u.y)) + sp.mul(u.y, sp.deriv_y(u.y));
    return sp.leray(-1.0 * adv);
}

OracleReport reduction_checks(const VectorField& u, double alpha) {
    OracleReport rep;
    rep.name = "reduction_checks";
    SimState s;
    s.u = u;
    s.F = identity_F(u.grid());

    ModelParams p0;
    p0.alpha = 0.0;
    VectorField r0 = aaee_rhs(s, p0);
    VectorField re = euler_rhs_reference(u);
    double euler_err = norm2(r0 - re) / std::max(norm2(re), 1e-300);

    ModelParams pa;
    pa.alpha = alpha;
    pa.momentum_tol = 1e-12;
    VectorField ra = aaee_rhs(s, pa);
    VectorField ri = iso_rhs(u, alpha);
    double iso_err = norm2(ra - ri) / std::max(norm2(ri), 1e-300);

    if (norm2(u) == 0.0) {
        euler_err = norm2(r0 - re);
        iso_err = norm2(ra - ri);
    }
    rep.max_rel_error = std::max(euler_err, iso_err);
    rep.pass = euler_err <= 1e-12 && iso_err <= 1e-10;
    rep.calibration = 1.0;
    return rep;
}

double calibration_constant(const VectorField& u, const SymTensorField& F, double alpha,
                            const VectorField& direction) {
    FdPair p = fd_dL_du(u, F, alpha, direction);
    double kinetic = inner(u, direction);
    VectorField cu = apply_C(u, F);
    double cpart = alpha * alpha * inner(cu, direction);
    if (cpart == 0.0) return 1.0;
    return (kinetic - p.lhs) / cpart;
}

std::vector<OracleReport> run_oracle_suite(int n, double alpha, std::uint64_t seed) {
    std::vector<OracleReport> reports;
    Grid2D g = make_grid(n, n, 2.0 * M_PI, 2.0 * M_PI);
    SplitMix64 rng(seed);

    {
        OracleReport rep;
        rep.name = "fd_dL_du";
        rep.calibration = 1.0;
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            VectorField u = random_divfree(g, rng, 4, 1.0);
            SymTensorField F = random_spd_tensor(g, rng, 3, 0.2);
            VectorField w = random_divfree(g, rng, 4, 1.0);
            FdPair p = fd_dL_du(u, F, alpha, w);
            worst = std::max(worst, std::abs(p.lhs - p.rhs) / std::abs(p.lhs));
        }
        rep.max_rel_error = worst;
        rep.pass = worst <= 1e-6;
        reports.push_back(rep);
    }
    {
        OracleReport rep;
        rep.name = "fd_dL_dF";
        rep.calibration = 1.0;
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            VectorField u = random_divfree(g, rng, 4, 1.0);
            SymTensorField F = random_spd_tensor(g, rng, 3, 0.2);
            SymTensorField B = random_sym_tensor(g, rng, 3, 0.5);
            FdPair p = fd_dL_dF(u, F, alpha, B);
            worst = std::max(worst, std::abs(p.lhs - p.rhs) / std::abs(p.lhs));
        }
        rep.max_rel_error = worst;
        rep.pass = worst <= 1e-6;
        reports.push_back(rep);
    }
    {
        OracleReport rep;
        rep.name = "diamond_duality";
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            SymTensorField K = random_sym_tensor(g, rng, 3, 0.7);
            SymTensorField F = random_spd_tensor(g, rng, 3, 0.2);
            VectorField u = random_divfree(g, rng, 4, 1.0);
            worst = std::max(worst, diamond_residual(K, F, u));
        }
        rep.max_rel_error = worst;
        rep.pass = worst <= 1e-10;
        reports.push_back(rep);
    }
    {
        VectorField u = random_divfree(g, rng, 4, 1.0);
        reports.push_back(reduction_checks(u, alpha));
    }
    {
        OracleReport rep;
        rep.name = "calibration_constant";
        double worst = 0.0;
        double alphas[3] = {0.08, 0.15, 0.3};
        int sizes[2] = {n, n == 32 ? 48 : 32};
        for (int gi = 0; gi < 2; ++gi) {
            Grid2D gg = make_grid(sizes[gi], sizes[gi], 2.0 * M_PI, 2.0 * M_PI);
            for (double a : alphas) {
                SplitMix64 r2(seed + 17);
                VectorField u = random_divfree(gg, r2, 4, 1.0);
                SymTensorField F = random_spd_tensor(gg, r2, 3, 0.2);
                VectorField w = random_divfree(gg, r2, 4, 1.0);
                double c = calibration_constant(u, F, a, w);
                worst = std::max(worst, std::abs(c - 1.0));
            }
        }
        rep.calibration = 1.0;
        rep.max_rel_error = worst;
        rep.pass = worst <= 1e-6;
        reports.push_back(rep);
    }
    {
        OracleReport rep;
        rep.name = "operator_self_adjoint_positive";
        double worst = 0.0;
        bool positive = true;
        for (int k = 0; k < 10; ++k) {
            VectorField u = random_divfree(g, rng, 4, 1.0);
            VectorField w = random_divfree(g, rng, 4, 1.0);
            SymTensorField F = random_spd_tensor(g, rng, 3, 0.2);
            MomentumOperator op(F, alpha);
            double s1 = inner(op.apply(u), w);
            double s2 = inner(u, op.apply(w));
            worst = std::max(worst, std::abs(s1 - s2) / (norm2(u) * norm2(w)));
            if (inner(op.apply(u), u) < inner(u, u)) positive = false;
        }
        rep.max_rel_error = worst;
        rep.pass = positive && worst <= 1e-10;
        reports.push_back(rep);
    }
    return reports;
}

}  // namespace aaee
