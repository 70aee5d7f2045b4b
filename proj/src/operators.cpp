#include "aaee/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aaee/errors.hpp"

namespace aaee {

SymTensorField def_tensor(const VectorField& u) {
    const Spectral& sp = spectral_for(u.grid());
    SymTensorField D(u.grid());
    ScalarField u1y = sp.deriv_y(u.x);
    ScalarField u2x = sp.deriv_x(u.y);
    D.c11 = sp.deriv_x(u.x);
    D.c22 = sp.deriv_y(u.y);
    D.c12 = 0.5 * (u1y + u2x);
    return D;
}

TensorCoeff::TensorCoeff(const SymTensorField& A) : grid(A.grid()) {
    const Spectral& sp = spectral_for(grid);
    c11 = sp.pad(A.c11);
    c12 = sp.pad(A.c12);
    c22 = sp.pad(A.c22);
}

VectorField apply_C(const VectorField& u, const TensorCoeff& A) {
    const Spectral& sp = spectral_for(u.grid());
    SymTensorField D = def_tensor(u);
    Padded d11 = sp.pad(D.c11), d12 = sp.pad(D.c12), d22 = sp.pad(D.c22);

    // T = D.A + A.D (symmetric since D, A are)
    Padded t11{u.grid(), std::vector<double>(d11.v.size(), 0.0)};
    Padded t12 = t11, t22 = t11;
    padded_mul_acc(d11, A.c11, 2.0, t11);
    padded_mul_acc(d12, A.c12, 2.0, t11);
    padded_mul_acc(d11, A.c12, 1.0, t12);
    padded_mul_acc(d12, A.c22, 1.0, t12);
    padded_mul_acc(A.c11, d12, 1.0, t12);
    padded_mul_acc(A.c12, d22, 1.0, t12);
    padded_mul_acc(d12, A.c12, 2.0, t22);
    padded_mul_acc(d22, A.c22, 2.0, t22);

    Spec s11 = sp.reduce_spec(t11);
    Spec s12 = sp.reduce_spec(t12);
    Spec s22 = sp.reduce_spec(t22);

    // (C u)_i = d_l T_il
    Spec rx = s11, ry = s22;
    sp.mul_ikx(rx);
    sp.mul_iky(ry);
    Spec s12x = s12, s12y = s12;
    sp.mul_ikx(s12x);
    sp.mul_iky(s12y);
    for (std::size_t n = 0; n < rx.c.size(); ++n) {
        rx.c[n] += s12y.c[n];
        ry.c[n] += s12x.c[n];
    }
    VectorField r(u.grid());
    r.x = sp.inv(rx);
    r.y = sp.inv(ry);
    return r;
}

VectorField apply_C(const VectorField& u, const SymTensorField& A) {
    return apply_C(u, TensorCoeff(A));
}

MomentumOperator::MomentumOperator(SymTensorField F, double alpha, double tolerance,
                                   int max_iterations, double det_floor)
    : F_(std::move(F)),
      alpha_(alpha),
      tolerance_(tolerance),
      max_iterations_(max_iterations),
      det_floor_(det_floor) {
    if (!(alpha_ >= 0.0)) throw solver_error("momentum operator: alpha must be >= 0");
    if (alpha_ > 0.0 && !F_.spd(det_floor_)) {
        double dmin = F_.det().min();
        throw solver_error("momentum operator: F not SPD (min det F = " +
                           std::to_string(dmin) + ", floor " + std::to_string(det_floor_) +
                           ")");
    }
    double tr = 0.0;
    for (std::size_t n = 0; n < F_.c11.v.size(); ++n) tr += F_.c11.v[n] + F_.c22.v[n];
    cbar_ = 0.5 * tr / static_cast<double>(F_.c11.v.size());
    if (alpha_ > 0.0) prep_.emplace(F_);
}

VectorField MomentumOperator::apply(const VectorField& u) const {
    if (alpha_ == 0.0) return u;
    VectorField cu = apply_C(u, *prep_);
    VectorField r = u;
    axpy(-alpha_ * alpha_, cu, r);
    return r;
}

VectorField momentum_invert(const VectorField& v, const MomentumOperator& op,
                            const VectorField* warm_start, int* iterations_out) {
    if (iterations_out) *iterations_out = 0;
    if (op.alpha() == 0.0) return v;
    const Spectral& sp = spectral_for(v.grid());
    const double a2cbar = op.alpha() * op.alpha() * op.coeff_mean();
    auto precond = [&](const VectorField& r) { return sp.inv_helmholtz(r, a2cbar); };

    VectorField x = warm_start ? *warm_start : VectorField(v.grid());
    VectorField r = v;
    if (warm_start) r = v - op.apply(x);
    double nv = norm2(v);
    if (nv == 0.0) return VectorField(v.grid());
    double stop = std::max(op.tolerance() * nv, 1e-15 * (1.0 + nv));
    double rn = norm2(r);
    if (rn <= stop) {
        if (iterations_out) *iterations_out = 0;
        return x;
    }
    VectorField z = precond(r);
    VectorField p = z;
    double rz = inner(r, z);
    VectorField best_x = x;
    double best_rn = rn;
    for (int it = 1; it <= op.max_iterations(); ++it) {
        VectorField Ap = op.apply(p);
        double pAp = inner(p, Ap);
        if (!(pAp > 0.0))
            throw solver_error("momentum_invert: operator lost positivity", rn);
        double a = rz / pAp;
        axpy(a, p, x);
        axpy(-a, Ap, r);
        rn = norm2(r);
        if (rn < best_rn) {
            best_rn = rn;
            best_x = x;
        }
        if (rn <= stop) {
            if (iterations_out) *iterations_out = it;
            return x;
        }
        z = precond(r);
        double rz_new = inner(r, z);
        double beta = rz_new / rz;
        rz = rz_new;
        p = z + beta * p;
    }
    if (best_rn <= 100.0 * stop) return best_x;  // stagnated at solver floor
    throw solver_error("momentum_invert: no convergence in " +
                           std::to_string(op.max_iterations()) +
                           " iterations (residual " + std::to_string(best_rn) + ")",
                       best_rn);
}

StokesResult stokes_project(const VectorField& w, const MomentumOperator& op,
                            const ScalarField* pressure_warm_start,
                            double pressure_rtol) {
    const Spectral& sp = spectral_for(w.grid());
    StokesResult out{VectorField(w.grid()), ScalarField(w.grid()), 0};
    if (op.alpha() == 0.0) {
        // (1 - a^2 C) = identity: plain Leray projection, pressure recovered
        // from the removed gradient part.
        out.v = sp.leray(w);
        VectorField gp = w - out.v;
        Spec gx = sp.fwd(gp.x);
        sp.mul_ikx(gx);  // d_x of (p_x) ... recover p by inverse gradient
        Spec gy = sp.fwd(gp.y);
        sp.mul_iky(gy);
        for (std::size_t n = 0; n < gx.c.size(); ++n) gx.c[n] += gy.c[n];
        // gx now holds -k^2 p_hat; invert the Laplacian on mean-zero modes
        Spec ph(w.grid());
        const int hx = w.grid().nx / 2;
        for (int j = 0; j < w.grid().ny; ++j) {
            for (int i = 0; i <= hx; ++i) {
                if ((i == 0 && j == 0) || i == hx || j == w.grid().ny / 2) continue;
                double kx = w.grid().kx(i), ky = w.grid().ky(j);
                ph.at(i, j) = -gx.at(i, j) / (kx * kx + ky * ky);
            }
        }
        out.p = sp.inv(ph);
        return out;
    }

    ScalarField b = sp.divergence(w);
    double nw = norm2(w);
    double nb = norm2(b);
    double stop = std::max(pressure_rtol * nb, 1e-13 * (1.0 + nw));
    ScalarField p = pressure_warm_start ? *pressure_warm_start : ScalarField(w.grid());
    auto schur = [&](const ScalarField& q) {
        // -div (1 - a^2 C)^{-1} grad q, SPD on mean-zero fields
        VectorField gq = sp.gradient(q);
        VectorField sol = momentum_invert(gq, op);
        ScalarField r = sp.divergence(sol);
        return -1.0 * r;
    };
    const double a2cbar = op.alpha() * op.alpha() * op.coeff_mean();
    auto precond = [&](const ScalarField& r) {
        // (1 + a^2 cbar k^2) / k^2 multiplier, mean removed
        Spec s = sp.fwd(r);
        const int hx = w.grid().nx / 2;
        for (int j = 0; j < w.grid().ny; ++j) {
            for (int i = 0; i <= hx; ++i) {
                if ((i == 0 && j == 0) || i == hx || j == w.grid().ny / 2) {
                    s.at(i, j) = 0.0;
                    continue;
                }
                double kx = w.grid().kx(i), ky = w.grid().ky(j);
                double k2 = kx * kx + ky * ky;
                s.at(i, j) *= (1.0 + a2cbar * k2) / k2;
            }
        }
        return sp.inv(s);
    };

    // residual of S p = -b
    ScalarField r(w.grid());
    if (pressure_warm_start) {
        r = -1.0 * (b + schur(p));
    } else {
        r = -1.0 * b;
    }
    double mean = r.integral() / (w.grid().lx * w.grid().ly);
    for (double& x : r.v) x -= mean;
    double rn = norm2(r);
    if (rn > stop) {
        ScalarField z = precond(r);
        ScalarField dir = z;
        double rz = inner(r, z);
        ScalarField best_p = p;
        double best_rn = rn;
        bool converged = false;
        for (int it = 1; it <= op.max_iterations(); ++it) {
            ScalarField Sd = schur(dir);
            double dSd = inner(dir, Sd);
            if (!(dSd > 0.0))
                throw solver_error("stokes_project: Schur operator lost positivity", rn);
            double a = rz / dSd;
            axpy(a, dir, p);
            axpy(-a, Sd, r);
            rn = norm2(r);
            out.outer_iterations = it;
            if (rn < best_rn) {
                best_rn = rn;
                best_p = p;
            }
            if (rn <= stop) {
                converged = true;
                break;
            }
            z = precond(r);
            double rz_new = inner(r, z);
            double beta = rz_new / rz;
            rz = rz_new;
            dir = z + beta * dir;
        }
        if (!converged) {
            if (best_rn <= 100.0 * stop) {
                p = best_p;
            } else {
                throw solver_error("stokes_project: pressure solve stalled (residual " +
                                       std::to_string(best_rn) + ")",
                                   best_rn);
            }
        }
    }
    VectorField gp = sp.gradient(p);
    VectorField corr = momentum_invert(gp, op);
    out.v = w - corr;
    out.p = p;
    return out;
}

}  // namespace aaee
