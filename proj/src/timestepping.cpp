#include "aaee/timestepping.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aaee/errors.hpp"
#include "aaee/interpolate.hpp"

namespace aaee {

double stable_dt(const VectorField& u, double cfl, double dt_max) {
    double umax = 0.0;
    for (std::size_t n = 0; n < u.x.v.size(); ++n)
        umax = std::max(umax, std::hypot(u.x.v[n], u.y.v[n]));
    const Grid2D& g = u.grid();
    double dt = cfl * std::min(g.dx, g.dy) / std::max(umax, 1e-12);
    return std::min(dt, dt_max);
}

namespace {

struct StateDot {
    VectorField du;
    SymTensorField dF;
    std::optional<OneFormField> dxi;
    std::vector<double> dxs, dys;
};

StateDot full_rhs(const SimState& s, const ModelParams& params, RhsWorkspace* ws) {
    StateDot d;
    d.du = aaee_rhs(s, params, ws);
    d.dF = advect_F_rhs(s.F, s.u);
    if (s.xi_flat) d.dxi = advect_oneform_rhs(*s.xi_flat, s.u);
    if (s.loop) {
        VelocitySampler sampler(s.u);
        const int m = s.loop->size();
        d.dxs.resize(m);
        d.dys.resize(m);
        for (int k = 0; k < m; ++k) {
            d.dxs[k] = sampler.ux(s.loop->xs[k], s.loop->ys[k]);
            d.dys[k] = sampler.uy(s.loop->xs[k], s.loop->ys[k]);
        }
    }
    return d;
}

SimState advance(const SimState& s, const StateDot& d, double c, double dt) {
    SimState r = s;
    axpy(c * dt, d.du, r.u);
    axpy(c * dt, d.dF, r.F);
    if (s.xi_flat) {
        axpy(c * dt, d.dxi->c1, r.xi_flat->c1);
        axpy(c * dt, d.dxi->c2, r.xi_flat->c2);
    }
    if (s.loop) {
        for (int k = 0; k < r.loop->size(); ++k) {
            r.loop->xs[k] += c * dt * d.dxs[k];
            r.loop->ys[k] += c * dt * d.dys[k];
        }
    }
    return r;
}

}  // namespace

SimState rk4_step(const SimState& state, double dt, const ModelParams& params,
                  StepWorkspace* ws) {
    if (!(dt > 0.0)) throw solver_error("rk4_step: dt must be positive");
    RhsWorkspace* w0 = ws ? &ws->stage[0] : nullptr;
    RhsWorkspace* w1 = ws ? &ws->stage[1] : nullptr;
    RhsWorkspace* w2 = ws ? &ws->stage[2] : nullptr;
    RhsWorkspace* w3 = ws ? &ws->stage[3] : nullptr;

    StateDot k1 = full_rhs(state, params, w0);
    StateDot k2 = full_rhs(advance(state, k1, 0.5, dt), params, w1);
    StateDot k3 = full_rhs(advance(state, k2, 0.5, dt), params, w2);
    StateDot k4 = full_rhs(advance(state, k3, 1.0, dt), params, w3);

    SimState out = state;
    out.t = state.t + dt;
    auto combine = [&](auto& dst, const auto& a, const auto& b, const auto& c,
                       const auto& d) {
        axpy(dt / 6.0, a, dst);
        axpy(dt / 3.0, b, dst);
        axpy(dt / 3.0, c, dst);
        axpy(dt / 6.0, d, dst);
    };
    combine(out.u, k1.du, k2.du, k3.du, k4.du);
    combine(out.F, k1.dF, k2.dF, k3.dF, k4.dF);
    if (state.xi_flat) {
        combine(out.xi_flat->c1, k1.dxi->c1, k2.dxi->c1, k3.dxi->c1, k4.dxi->c1);
        combine(out.xi_flat->c2, k1.dxi->c2, k2.dxi->c2, k3.dxi->c2, k4.dxi->c2);
    }
    if (state.loop) {
        for (int k = 0; k < out.loop->size(); ++k) {
            out.loop->xs[k] +=
                dt / 6.0 * (k1.dxs[k] + 2.0 * k2.dxs[k] + 2.0 * k3.dxs[k] + k4.dxs[k]);
            out.loop->ys[k] +=
                dt / 6.0 * (k1.dys[k] + 2.0 * k2.dys[k] + 2.0 * k3.dys[k] + k4.dys[k]);
        }
    }

    if (!out.F.finite() || !out.u.finite())
        throw solver_error("rk4_step: non-finite state at t = " + std::to_string(out.t));
    if (params.alpha > 0.0 && !out.F.spd(params.det_floor)) {
        double dmin = out.F.det().min();
        throw solver_error("rk4_step: F lost positive definiteness at t = " +
                           std::to_string(out.t) + " (min det F = " +
                           std::to_string(dmin) + ")");
    }

    // re-project the combined velocity to control divergence drift
    MomentumOperator op = params.make_operator(out.F);
    const ScalarField* pguess =
        (ws && ws->reproject_pressure) ? &*ws->reproject_pressure : nullptr;
    StokesResult proj = stokes_project(out.u, op, pguess, params.pressure_tol);
    if (ws) ws->reproject_pressure = proj.p;
    out.u = proj.v;
    return out;
}

}  // namespace aaee
