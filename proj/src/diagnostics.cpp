#include "aaee/diagnostics.hpp"

#include <cmath>
#include <string>

#include "aaee/errors.hpp"
#include "aaee/interpolate.hpp"

namespace aaee {

double energy(const VectorField& u, const SymTensorField& F, double alpha) {
    double e = 0.5 * inner(u, u);
    if (alpha != 0.0) {
        const Spectral& sp = spectral_for(u.grid());
        SymTensorField D = def_tensor(u);
        SymTensorField t(u.grid());
        t.c11 = sp.mul(D.c11, D.c11) + sp.mul(D.c12, D.c12);
        t.c12 = sp.mul(D.c12, D.c11 + D.c22);
        t.c22 = sp.mul(D.c12, D.c12) + sp.mul(D.c22, D.c22);
        e += 2.0 * alpha * alpha * tensor_inner(t, F);
    }
    return e;
}

ScalarField vorticity(const VectorField& u) {
    const Spectral& sp = spectral_for(u.grid());
    return sp.deriv_x(u.y) - sp.deriv_y(u.x);
}

DiagnosticsRecord compute_diagnostics(const SimState& state, const ModelParams& params) {
    const Spectral& sp = spectral_for(state.u.grid());
    DiagnosticsRecord rec;
    rec.t = state.t;
    rec.energy = energy(state.u, state.F, params.alpha);
    ScalarField det = state.F.det();
    rec.detf_min = det.min();
    rec.detf_max = det.max();
    rec.div_norm = sp.divergence(state.u).linf();
    ScalarField w = vorticity(state.u);
    rec.enstrophy = 0.5 * inner(w, w);
    if (state.loop) rec.circulation = circulation(state, params);
    return rec;
}

double loop_integral(const OneFormField& a, const MaterialLoop& loop) {
    BicubicSpline s1(a.c1), s2(a.c2);
    const int m = loop.size();
    std::vector<double> v1(m), v2(m);
    for (int k = 0; k < m; ++k) {
        v1[k] = s1(loop.xs[k], loop.ys[k]);
        v2[k] = s2(loop.xs[k], loop.ys[k]);
    }
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
        int kn = (k + 1) % m;
        acc += 0.5 * (v1[k] + v1[kn]) * (loop.xs[kn] - loop.xs[k]) +
               0.5 * (v2[k] + v2[kn]) * (loop.ys[kn] - loop.ys[k]);
    }
    return acc;
}

double circulation(const SimState& state, const ModelParams& params) {
    if (!state.loop) throw config_error("circulation: state has no material loop");
    VectorField v = state.u;
    if (params.alpha != 0.0) {
        VectorField cu = apply_C(state.u, state.F);
        axpy(-params.alpha * params.alpha, cu, v);
    }
    return loop_integral(flat(v), *state.loop);
}

OneFormField kelvin_rhs_integrand(const VectorField& u, const SymTensorField& F,
                                  double alpha) {
    const double a2 = alpha * alpha;
    VectorField w = ualpha_terms::def_sq_gradient_term(u, F) +
                    ualpha_terms::def_sq_flux_div_term(u, F);
    return flat(-a2 * w);
}

double kelvin_residual(const std::vector<SimState>& history, const ModelParams& params) {
    if (history.size() < 3)
        throw config_error("kelvin_residual: need at least 3 consecutive states");
    const SimState& s0 = history[history.size() - 3];
    const SimState& s1 = history[history.size() - 2];
    const SimState& s2 = history[history.size() - 1];
    if (!s0.loop || !s1.loop || !s2.loop)
        throw config_error("kelvin_residual: states must carry advected loops");
    double d1 = s1.t - s0.t, d2 = s2.t - s1.t;
    if (!(d1 > 0.0) || std::abs(d1 - d2) > 1e-9 * d1)
        throw config_error("kelvin_residual: states not uniformly spaced in time");
    double c0 = circulation(s0, params);
    double c2 = circulation(s2, params);
    double dcdt = (c2 - c0) / (d1 + d2);
    OneFormField w = kelvin_rhs_integrand(s1.u, s1.F, params.alpha);
    double rhs = loop_integral(w, *s1.loop);
    return std::abs(dcdt - rhs);
}

}  // namespace aaee
