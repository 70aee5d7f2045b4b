#pragma once

#include <array>

#include "aaee/dynamics.hpp"

namespace aaee {

struct StepController {
    double cfl = 0.5;     // in (0, 1]
    double dt_max = 0.1;  // > 0
    double t_end = 1.0;
};

/// CFL-limited step: cfl * min(dx,dy) / max(|u|_inf, 1e-12), clamped to dt_max.
double stable_dt(const VectorField& u, double cfl, double dt_max);

/// Per-stage warm-start carriers, persistent across steps.
struct StepWorkspace {
    std::array<RhsWorkspace, 4> stage;
    std::optional<ScalarField> reproject_pressure;
};

/// Classical RK4 applied simultaneously to u, F, the corrector one-form and
/// the loop markers; u is re-projected after the full step. Aborts with
/// solver_error if F loses positive definiteness.
SimState rk4_step(const SimState& state, double dt, const ModelParams& params,
                  StepWorkspace* ws = nullptr);

}  // namespace aaee
