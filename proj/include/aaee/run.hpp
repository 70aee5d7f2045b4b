#pragma once

#include "aaee/config.hpp"
#include "aaee/dynamics.hpp"

namespace aaee {

/// Time loop from t = 0 to t_end with CFL-limited RK4 steps. Emits a
/// diagnostics row every diag_every steps and a snapshot every snap_every
/// steps into cfg.out_dir (plus one of each at step 0 and at the end).
/// Deterministic for a fixed config. Any failure writes a machine-readable
/// error record (error.json with t and step index) before rethrowing.
SimState run_simulation(const SimConfig& cfg);

}  // namespace aaee
