#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aaee/dynamics.hpp"
#include "aaee/grid.hpp"

namespace aaee {

enum class InitialCondition { taylor_green, shear, random_seeded };
enum class F0Kind { identity, constant_spd, from_samples };
enum class XiPreset { unit_x, unit_y };

/// Run parameters. Parsed from a flat `key = value` file; every field has a
/// documented default except the ones the parser marks as required.
struct SimConfig {
    int nx = 0, ny = 0;            // grid.nx, grid.ny (required)
    double lx = 0.0, ly = 0.0;     // grid.lx, grid.ly (required)
    double alpha = 0.0;            // required
    double nu = 0.0;
    double t_end = 0.0;            // required
    double cfl = 0.25;
    double dt_max = 0.1;

    InitialCondition ic = InitialCondition::taylor_green;  // required
    std::uint64_t ic_seed = 1;
    double ic_amplitude = 1.0;

    F0Kind f0 = F0Kind::identity;  // required
    double f0_a = 1.0, f0_b = 0.0, f0_c = 1.0;
    std::string f0_file;

    bool corrector = false;
    XiPreset xi0 = XiPreset::unit_x;

    struct LoopSpec {
        double cx = 0.0, cy = 0.0, radius = 1.0;
        int markers = 128;
    };
    std::optional<LoopSpec> loop;

    double tol_momentum = 1e-10;
    double tol_pressure = 1e-9;
    int maxit_momentum = 500;
    double det_floor = 1e-8;

    int diag_every = 1;
    int snap_every = 100;
    std::string out_dir = "out";

    ModelParams params() const {
        ModelParams p;
        p.alpha = alpha;
        p.nu = nu;
        p.momentum_tol = tol_momentum;
        p.momentum_maxit = maxit_momentum;
        p.pressure_tol = tol_pressure;
        p.det_floor = det_floor;
        return p;
    }
};

/// Parses the line-oriented `key = value` format (# comments, dotted keys,
/// flat namespace). Unknown keys and every range violation are hard errors
/// reporting the line number and key. Throws config_error.
SimConfig parse_config(const std::string& text);

/// Reads and parses a config file; errors carry the path.
SimConfig load_config_file(const std::string& path);

/// Builds the initial state (velocity preset, F0, optional corrector
/// one-form and marker loop) described by the config.
SimState make_initial_state(const SimConfig& cfg);

}  // namespace aaee
