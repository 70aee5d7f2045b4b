#include "aaee/run.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "aaee/errors.hpp"
#include "aaee/io_util.hpp"
#include "aaee/snapshot.hpp"
#include "aaee/timestepping.hpp"

namespace aaee {

namespace {

std::string snap_name(int step) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "snapshot_%06d.aae2", step);
    return buf;
}

void write_error_record(const std::string& dir, double t, int step,
                        const std::string& message) {
    nlohmann::json j;
    j["t"] = t;
    j["step"] = step;
    j["error"] = message;
    std::ofstream out(dir + "/error.json", std::ios::trunc);
    out << j.dump(2) << '\n';
}

}  // namespace

SimState run_simulation(const SimConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const std::string diag_path = cfg.out_dir + "/diagnostics.csv";
    std::error_code ec;
    fs::remove(diag_path, ec);  // a run owns its diagnostics file

    SimState state = make_initial_state(cfg);
    ModelParams params = cfg.params();
    StepWorkspace ws;
    int step = 0;

    // uniform-dt history for the Kelvin residual diagnostic
    std::deque<SimState> history;
    auto push_history = [&](const SimState& s) {
        if (!s.loop) return;
        history.push_back(s);
        while (history.size() > 3) history.pop_front();
    };
    auto kelvin_if_available = [&]() -> std::optional<double> {
        if (history.size() < 3 || params.alpha == 0.0) return std::nullopt;
        double d1 = history[1].t - history[0].t;
        double d2 = history[2].t - history[1].t;
        if (!(d1 > 0.0) || std::abs(d1 - d2) > 1e-12 * d1) return std::nullopt;
        return kelvin_residual(std::vector<SimState>(history.begin(), history.end()),
                               params);
    };
    auto emit_diag = [&]() {
        DiagnosticsRecord rec = compute_diagnostics(state, params);
        rec.kelvin_residual = kelvin_if_available();
        append_diagnostics_row(rec, diag_path);
    };

    try {
        push_history(state);
        emit_diag();
        write_snapshot(state, cfg.out_dir + "/" + snap_name(0));

        const double t_eps = 1e-12 * std::max(1.0, cfg.t_end);
        bool emitted_diag = true, emitted_snap = true;
        while (state.t < cfg.t_end - t_eps) {
            double dt = stable_dt(state.u, cfg.cfl, cfg.dt_max);
            dt = std::min(dt, cfg.t_end - state.t);
            state = rk4_step(state, dt, params, &ws);
            ++step;

            if (state.loop) {
                const Grid2D& g = state.u.grid();
                double trigger = 2.0 * std::max(g.dx, g.dy);
                if (state.loop->max_spacing() > trigger)
                    state.loop = resample_loop(*state.loop, std::max(g.dx, g.dy));
            }
            push_history(state);

            emitted_diag = (step % cfg.diag_every == 0);
            if (emitted_diag) emit_diag();
            emitted_snap = (step % cfg.snap_every == 0);
            if (emitted_snap) write_snapshot(state, cfg.out_dir + "/" + snap_name(step));
        }
        if (step > 0 && !emitted_diag) emit_diag();
        if (step > 0 && !emitted_snap)
            write_snapshot(state, cfg.out_dir + "/" + snap_name(step));
    } catch (const std::exception& e) {
        write_error_record(cfg.out_dir, state.t, step, e.what());
        throw;
    }
    return state;
}

}  // namespace aaee
