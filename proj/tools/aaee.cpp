#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aaee/config.hpp"
#include "aaee/diagnostics.hpp"
#include "aaee/errors.hpp"
#include "aaee/io_util.hpp"
#include "aaee/oracle.hpp"
#include "aaee/run.hpp"
#include "aaee/snapshot.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

int cmd_run(const std::string& config_path, const std::string& out_override) {
    aaee::SimConfig cfg = aaee::load_config_file(config_path);
    if (!out_override.empty()) cfg.out_dir = out_override;
    aaee::SimState final_state = aaee::run_simulation(cfg);
    aaee::DiagnosticsRecord rec = aaee::compute_diagnostics(final_state, cfg.params());
    std::printf("run complete: t = %.6g, energy = %.12g, |div u| = %.3g\n", rec.t,
                rec.energy, rec.div_norm);
    std::printf("outputs in %s\n", cfg.out_dir.c_str());
    return 0;
}

int cmd_check(const std::string& config_path) {
    aaee::SimConfig cfg = aaee::load_config_file(config_path);
    int n = std::min(cfg.nx, cfg.ny);
    double alpha = cfg.alpha > 0.0 ? cfg.alpha : 0.15;
    std::vector<aaee::OracleReport> reports = aaee::run_oracle_suite(n, alpha, cfg.ic_seed);
    bool all_pass = true;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& rep : reports) {
        std::printf("%-34s %s  max rel err %.3e\n", rep.name.c_str(),
                    rep.pass ? "PASS" : "FAIL", rep.max_rel_error);
        all_pass = all_pass && rep.pass;
        j.push_back({{"name", rep.name},
                     {"max_rel_error", rep.max_rel_error},
                     {"pass", rep.pass},
                     {"calibration", rep.calibration}});
    }
    std::ofstream out("check_report.json", std::ios::trunc);
    out << j.dump(2) << '\n';
    std::printf("%s (machine-readable report: check_report.json)\n",
                all_pass ? "all checks passed" : "CHECK FAILURES");
    return all_pass ? 0 : 3;
}

int cmd_img(const std::string& snap_path, const std::string& field,
            const std::string& out_path) {
    aaee::SimState s = aaee::read_snapshot(snap_path);
    aaee::ScalarField f;
    if (field == "vorticity") {
        f = aaee::vorticity(s.u);
    } else if (field == "detF") {
        f = s.F.det();
    } else {
        throw aaee::config_error("--field must be vorticity or detF, got `" + field + "`");
    }
    aaee::emit_field_image(f, out_path);
    std::printf("wrote %s (%dx%d)\n", out_path.c_str(), f.grid.nx, f.grid.ny);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anisotropic averaged Euler simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, snap_path, field, img_out;

    CLI::App* run = app.add_subcommand("run", "integrate the equations");
    run->add_option("--config", config_path, "config file")->required();
    run->add_option("--out", out_dir, "output directory override");

    CLI::App* check = app.add_subcommand("check", "run the verification suite");
    check->add_option("--config", config_path, "config file")->required();

    CLI::App* img = app.add_subcommand("img", "render a snapshot field to PGM");
    img->add_option("--snapshot", snap_path, "snapshot file")->required();
    img->add_option("--field", field, "vorticity|detF")->required();
    img->add_option("--out", img_out, "output .pgm path")->required();

    CLI::App* version = app.add_subcommand("version", "print version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run) return cmd_run(config_path, out_dir);
        if (*check) return cmd_check(config_path);
        if (*img) return cmd_img(snap_path, field, img_out);
        if (*version) {
            std::printf("aaee %s\n", kVersion);
            return 0;
        }
    } catch (const aaee::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const aaee::solver_error& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 3;
    } catch (const aaee::io_error& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
