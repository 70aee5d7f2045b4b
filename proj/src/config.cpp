#include "aaee/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "aaee/errors.hpp"
#include "aaee/init.hpp"

namespace aaee {

namespace {

struct Entry {
    std::string value;
    int line;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

class KeyTable {
  public:
    explicit KeyTable(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::string line = trim(raw);
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw config_error("line " + std::to_string(lineno) +
                                   ": expected `key = value`, got `" + line + "`");
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw config_error("line " + std::to_string(lineno) + ": empty key");
            if (entries_.count(key))
                throw config_error("line " + std::to_string(lineno) + ": duplicate key `" +
                                   key + "`");
            entries_[key] = Entry{value, lineno};
        }
    }

    bool has(const std::string& key) {
        used_.insert(key);
        return entries_.count(key) > 0;
    }

    std::string require(const std::string& key) {
        used_.insert(key);
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw config_error("missing required key `" + key + "`");
        return it->second.value;
    }

    std::string get(const std::string& key, const std::string& dflt) {
        used_.insert(key);
        auto it = entries_.find(key);
        return it == entries_.end() ? dflt : it->second.value;
    }

    int line_of(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    void reject_unknown() const {
        for (const auto& [key, entry] : entries_) {
            if (!used_.count(key))
                throw config_error("line " + std::to_string(entry.line) +
                                   ": unknown key `" + key + "`");
        }
    }

  private:
    std::map<std::string, Entry> entries_;
    std::set<std::string> used_;
};

[[noreturn]] void bad(const KeyTable& t, const std::string& key, const std::string& why) {
    throw config_error("line " + std::to_string(t.line_of(key)) + ": key `" + key +
                       "` " + why);
}

double parse_double(KeyTable& t, const std::string& key, const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        bad(t, key, "is not a number: `" + s + "`");
    }
}

long long parse_int(KeyTable& t, const std::string& key, const std::string& s) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        bad(t, key, "is not an integer: `" + s + "`");
    }
}

bool parse_bool(KeyTable& t, const std::string& key, const std::string& s) {
    if (s == "on" || s == "true" || s == "1") return true;
    if (s == "off" || s == "false" || s == "0") return false;
    bad(t, key, "must be on/off, got `" + s + "`");
}

}  // namespace

SimConfig parse_config(const std::string& text) {
    KeyTable t(text);
    SimConfig c;

    c.nx = static_cast<int>(parse_int(t, "grid.nx", t.require("grid.nx")));
    c.ny = static_cast<int>(parse_int(t, "grid.ny", t.require("grid.ny")));
    c.lx = parse_double(t, "grid.lx", t.require("grid.lx"));
    c.ly = parse_double(t, "grid.ly", t.require("grid.ly"));
    if (c.nx < 8 || c.nx % 2 != 0) bad(t, "grid.nx", "must be even and >= 8");
    if (c.ny < 8 || c.ny % 2 != 0) bad(t, "grid.ny", "must be even and >= 8");
    if (!(c.lx > 0.0)) bad(t, "grid.lx", "must be > 0");
    if (!(c.ly > 0.0)) bad(t, "grid.ly", "must be > 0");

    c.alpha = parse_double(t, "alpha", t.require("alpha"));
    if (!(c.alpha >= 0.0)) bad(t, "alpha", "must be >= 0");
    c.nu = parse_double(t, "nu", t.get("nu", "0"));
    if (!(c.nu >= 0.0)) bad(t, "nu", "must be >= 0");
    c.t_end = parse_double(t, "t_end", t.require("t_end"));
    if (!(c.t_end >= 0.0)) bad(t, "t_end", "must be >= 0");
    c.cfl = parse_double(t, "cfl", t.get("cfl", "0.25"));
    if (!(c.cfl > 0.0 && c.cfl <= 1.0)) bad(t, "cfl", "must be in (0, 1]");
    c.dt_max = parse_double(t, "dt_max", t.get("dt_max", "0.1"));
    if (!(c.dt_max > 0.0)) bad(t, "dt_max", "must be > 0");

    std::string ic = t.require("ic");
    if (ic == "taylor_green")
        c.ic = InitialCondition::taylor_green;
    else if (ic == "shear")
        c.ic = InitialCondition::shear;
    else if (ic == "random_seeded")
        c.ic = InitialCondition::random_seeded;
    else
        bad(t, "ic", "must be taylor_green|shear|random_seeded, got `" + ic + "`");
    c.ic_seed = static_cast<std::uint64_t>(parse_int(t, "ic.seed", t.get("ic.seed", "1")));
    c.ic_amplitude = parse_double(t, "ic.amplitude", t.get("ic.amplitude", "1"));

    std::string f0 = t.require("f0");
    if (f0 == "identity") {
        c.f0 = F0Kind::identity;
    } else if (f0 == "constant_spd") {
        c.f0 = F0Kind::constant_spd;
        c.f0_a = parse_double(t, "f0.a", t.require("f0.a"));
        c.f0_b = parse_double(t, "f0.b", t.require("f0.b"));
        c.f0_c = parse_double(t, "f0.c", t.require("f0.c"));
        if (!(c.f0_a > 0.0)) bad(t, "f0.a", "must be > 0 (SPD)");
        if (!(c.f0_a * c.f0_c - c.f0_b * c.f0_b > 0.0))
            bad(t, "f0.b", "requires det > 0 (SPD): a*c - b^2 must be positive");
    } else if (f0 == "from_samples") {
        c.f0 = F0Kind::from_samples;
        c.f0_file = t.require("f0.file");
    } else {
        bad(t, "f0", "must be identity|constant_spd|from_samples, got `" + f0 + "`");
    }

    c.corrector = parse_bool(t, "corrector", t.get("corrector", "off"));
    std::string xi = t.get("xi0", "unit_x");
    if (xi == "unit_x")
        c.xi0 = XiPreset::unit_x;
    else if (xi == "unit_y")
        c.xi0 = XiPreset::unit_y;
    else
        bad(t, "xi0", "must be unit_x|unit_y, got `" + xi + "`");

    if (t.has("loop.radius") || t.has("loop.center_x") || t.has("loop.center_y") ||
        t.has("loop.markers")) {
        SimConfig::LoopSpec spec;
        spec.cx = parse_double(t, "loop.center_x", t.require("loop.center_x"));
        spec.cy = parse_double(t, "loop.center_y", t.require("loop.center_y"));
        spec.radius = parse_double(t, "loop.radius", t.require("loop.radius"));
        spec.markers =
            static_cast<int>(parse_int(t, "loop.markers", t.get("loop.markers", "128")));
        if (!(spec.radius > 0.0)) bad(t, "loop.radius", "must be > 0");
        if (spec.markers < 16) bad(t, "loop.markers", "must be >= 16");
        c.loop = spec;
    }

    c.tol_momentum = parse_double(t, "tol.momentum", t.get("tol.momentum", "1e-10"));
    if (!(c.tol_momentum > 0.0)) bad(t, "tol.momentum", "must be > 0");
    c.tol_pressure = parse_double(t, "tol.pressure", t.get("tol.pressure", "1e-9"));
    if (!(c.tol_pressure > 0.0)) bad(t, "tol.pressure", "must be > 0");
    c.maxit_momentum =
        static_cast<int>(parse_int(t, "maxit.momentum", t.get("maxit.momentum", "500")));
    if (c.maxit_momentum < 1) bad(t, "maxit.momentum", "must be >= 1");
    c.det_floor = parse_double(t, "det_floor", t.get("det_floor", "1e-8"));
    if (!(c.det_floor > 0.0)) bad(t, "det_floor", "must be > 0");

    c.diag_every = static_cast<int>(parse_int(t, "diag_every", t.get("diag_every", "1")));
    if (c.diag_every < 1) bad(t, "diag_every", "must be >= 1");
    c.snap_every = static_cast<int>(parse_int(t, "snap_every", t.get("snap_every", "100")));
    if (c.snap_every < 1) bad(t, "snap_every", "must be >= 1");
    c.out_dir = t.get("out_dir", "out");

    t.reject_unknown();
    return c;
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str());
    } catch (const config_error& e) {
        throw config_error(path + ": " + e.what());
    }
}

namespace {

SymTensorField f0_from_samples_file(const Grid2D& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open samples file: " + path);
    std::vector<std::pair<double, VectorField>> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        double w, x1, x2;
        if (!(ls >> w >> x1 >> x2))
            throw config_error(path + ":" + std::to_string(lineno) +
                               ": expected `weight xi1 xi2`");
        VectorField xi(g);
        for (double& v : xi.x.v) v = x1;
        for (double& v : xi.y.v) v = x2;
        samples.emplace_back(w, std::move(xi));
    }
    SymTensorField F = build_F_from_samples(samples);
    if (!F.spd(1e-8))
        throw config_error(path +
                           ": sample tensor is not strictly positive definite; "
                           "add samples or regularize");
    return F;
}

}  // namespace

SimState make_initial_state(const SimConfig& cfg) {
    Grid2D g = make_grid(cfg.nx, cfg.ny, cfg.lx, cfg.ly);
    SimState s;
    s.t = 0.0;
    switch (cfg.ic) {
        case InitialCondition::taylor_green:
            s.u = cfg.ic_amplitude * taylor_green_u(g);
            break;
        case InitialCondition::shear:
            s.u = cfg.ic_amplitude * shear_u(g);
            break;
        case InitialCondition::random_seeded:
            s.u = random_seeded_u(g, cfg.ic_seed, cfg.ic_amplitude);
            break;
    }
    switch (cfg.f0) {
        case F0Kind::identity:
            s.F = identity_F(g);
            break;
        case F0Kind::constant_spd:
            s.F = constant_spd_F(g, cfg.f0_a, cfg.f0_b, cfg.f0_c);
            break;
        case F0Kind::from_samples:
            s.F = f0_from_samples_file(g, cfg.f0_file);
            break;
    }
    if (cfg.corrector)
        s.xi_flat = cfg.xi0 == XiPreset::unit_x ? unit_x_oneform(g) : unit_y_oneform(g);
    if (cfg.loop)
        s.loop = make_circle_loop(cfg.loop->cx, cfg.loop->cy, cfg.loop->radius,
                                  cfg.loop->markers);
    return s;
}

}  // namespace aaee
