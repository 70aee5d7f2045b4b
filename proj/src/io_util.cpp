#include "aaee/io_util.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "aaee/errors.hpp"

namespace aaee {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void append_diagnostics_row(const DiagnosticsRecord& r, const std::string& path) {
    bool need_header = true;
    std::error_code ec;
    auto sz = std::filesystem::file_size(path, ec);
    if (!ec && sz > 0) need_header = false;
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw io_error("cannot open diagnostics file: " + path);
    if (need_header)
        out << "t,energy,detF_min,detF_max,div_norm,enstrophy,circulation,kelvin_residual\n";
    out << fmt17(r.t) << ',' << fmt17(r.energy) << ',' << fmt17(r.detf_min) << ','
        << fmt17(r.detf_max) << ',' << fmt17(r.div_norm) << ',' << fmt17(r.enstrophy)
        << ',';
    if (r.circulation) out << fmt17(*r.circulation);
    out << ',';
    if (r.kelvin_residual) out << fmt17(*r.kelvin_residual);
    out << '\n';
    if (!out) throw io_error("write failed: " + path);
}

void emit_field_image(const ScalarField& f, const std::string& path) {
    if (!f.finite()) throw io_error("emit_field_image: field has non-finite values");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open image for writing: " + path);
    const Grid2D& g = f.grid;
    out << "P5\n" << g.nx << ' ' << g.ny << "\n255\n";
    double lo = f.min(), hi = f.max();
    double span = hi - lo;
    std::vector<unsigned char> row(g.nx);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double v = f(i, j);
            row[i] = span > 0.0
                         ? static_cast<unsigned char>(255.0 * (v - lo) / span + 0.5)
                         : static_cast<unsigned char>(128);
        }
        out.write(reinterpret_cast<const char*>(row.data()), g.nx);
    }
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace aaee
