#include "aaee/grid.hpp"

#include <cmath>
#include <string>

#include "aaee/errors.hpp"

namespace aaee {

double Grid2D::kx(int i) const { return 2.0 * M_PI / lx * i; }

double Grid2D::ky(int j) const {
    int k = (j <= ny / 2) ? j : j - ny;
    return 2.0 * M_PI / ly * k;
}

Grid2D make_grid(int nx, int ny, double lx, double ly) {
    if (nx < 8 || ny < 8)
        throw config_error("grid sizes must be >= 8, got " + std::to_string(nx) + "x" +
                           std::to_string(ny));
    if (nx % 2 != 0 || ny % 2 != 0)
        throw config_error("grid sizes must be even, got " + std::to_string(nx) + "x" +
                           std::to_string(ny));
    if (!(lx > 0.0) || !(ly > 0.0))
        throw config_error("domain lengths must be positive");
    Grid2D g;
    g.nx = nx;
    g.ny = ny;
    g.lx = lx;
    g.ly = ly;
    g.dx = lx / nx;
    g.dy = ly / ny;
    return g;
}

}  // namespace aaee
