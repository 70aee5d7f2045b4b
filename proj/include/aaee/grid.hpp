#pragma once

#include <cstddef>
#include <vector>

namespace aaee {

/// Uniform periodic grid on the flat 2-torus [0,lx) x [0,ly).
///
/// Collocation points are x_i = i*dx, y_j = j*dy. Real fields are stored
/// row-major with x fastest: index(i,j) = j*nx + i. Grid sizes must be even
/// and at least 8; spectral content is restricted to modes |kx| < nx/2,
/// |ky| < ny/2 (the Nyquist mode is zeroed by every spectral operation).
struct Grid2D {
    int nx = 0;
    int ny = 0;
    double lx = 0.0;
    double ly = 0.0;
    double dx = 0.0;
    double dy = 0.0;

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    double x(int i) const { return dx * i; }
    double y(int j) const { return dy * j; }
    double cell_area() const { return dx * dy; }

    /// Integer wavenumber along x for spectral column index i in [0, nx/2].
    double kx(int i) const;
    /// Integer wavenumber along y for spectral row index j in [0, ny).
    double ky(int j) const;

    bool operator==(const Grid2D& o) const {
        return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
    }
};

/// Validates sizes/lengths and fills the derived spacings.
/// Throws config_error for odd or too-small sizes and non-positive lengths.
Grid2D make_grid(int nx, int ny, double lx, double ly);

}  // namespace aaee
