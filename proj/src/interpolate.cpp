#include "aaee/interpolate.hpp"

#include <cmath>

#include "aaee/spectral.hpp"

namespace aaee {

namespace {

// cubic B-spline weights for fractional offset s in [0,1), stencil -1..+2
inline void bspline_weights(double s, double w[4]) {
    double s2 = s * s, s3 = s2 * s;
    w[0] = (1.0 - 3.0 * s + 3.0 * s2 - s3) / 6.0;
    w[1] = (4.0 - 6.0 * s2 + 3.0 * s3) / 6.0;
    w[2] = (1.0 + 3.0 * s + 3.0 * s2 - 3.0 * s3) / 6.0;
    w[3] = s3 / 6.0;
}

inline int wrap(int i, int n) {
    i %= n;
    return i < 0 ? i + n : i;
}

}  // namespace

BicubicSpline::BicubicSpline(const ScalarField& f) : coef_(f.grid) {
    // B-spline collocation: divide the spectrum by the cardinal filter
    // (2 + cos(2 pi k / n)) / 3 along each axis.
    const Spectral& sp = spectral_for(f.grid);
    Spec s = sp.fwd(f);
    const int nx = f.grid.nx, ny = f.grid.ny;
    for (int j = 0; j < ny; ++j) {
        double by = (2.0 + std::cos(2.0 * M_PI * j / ny)) / 3.0;
        for (int i = 0; i <= nx / 2; ++i) {
            double bx = (2.0 + std::cos(2.0 * M_PI * i / nx)) / 3.0;
            s.at(i, j) /= bx * by;
        }
    }
    coef_ = sp.inv(s);
}

double BicubicSpline::operator()(double x, double y) const {
    const Grid2D& g = coef_.grid;
    double tx = x / g.dx, ty = y / g.dy;
    double fx = std::floor(tx), fy = std::floor(ty);
    double sx = tx - fx, sy = ty - fy;
    int i0 = static_cast<int>(fx), j0 = static_cast<int>(fy);
    double wx[4], wy[4];
    bspline_weights(sx, wx);
    bspline_weights(sy, wy);
    int ii[4], jj[4];
    for (int k = 0; k < 4; ++k) {
        ii[k] = wrap(i0 - 1 + k, g.nx);
        jj[k] = wrap(j0 - 1 + k, g.ny);
    }
    double acc = 0.0;
    for (int b = 0; b < 4; ++b) {
        const double* row = coef_.v.data() + static_cast<std::size_t>(jj[b]) * g.nx;
        double rowacc = row[ii[0]] * wx[0] + row[ii[1]] * wx[1] + row[ii[2]] * wx[2] +
                        row[ii[3]] * wx[3];
        acc += rowacc * wy[b];
    }
    return acc;
}

double interpolate(const ScalarField& f, double x, double y) {
    return BicubicSpline(f)(x, y);
}

}  // namespace aaee
