#include "aaee/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace aaee {

struct Spectral::Plans {
    fftw_plan r2c = nullptr;       // base grid
    fftw_plan c2r = nullptr;
    fftw_plan r2c_pad = nullptr;   // 2x grid
    fftw_plan c2r_pad = nullptr;
    ~Plans() {
        if (r2c) fftw_destroy_plan(r2c);
        if (c2r) fftw_destroy_plan(c2r);
        if (r2c_pad) fftw_destroy_plan(r2c_pad);
        if (c2r_pad) fftw_destroy_plan(c2r_pad);
    }
};

namespace {
std::mutex planner_mutex;  // FFTW planning is not thread-safe

std::size_t spec_size(int nx, int ny) {
    return static_cast<std::size_t>(ny) * (nx / 2 + 1);
}
}  // namespace

Spectral::Spectral(const Grid2D& g) : grid_(g), plans_(std::make_unique<Plans>()) {
    std::lock_guard<std::mutex> lock(planner_mutex);
    std::vector<double> r(static_cast<std::size_t>(g.nx) * g.ny);
    std::vector<std::complex<double>> c(spec_size(g.nx, g.ny));
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    plans_->r2c = fftw_plan_dft_r2c_2d(g.ny, g.nx, r.data(),
                                       reinterpret_cast<fftw_complex*>(c.data()), flags);
    plans_->c2r = fftw_plan_dft_c2r_2d(g.ny, g.nx,
                                       reinterpret_cast<fftw_complex*>(c.data()),
                                       r.data(), flags);
    std::vector<double> rp(static_cast<std::size_t>(2 * g.nx) * (2 * g.ny));
    std::vector<std::complex<double>> cp(spec_size(2 * g.nx, 2 * g.ny));
    plans_->r2c_pad = fftw_plan_dft_r2c_2d(2 * g.ny, 2 * g.nx, rp.data(),
                                           reinterpret_cast<fftw_complex*>(cp.data()),
                                           flags);
    plans_->c2r_pad = fftw_plan_dft_c2r_2d(2 * g.ny, 2 * g.nx,
                                           reinterpret_cast<fftw_complex*>(cp.data()),
                                           rp.data(), flags);
}

Spectral::~Spectral() = default;

Spec Spectral::fwd(const ScalarField& f) const {
    Spec s(grid_);
    std::vector<double> in(f.v);  // r2c destroys its input
    fftw_execute_dft_r2c(plans_->r2c, in.data(),
                         reinterpret_cast<fftw_complex*>(s.c.data()));
    return s;
}

ScalarField Spectral::inv(const Spec& s) const {
    ScalarField f(grid_);
    std::vector<std::complex<double>> in(s.c);  // c2r destroys its input
    fftw_execute_dft_c2r(plans_->c2r, reinterpret_cast<fftw_complex*>(in.data()),
                         f.v.data());
    double scale = 1.0 / (static_cast<double>(grid_.nx) * grid_.ny);
    for (double& x : f.v) x *= scale;
    return f;
}

void Spectral::mul_ikx(Spec& s) const {
    const int hx = grid_.nx / 2;
    for (int j = 0; j < grid_.ny; ++j) {
        for (int i = 0; i <= hx; ++i) {
            if (i == hx || j == grid_.ny / 2) {
                s.at(i, j) = 0.0;
            } else {
                s.at(i, j) *= std::complex<double>(0.0, grid_.kx(i));
            }
        }
    }
}

void Spectral::mul_iky(Spec& s) const {
    const int hx = grid_.nx / 2;
    for (int j = 0; j < grid_.ny; ++j) {
        for (int i = 0; i <= hx; ++i) {
            if (i == hx || j == grid_.ny / 2) {
                s.at(i, j) = 0.0;
            } else {
                s.at(i, j) *= std::complex<double>(0.0, grid_.ky(j));
            }
        }
    }
}

void Spectral::mul_minus_k2(Spec& s) const {
    const int hx = grid_.nx / 2;
    for (int j = 0; j < grid_.ny; ++j) {
        for (int i = 0; i <= hx; ++i) {
            if (i == hx || j == grid_.ny / 2) {
                s.at(i, j) = 0.0;
            } else {
                double kx = grid_.kx(i), ky = grid_.ky(j);
                s.at(i, j) *= -(kx * kx + ky * ky);
            }
        }
    }
}

void Spectral::mul_inv_helmholtz(Spec& s, double c) const {
    const int hx = grid_.nx / 2;
    for (int j = 0; j < grid_.ny; ++j) {
        for (int i = 0; i <= hx; ++i) {
            if (i == hx || j == grid_.ny / 2) {
                s.at(i, j) = 0.0;
            } else {
                double kx = grid_.kx(i), ky = grid_.ky(j);
                s.at(i, j) /= 1.0 + c * (kx * kx + ky * ky);
            }
        }
    }
}

void Spectral::dealias_mask(Spec& s) const {
    const int hx = grid_.nx / 2;
    for (int j = 0; j < grid_.ny; ++j)
        for (int i = 0; i <= hx; ++i)
            if (i == hx || j == grid_.ny / 2) s.at(i, j) = 0.0;
}

ScalarField Spectral::deriv_x(const ScalarField& f) const {
    Spec s = fwd(f);
    mul_ikx(s);
    return inv(s);
}

ScalarField Spectral::deriv_y(const ScalarField& f) const {
    Spec s = fwd(f);
    mul_iky(s);
    return inv(s);
}

ScalarField Spectral::laplacian(const ScalarField& f) const {
    Spec s = fwd(f);
    mul_minus_k2(s);
    return inv(s);
}

VectorField Spectral::laplacian(const VectorField& u) const {
    VectorField r(grid_);
    r.x = laplacian(u.x);
    r.y = laplacian(u.y);
    return r;
}

ScalarField Spectral::inv_helmholtz(const ScalarField& f, double c) const {
    Spec s = fwd(f);
    mul_inv_helmholtz(s, c);
    return inv(s);
}

VectorField Spectral::inv_helmholtz(const VectorField& u, double c) const {
    VectorField r(grid_);
    r.x = inv_helmholtz(u.x, c);
    r.y = inv_helmholtz(u.y, c);
    return r;
}

VectorField Spectral::leray(const VectorField& u) const {
    Spec sx = fwd(u.x), sy = fwd(u.y);
    const int hx = grid_.nx / 2;
    for (int j = 0; j < grid_.ny; ++j) {
        for (int i = 0; i <= hx; ++i) {
            if (i == hx || j == grid_.ny / 2) {
                sx.at(i, j) = 0.0;
                sy.at(i, j) = 0.0;
                continue;
            }
            if (i == 0 && j == 0) continue;
            double kx = grid_.kx(i), ky = grid_.ky(j);
            double k2 = kx * kx + ky * ky;
            std::complex<double> dot = (kx * sx.at(i, j) + ky * sy.at(i, j)) / k2;
            sx.at(i, j) -= kx * dot;
            sy.at(i, j) -= ky * dot;
        }
    }
    VectorField r(grid_);
    r.x = inv(sx);
    r.y = inv(sy);
    return r;
}

ScalarField Spectral::divergence(const VectorField& u) const {
    Spec sx = fwd(u.x), sy = fwd(u.y);
    mul_ikx(sx);
    mul_iky(sy);
    for (std::size_t n = 0; n < sx.c.size(); ++n) sx.c[n] += sy.c[n];
    return inv(sx);
}

VectorField Spectral::gradient(const ScalarField& p) const {
    VectorField r(grid_);
    Spec s = fwd(p);
    Spec sx = s;
    mul_ikx(sx);
    r.x = inv(sx);
    mul_iky(s);
    r.y = inv(s);
    return r;
}

Padded Spectral::pad(const Spec& s) const {
    const int nx = grid_.nx, ny = grid_.ny;
    const int hx = nx / 2, hy = ny / 2;
    const int pw = nx + 1;  // padded spectrum row width
    std::vector<std::complex<double>> cp(spec_size(2 * nx, 2 * ny), 0.0);
    for (int j = 0; j < ny; ++j) {
        if (j == hy) continue;
        int jp = (j < hy) ? j : j + ny;
        for (int i = 0; i < hx; ++i)
            cp[static_cast<std::size_t>(jp) * pw + i] = s.c[static_cast<std::size_t>(j) * (hx + 1) + i];
    }
    Padded p;
    p.grid = grid_;
    p.v.resize(static_cast<std::size_t>(2 * nx) * (2 * ny));
    fftw_execute_dft_c2r(plans_->c2r_pad, reinterpret_cast<fftw_complex*>(cp.data()),
                         p.v.data());
    double scale = 1.0 / (static_cast<double>(nx) * ny);
    for (double& x : p.v) x *= scale;
    return p;
}

Padded Spectral::pad(const ScalarField& f) const { return pad(fwd(f)); }

Spec Spectral::reduce_spec(const Padded& p) const {
    const int nx = grid_.nx, ny = grid_.ny;
    const int hx = nx / 2, hy = ny / 2;
    const int pw = nx + 1;
    std::vector<std::complex<double>> cp(spec_size(2 * nx, 2 * ny));
    std::vector<double> in(p.v);
    fftw_execute_dft_r2c(plans_->r2c_pad, in.data(),
                         reinterpret_cast<fftw_complex*>(cp.data()));
    Spec s(grid_);
    for (int j = 0; j < ny; ++j) {
        if (j == hy) continue;
        int jp = (j < hy) ? j : j + ny;
        for (int i = 0; i < hx; ++i)
            s.c[static_cast<std::size_t>(j) * (hx + 1) + i] =
                0.25 * cp[static_cast<std::size_t>(jp) * pw + i];
    }
    return s;
}

ScalarField Spectral::reduce(const Padded& p) const { return inv(reduce_spec(p)); }

ScalarField Spectral::mul(const ScalarField& a, const ScalarField& b) const {
    Padded pa = pad(a), pb = pad(b);
    for (std::size_t n = 0; n < pa.v.size(); ++n) pa.v[n] *= pb.v[n];
    return reduce(pa);
}

const Spectral& spectral_for(const Grid2D& g) {
    static std::mutex m;
    static std::map<std::pair<std::pair<int, int>, std::pair<double, double>>,
                    std::unique_ptr<Spectral>>
        cache;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(std::make_pair(g.nx, g.ny), std::make_pair(g.lx, g.ly));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Spectral>(g)).first;
    return *it->second;
}

ScalarField spectral_deriv(const ScalarField& f, Axis axis) {
    const Spectral& sp = spectral_for(f.grid);
    return axis == Axis::x ? sp.deriv_x(f) : sp.deriv_y(f);
}

}  // namespace aaee
