#include "aaee/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aaee/errors.hpp"

namespace aaee {

bool ScalarField::finite() const {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

double ScalarField::min() const { return *std::min_element(v.begin(), v.end()); }
double ScalarField::max() const { return *std::max_element(v.begin(), v.end()); }

double ScalarField::linf() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double ScalarField::integral() const {
    double s = 0.0;
    for (double x : v) s += x;
    return s * grid.cell_area();
}

ScalarField SymTensorField::det() const {
    ScalarField d(grid());
    for (std::size_t n = 0; n < d.v.size(); ++n)
        d.v[n] = c11.v[n] * c22.v[n] - c12.v[n] * c12.v[n];
    return d;
}

double SymTensorField::min_eigenvalue() const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < c11.v.size(); ++n) {
        double tr = c11.v[n] + c22.v[n];
        double dd = c11.v[n] - c22.v[n];
        double disc = std::sqrt(dd * dd / 4.0 + c12.v[n] * c12.v[n]);
        m = std::min(m, tr / 2.0 - disc);
    }
    return m;
}

bool SymTensorField::spd(double det_floor) const {
    for (std::size_t n = 0; n < c11.v.size(); ++n) {
        if (!(c11.v[n] > 0.0)) return false;
        if (!(c11.v[n] * c22.v[n] - c12.v[n] * c12.v[n] >= det_floor)) return false;
    }
    return true;
}

OneFormField flat(const VectorField& u) {
    OneFormField a(u.grid());
    a.c1 = u.x;
    a.c2 = u.y;
    return a;
}

VectorField sharp(const OneFormField& a) {
    VectorField u(a.grid());
    u.x = a.c1;
    u.y = a.c2;
    return u;
}

double inner(const ScalarField& a, const ScalarField& b) {
    double s = 0.0;
    for (std::size_t n = 0; n < a.v.size(); ++n) s += a.v[n] * b.v[n];
    return s * a.grid.cell_area();
}

double inner(const VectorField& a, const VectorField& b) {
    return inner(a.x, b.x) + inner(a.y, b.y);
}

double norm2(const ScalarField& a) { return std::sqrt(inner(a, a)); }
double norm2(const VectorField& a) { return std::sqrt(inner(a, a)); }

double tensor_inner(const SymTensorField& a, const SymTensorField& b) {
    double s = 0.0;
    for (std::size_t n = 0; n < a.c11.v.size(); ++n)
        s += a.c11.v[n] * b.c11.v[n] + 2.0 * a.c12.v[n] * b.c12.v[n] +
             a.c22.v[n] * b.c22.v[n];
    return 0.5 * s * a.grid().cell_area();
}

SymTensorField build_F_from_samples(
    const std::vector<std::pair<double, VectorField>>& samples) {
    if (samples.empty()) throw config_error("build_F_from_samples: empty sample list");
    double wsum = 0.0;
    for (const auto& [w, xi] : samples) {
        if (w < 0.0) throw config_error("build_F_from_samples: negative weight");
        wsum += w;
    }
    if (!(wsum > 0.0)) throw config_error("build_F_from_samples: weights sum to zero");
    SymTensorField F(samples.front().second.grid());
    for (const auto& [w, xi] : samples) {
        for (std::size_t n = 0; n < F.c11.v.size(); ++n) {
            F.c11.v[n] += w * xi.x.v[n] * xi.x.v[n];
            F.c12.v[n] += w * xi.x.v[n] * xi.y.v[n];
            F.c22.v[n] += w * xi.y.v[n] * xi.y.v[n];
        }
    }
    return F;
}

namespace {
template <class Op>
ScalarField zip(const ScalarField& a, const ScalarField& b, Op op) {
    ScalarField r(a.grid);
    for (std::size_t n = 0; n < r.v.size(); ++n) r.v[n] = op(a.v[n], b.v[n]);
    return r;
}
}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    return zip(a, b, [](double x, double y) { return x + y; });
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    return zip(a, b, [](double x, double y) { return x - y; });
}
ScalarField operator*(double s, const ScalarField& a) {
    ScalarField r(a.grid);
    for (std::size_t n = 0; n < r.v.size(); ++n) r.v[n] = s * a.v[n];
    return r;
}
VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField r(a.grid());
    r.x = a.x + b.x;
    r.y = a.y + b.y;
    return r;
}
VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField r(a.grid());
    r.x = a.x - b.x;
    r.y = a.y - b.y;
    return r;
}
VectorField operator*(double s, const VectorField& a) {
    VectorField r(a.grid());
    r.x = s * a.x;
    r.y = s * a.y;
    return r;
}
SymTensorField operator+(const SymTensorField& a, const SymTensorField& b) {
    SymTensorField r(a.grid());
    r.c11 = a.c11 + b.c11;
    r.c12 = a.c12 + b.c12;
    r.c22 = a.c22 + b.c22;
    return r;
}
SymTensorField operator-(const SymTensorField& a, const SymTensorField& b) {
    SymTensorField r(a.grid());
    r.c11 = a.c11 - b.c11;
    r.c12 = a.c12 - b.c12;
    r.c22 = a.c22 - b.c22;
    return r;
}
SymTensorField operator*(double s, const SymTensorField& a) {
    SymTensorField r(a.grid());
    r.c11 = s * a.c11;
    r.c12 = s * a.c12;
    r.c22 = s * a.c22;
    return r;
}

void axpy(double s, const ScalarField& x, ScalarField& y) {
    for (std::size_t n = 0; n < y.v.size(); ++n) y.v[n] += s * x.v[n];
}
void axpy(double s, const VectorField& x, VectorField& y) {
    axpy(s, x.x, y.x);
    axpy(s, x.y, y.y);
}
void axpy(double s, const SymTensorField& x, SymTensorField& y) {
    axpy(s, x.c11, y.c11);
    axpy(s, x.c12, y.c12);
    axpy(s, x.c22, y.c22);
}

}  // namespace aaee
