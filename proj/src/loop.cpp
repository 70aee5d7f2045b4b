#include "aaee/loop.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "aaee/errors.hpp"

namespace aaee {

namespace {

// periodic cubic B-spline interpolation of uniformly sampled values:
// solve the cyclic tridiagonal collocation system (1/6, 4/6, 1/6) by
// Sherman-Morrison, then evaluate at arbitrary parameters (unit knot spacing)
std::vector<double> spline_coeffs(const std::vector<double>& y) {
    const int n = static_cast<int>(y.size());
    std::vector<double> a(n, 1.0 / 6.0), b(n, 4.0 / 6.0), c(n, 1.0 / 6.0);
    // cyclic system via Sherman-Morrison with u = (-b0, 0, ..., 0, cn),
    // standard reduction of the corner entries
    std::vector<double> bb(n), rhs(y), u(n, 0.0);
    double gamma = -b[0];
    for (int i = 0; i < n; ++i) bb[i] = b[i];
    bb[0] -= gamma;
    bb[n - 1] -= c[n - 1] * a[0] / gamma;
    u[0] = gamma;
    u[n - 1] = c[n - 1];
    auto thomas = [&](std::vector<double> d) {
        std::vector<double> cp(n), x(n);
        cp[0] = c[0] / bb[0];
        d[0] /= bb[0];
        for (int i = 1; i < n; ++i) {
            double m = bb[i] - a[i] * cp[i - 1];
            cp[i] = c[i] / m;
            d[i] = (d[i] - a[i] * d[i - 1]) / m;
        }
        x[n - 1] = d[n - 1];
        for (int i = n - 2; i >= 0; --i) x[i] = d[i] - cp[i] * x[i + 1];
        return x;
    };
    std::vector<double> x = thomas(rhs);
    std::vector<double> z = thomas(u);
    double fact = (x[0] + a[0] * x[n - 1] / gamma) /
                  (1.0 + z[0] + a[0] * z[n - 1] / gamma);
    for (int i = 0; i < n; ++i) x[i] -= fact * z[i];
    return x;
}

double spline_eval(const std::vector<double>& coef, double t) {
    const int n = static_cast<int>(coef.size());
    double ft = std::floor(t);
    double s = t - ft;
    int j0 = static_cast<int>(ft);
    double s2 = s * s, s3 = s2 * s;
    double w[4] = {(1 - 3 * s + 3 * s2 - s3) / 6.0, (4 - 6 * s2 + 3 * s3) / 6.0,
                   (1 + 3 * s + 3 * s2 - 3 * s3) / 6.0, s3 / 6.0};
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
        int j = (j0 - 1 + k) % n;
        if (j < 0) j += n;
        acc += w[k] * coef[j];
    }
    return acc;
}

}  // namespace

double MaterialLoop::max_spacing() const {
    const int m = size();
    double mx = 0.0;
    for (int k = 0; k < m; ++k) {
        int kn = (k + 1) % m;
        mx = std::max(mx, std::hypot(xs[kn] - xs[k], ys[kn] - ys[k]));
    }
    return mx;
}

double MaterialLoop::perimeter() const {
    const int m = size();
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
        int kn = (k + 1) % m;
        s += std::hypot(xs[kn] - xs[k], ys[kn] - ys[k]);
    }
    return s;
}

MaterialLoop make_circle_loop(double cx, double cy, double radius, int markers) {
    if (markers < 16)
        throw config_error("material loop needs at least 16 markers, got " +
                           std::to_string(markers));
    if (!(radius > 0.0)) throw config_error("material loop radius must be positive");
    MaterialLoop loop;
    loop.xs.resize(markers);
    loop.ys.resize(markers);
    for (int k = 0; k < markers; ++k) {
        double th = 2.0 * M_PI * k / markers;
        loop.xs[k] = cx + radius * std::cos(th);
        loop.ys[k] = cy + radius * std::sin(th);
    }
    return loop;
}

MaterialLoop resample_loop(const MaterialLoop& loop, double target_spacing) {
    const int m = loop.size();
    std::vector<double> cx = spline_coeffs(loop.xs);
    std::vector<double> cy = spline_coeffs(loop.ys);
    // fine polyline of the spline fit, then equal-arc-length redistribution
    const int fine = 16 * m;
    std::vector<double> fx(fine + 1), fy(fine + 1), arc(fine + 1, 0.0);
    for (int k = 0; k <= fine; ++k) {
        double t = static_cast<double>(k) * m / fine;
        fx[k] = spline_eval(cx, t);
        fy[k] = spline_eval(cy, t);
        if (k > 0)
            arc[k] = arc[k - 1] + std::hypot(fx[k] - fx[k - 1], fy[k] - fy[k - 1]);
    }
    double total = arc[fine];
    int mnew = std::max({16, m, static_cast<int>(std::ceil(total / target_spacing))});
    MaterialLoop out;
    out.xs.resize(mnew);
    out.ys.resize(mnew);
    int k = 0;
    for (int j = 0; j < mnew; ++j) {
        double s = total * j / mnew;
        while (k < fine - 1 && arc[k + 1] < s) ++k;
        double seg = arc[k + 1] - arc[k];
        double w = seg > 0.0 ? (s - arc[k]) / seg : 0.0;
        out.xs[j] = fx[k] + w * (fx[k + 1] - fx[k]);
        out.ys[j] = fy[k] + w * (fy[k + 1] - fy[k]);
    }
    return out;
}

}  // namespace aaee
