#include "wrt/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "wrt/errors.hpp"

namespace wrt {

EmbeddedBasis embedded_basis(const Ideal& I) {
    // columns psi(v), psi(u): det = v u~ - u v~ = N(I) sqrt(disc) > 0
    auto [v1, v2] = embed(I.ctx(), I.basis_v());
    auto [u1, u2] = embed(I.ctx(), I.basis_u());
    return {v1, u1, v2, u2};
}

UhpPoint tau(const EmbeddedBasis& B, double alpha) {
    if (!(alpha > 0)) fail(errc::bad_input, "alpha must be positive");
    return tau_log(B, std::log(alpha));
}

UhpPoint tau_log(const EmbeddedBasis& B, double s) {
    double det = B.a * B.d - B.b * B.c;
    if (!(det > 0)) fail(errc::degenerate_basis, "basis must have positive determinant");
    double x, y;
    if (s >= 0) {
        double u = std::exp(-2.0 * s); // alpha^(-2), in (0, 1]
        double den = B.a * B.a + B.c * B.c * u * u;
        x = (B.a * B.b + B.c * B.d * u * u) / den;
        y = det * u / den;
    } else {
        double t = std::exp(2.0 * s); // alpha^2, in (0, 1)
        double den = B.a * B.a * t * t + B.c * B.c;
        x = (B.a * B.b * t * t + B.c * B.d) / den;
        y = det * t / den;
    }
    if (!(y > 0)) fail(errc::degenerate_basis, "tau left the upper half-plane");
    return {x, y};
}

ReduceResult reduce_with_matrix(UhpPoint z) {
    if (!(z.y > 0)) fail(errc::bad_input, "point must lie in the upper half-plane");
    ReduceResult r{z, 1, 0, 0, 1};
    for (int iter = 0; iter < 20000; ++iter) {
        double shift = std::ceil(r.z.x - 0.5); // maps x into (-1/2, 1/2]
        if (shift != 0) {
            r.z.x -= shift;
            long long k = static_cast<long long>(shift);
            r.m11 -= k * r.m21;
            r.m12 -= k * r.m22;
        }
        double n2 = r.z.x * r.z.x + r.z.y * r.z.y;
        if (n2 >= 1.0) break;
        // z -> -1/z
        r.z = {-r.z.x / n2, r.z.y / n2};
        long long a = r.m11, b = r.m12;
        r.m11 = -r.m21;
        r.m12 = -r.m22;
        r.m21 = a;
        r.m22 = b;
    }
    // canonicalize the boundary arc to x >= 0
    double n2 = r.z.x * r.z.x + r.z.y * r.z.y;
    if (std::fabs(n2 - 1.0) <= 1e-12 && r.z.x < 0) r.z.x = -r.z.x;
    if (std::fabs(r.z.x + 0.5) <= 1e-12) r.z.x = 0.5;
    return r;
}

UhpPoint reduce_to_fundamental_domain(UhpPoint z) { return reduce_with_matrix(z).z; }

UhpPoint mobius(const ReduceResult& m, UhpPoint z) {
    double a = static_cast<double>(m.m11), b = static_cast<double>(m.m12);
    double c = static_cast<double>(m.m21), d = static_cast<double>(m.m22);
    double den = (c * z.x + d) * (c * z.x + d) + c * c * z.y * z.y;
    double x = ((a * z.x + b) * (c * z.x + d) + a * c * z.y * z.y) / den;
    double y = z.y / den; // det = +1 for all reduction matrices
    return {x, y};
}

namespace {

bool points_close(UhpPoint p, UhpPoint q, double tol) {
    return std::fabs(p.x - q.x) <= tol && std::fabs(p.y - q.y) <= tol;
}

bool window_closes(const EmbeddedBasis& B, double L, double tol) {
    for (int j = 1; j <= 8; ++j) {
        double s = L * (0.06180339887 + 0.11234567 * j);
        UhpPoint p = reduce_to_fundamental_domain(tau_log(B, s));
        UhpPoint q = reduce_to_fundamental_domain(tau_log(B, s + L));
        if (!points_close(p, q, tol)) return false;
    }
    return true;
}

} // namespace

double closure_log_window(const Ideal& I) {
    EmbeddedBasis B = embedded_basis(I);
    double R = I.ctx().regulator;
    double L = R / 2.0;
    for (int attempt = 0; attempt < 2; ++attempt) {
        if (window_closes(B, L, 1e-6)) return L;
        L *= 2.0;
    }
    // alpha-period eps^2 always closes: diag(eps^2, conj(eps)^2) Lambda = Lambda
    return 2.0 * R;
}

std::vector<GeodesicSample> sample_geodesic(const Ideal& I, int n) {
    if (n < 2) fail(errc::bad_input, "need at least two samples");
    EmbeddedBasis B = embedded_basis(I);
    double L = closure_log_window(I);
    std::vector<GeodesicSample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double s = L * static_cast<double>(j) / static_cast<double>(n - 1);
        UhpPoint p = reduce_to_fundamental_domain(tau_log(B, s));
        double dist = std::hypot(p.x, p.y) - 1.0;
        out.push_back({std::exp(s), p.x, p.y, dist});
    }
    return out;
}

void write_geodesic_csv(std::ostream& os, const std::vector<GeodesicSample>& samples) {
    os << "alpha,x,y,dist_to_arc\n";
    char buf[160];
    for (const GeodesicSample& s : samples) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", s.alpha, s.x, s.y,
                      s.dist_to_arc);
        os << buf;
    }
}

std::vector<double> crossing_cosines(const Ideal& I, int n) {
    if (n < 16) fail(errc::bad_input, "need at least 16 samples");
    EmbeddedBasis B = embedded_basis(I);
    double L = closure_log_window(I);
    std::vector<double> found;

    auto circle_gap = [&](const ReduceResult& M, double s) {
        UhpPoint p = mobius(M, tau_log(B, s));
        return p.x * p.x + p.y * p.y - 1.0;
    };

    for (int j = 0; j < n; ++j) {
        double s0 = L * static_cast<double>(j) / static_cast<double>(n);
        double s1 = L * static_cast<double>(j + 1) / static_cast<double>(n);
        ReduceResult M = reduce_with_matrix(tau_log(B, s0));
        double g1 = circle_gap(M, s1);
        if (g1 >= -1e-13) continue;
        // the frozen-matrix image exits through the circle: bisect
        double lo = s0, hi = s1;
        for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
            double mid = 0.5 * (lo + hi);
            if (circle_gap(M, mid) >= 0)
                lo = mid;
            else
                hi = mid;
        }
        UhpPoint q = reduce_to_fundamental_domain(tau_log(B, 0.5 * (lo + hi)));
        // keep genuine touches of the bottom arc only
        if (std::fabs(q.x * q.x + q.y * q.y - 1.0) > 1e-7) continue;
        found.push_back(std::fabs(q.x));
    }

    std::sort(found.begin(), found.end(), std::greater<>());
    std::vector<double> out;
    for (double v : found)
        if (out.empty() || std::fabs(out.back() - v) > 1e-7) out.push_back(v);
    return out;
}

} // namespace wrt
