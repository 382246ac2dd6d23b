#ifndef WRT_GEODESIC_HPP
#define WRT_GEODESIC_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "wrt/ideals.hpp"

namespace wrt {

struct UhpPoint {
    double x{0};
    double y{1};
};

// Embedded basis {[a c]^T, [b d]^T} with ad - bc > 0.
struct EmbeddedBasis {
    double a, b, c, d;
};

EmbeddedBasis embedded_basis(const Ideal& I);

// tau(Lambda, alpha) = ((ab a^4 + cd)/(a^2 a^4 + c^2), a^2 (ad-bc)/(a^2 a^4 + c^2))
UhpPoint tau(const EmbeddedBasis& basis, double alpha);
// same with alpha = exp(s); safe for large |s|
UhpPoint tau_log(const EmbeddedBasis& basis, double s);

UhpPoint reduce_to_fundamental_domain(UhpPoint z);

struct ReduceResult {
    UhpPoint z;
    long long m11, m12, m21, m22; // z_reduced = (m11 z + m12)/(m21 z + m22)
};

ReduceResult reduce_with_matrix(UhpPoint z);
UhpPoint mobius(const ReduceResult& m, UhpPoint z);

// log of the closure window w: alpha in [1, w] traces the closed geodesic.
// Starts from eps^(1/2) and doubles until the reduced curve closes.
double closure_log_window(const Ideal& I);

struct GeodesicSample {
    double alpha, x, y, dist_to_arc;
};

std::vector<GeodesicSample> sample_geodesic(const Ideal& I, int n);
void write_geodesic_csv(std::ostream& os, const std::vector<GeodesicSample>& samples);

// |x| values of the crossings of the well-rounded locus over one period,
// refined by bisection, deduplicated, sorted descending
std::vector<double> crossing_cosines(const Ideal& I, int n);

} // namespace wrt

#endif
