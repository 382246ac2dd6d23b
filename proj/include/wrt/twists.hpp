#ifndef WRT_TWISTS_HPP
#define WRT_TWISTS_HPP

#include <utility>
#include <vector>

#include "wrt/ideals.hpp"

namespace wrt {

struct BasisPair {
    Ideal ideal;
    QuadInt x, y;
};

enum class TwistKind { orthogonal, hexagonal, generic };

const char* twist_kind_name(TwistKind k);

// One similarity class of well-rounded twists, keyed by the exact integer
// f4 = 4(N(x)^2 + N(x)N(y) + N(y)^2) - N(I)^2 disc.
struct TwistClass {
    Int f4;
    Rat cos_theta;
    TwistKind kind;
    BasisPair witness;
    QuadRat beta; // alpha^4 as an exact element of K
    double alpha;
};

Int f4_value(const BasisPair& b);
// {x, y} is a Z-basis of the ideal (coordinate determinant +-1)
bool is_basis_pair(const BasisPair& b);
bool is_good_basis(const BasisPair& b);
// exact (N(x) + N(y)) / Tr(x * conj(y)); requires a good basis
Rat cos_theta(const BasisPair& b);
// beta = (conj(y)^2 - conj(x)^2)/(x^2 - y^2) > 0 and alpha = beta^(1/4)
std::pair<QuadRat, double> beta_and_alpha(const BasisPair& b);

// All good bases {x, y} of I containing x, up to equivalence (at most two).
// Returns empty when N(x)^2 > N(I)^2 disc / 3.
std::vector<BasisPair> extend_to_good_bases(const Ideal& I, const QuadInt& x);

// largest n with 3 n^2 <= N(I)^2 disc
Int twist_enumeration_bound(const Ideal& I);

struct TwistSet {
    std::vector<TwistClass> classes;
    std::size_t principal_count; // |P| of the enumerated principal-ideal list
};

TwistSet well_rounded_twists(const Ideal& I);
// complete w(Lambda_I), sorted by |cos theta| descending
std::vector<TwistClass> all_well_rounded_twists(const Ideal& I);

// the unique good basis {1, b + omega} of O_K and its cos theta (closed form)
std::pair<BasisPair, Rat> good_basis_with_one(FieldPtr fc);

// packing radius (1/2) (1 - cos^2)^(-1/4) at unit covolume; |cos| <= 1/2
double sphere_packing_radius(const Rat& cos_theta);

TwistClass make_twist_class(const BasisPair& b);

} // namespace wrt

#endif
