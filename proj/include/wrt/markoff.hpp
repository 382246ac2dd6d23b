#ifndef WRT_MARKOFF_HPP
#define WRT_MARKOFF_HPP

#include <array>
#include <vector>

#include "wrt/twists.hpp"

namespace wrt {

// Solution a <= b <= c of a^2 + b^2 + c^2 = 3abc.
struct MarkoffTriple {
    Int a, b, c;
    bool operator==(const MarkoffTriple& o) const { return a == o.a && b == o.b && c == o.c; }
};

// All triples with c <= max_c, from (1,1,1) by Vieta moves, sorted by (c, b, a).
std::vector<MarkoffTriple> markoff_tree(const Int& max_c);

bool is_markoff_triple(const MarkoffTriple& t);

// Markoff ideal I_c in K = Q(sqrt(9c^2-4)) for odd c: a k = b (mod c),
// k^2 + 1 = l c, canonical basis (c, k -+ (c+-1)/2 + omega).
struct MarkoffIdealData {
    MarkoffTriple triple;
    Int k, ell;
    FieldPtr field;
    Ideal ideal;
};

MarkoffIdealData markoff_ideal(const MarkoffTriple& t); // throws even_c

// The two good bases {c, beta_i c + k + (c-1)/2 + omega} extending c, with
// beta_i = floor((-2k +- sqrt(6c^2-4)) / (2c)) and closed-form cosines.
struct MarkoffGoodBases {
    MarkoffIdealData data;
    Int beta1, beta2;
    BasisPair basis1, basis2;
    Rat cos1, cos2;
};

MarkoffGoodBases markoff_good_bases(const MarkoffTriple& t); // throws even_c, c_one

// (1, F_{2n-1}, F_{2n+1}) with odd c, first `count` members
std::vector<MarkoffTriple> fibonacci_triples(int count);
// (2, P_{2n-2}, P_{2n}) starting at (2, 5, 29), first `count` members
std::vector<MarkoffTriple> pell_triples(int count);

// {0, (6-4 sqrt 5)/11, (3-sqrt 2)/7, (15-11 sqrt 2)/17}
std::array<double, 4> limiting_cosines();

struct MarkoffMpd {
    Int min_norm;
    double n_lambda;      // min_norm / (c sqrt(disc))
    bool meets_s_hat;     // n_lambda == S_K / sqrt(disc), decided exactly
};

MarkoffMpd markoff_mpd(const MarkoffTriple& t); // throws even_c

} // namespace wrt

#endif
