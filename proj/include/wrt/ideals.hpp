#ifndef WRT_IDEALS_HPP
#define WRT_IDEALS_HPP

#include <array>
#include <optional>
#include <vector>

#include "wrt/field_core.hpp"

namespace wrt {

// Nonzero ideal of O_K in canonical form {a, b + d*omega} with
// b < a, d | a, d | b, ad | N(b + d*omega).  norm = a*d.
struct Ideal {
    FieldPtr fc;
    Int a, b, d;

    const FieldCtx& ctx() const { return *fc; }
    Int norm() const { return a * d; }
    std::array<Int, 3> triple() const { return {a, b, d}; }
    QuadInt basis_u() const { return {a, Int(0)}; }
    QuadInt basis_v() const { return {b, d}; }
    bool operator==(const Ideal& o) const { return a == o.a && b == o.b && d == o.d; }
    bool operator!=(const Ideal& o) const { return !(*this == o); }
};

Ideal ideal_from_canonical(FieldPtr fc, Int a, Int b, Int d);
Ideal ideal_from_generator(FieldPtr fc, const QuadInt& x);
Ideal unit_ideal(FieldPtr fc);

// coordinates (m, n) with x = m*a + n*(b + d*omega), if x lies in the ideal
std::optional<std::pair<Int, Int>> try_coords(const Ideal& I, const QuadInt& x);
std::pair<Int, Int> coords_in(const Ideal& I, const QuadInt& x); // throws not_in_ideal
bool ideal_contains(const Ideal& I, const QuadInt& x);
// x in I extends to a Z-basis of I iff its coordinates are coprime
bool extends_to_basis(const Ideal& I, const QuadInt& x);

Ideal galois_conjugate(const Ideal& I);
bool is_galois_stable(const Ideal& I);
Ideal ideal_mul(const Ideal& I, const Ideal& J);

// Binary quadratic form A X^2 + B X Y + C Y^2 of discriminant disc(K)
// attached to the canonical basis: values are N(X*a + Y*(b+d*omega))/N(I).
struct NormForm {
    Int A, B, C;
    Int discriminant() const { return B * B - 4 * A * C; }
};

NormForm norm_form(const Ideal& I);

// min over nonzero x in I of |N(x)|, via the cycle of reduced forms
Int min_nonzero_abs_norm(const Ideal& I);

bool is_principal(const Ideal& I);
// canonical generator when principal (see canonical_associate)
std::optional<QuadInt> principal_generator(const Ideal& I);

// Associate x' = ±eps^k x with x' > 0 and sqrt|N| <= x' < eps*sqrt|N| under
// the identity embedding; boundary decisions are exact.
QuadInt canonical_associate(const FieldCtx& fc, QuadInt x);

std::vector<Ideal> ideals_of_norm(FieldPtr fc, const Int& n);
std::vector<Ideal> primitive_ideals_of_norm(FieldPtr fc, const Int& n); // d = 1

// One canonical representative per principal ideal (x) contained in I with
// |N(x)| <= bound and x primitive in I; folded under Galois conjugation when
// requested and I is Galois-stable.  Sorted by (|N(x)|, a, c).
std::vector<QuadInt> enumerate_principal_up_to_units(const Ideal& I, const Int& bound,
                                                     bool fold_galois);

} // namespace wrt

#endif
