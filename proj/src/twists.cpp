#include "wrt/twists.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wrt {

const char* twist_kind_name(TwistKind k) {
    switch (k) {
        case TwistKind::orthogonal: return "orthogonal";
        case TwistKind::hexagonal: return "hexagonal";
        case TwistKind::generic: return "generic";
    }
    return "?";
}

Int f4_value(const BasisPair& b) {
    const FieldCtx& fc = b.ideal.ctx();
    Int nx = qi_norm(fc, b.x);
    Int ny = qi_norm(fc, b.y);
    Int ni = b.ideal.norm();
    return 4 * (nx * nx + nx * ny + ny * ny) - ni * ni * fc.disc;
}

bool is_basis_pair(const BasisPair& b) {
    auto cx = try_coords(b.ideal, b.x);
    auto cy = try_coords(b.ideal, b.y);
    if (!cx || !cy) return false;
    Int det = cx->first * cy->second - cy->first * cx->second;
    return det == 1 || det == -1;
}

bool is_good_basis(const BasisPair& b) { return is_basis_pair(b) && sgn(f4_value(b)) <= 0; }

Rat cos_theta(const BasisPair& b) {
    if (!is_good_basis(b)) fail(errc::not_good_basis, "cos_theta requires a good basis");
    const FieldCtx& fc = b.ideal.ctx();
    Int num = qi_norm(fc, b.x) + qi_norm(fc, b.y);
    Int den = qi_trace(fc, qi_mul(fc, b.x, qi_conj(fc, b.y)));
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::pair<QuadRat, double> beta_and_alpha(const BasisPair& b) {
    const FieldCtx& fc = b.ideal.ctx();
    QuadInt xb = qi_conj(fc, b.x), yb = qi_conj(fc, b.y);
    QuadInt num = qi_sub(qi_mul(fc, yb, yb), qi_mul(fc, xb, xb));
    QuadInt den = qi_sub(qi_mul(fc, b.x, b.x), qi_mul(fc, b.y, b.y));
    if (den.is_zero()) fail(errc::not_twistable, "x = +-y is not a basis");
    QuadRat beta = qr_div(fc, num, den);
    if (qr_sign_embed(fc, beta) <= 0) fail(errc::not_twistable, "beta <= 0");
    double bv = log_abs_embed(fc, beta.num) - log_abs(beta.den);
    double alpha = std::exp(bv / 4.0);
    return {beta, alpha};
}

Int twist_enumeration_bound(const Ideal& I) {
    Int ni = I.norm();
    Int lim = ni * ni * I.ctx().disc; // want largest n with 3 n^2 <= lim
    Int n = isqrt(lim / 3);
    while (3 * (n + 1) * (n + 1) <= lim) ++n;
    while (3 * n * n > lim) --n;
    return n;
}

namespace {

// Integers congruent to r mod a inside [lo, hi] (exact surd interval
// endpoints).  The intervals here have width exactly a (or 1 in the a = 0
// case), so there are one or two candidates.
std::vector<Int> candidates_in_interval(const Surd& lo, const Surd& hi, const Int& r, const Int& a) {
    std::vector<Int> out;
    Int first = surd_ceil(lo);
    Int last = surd_floor(hi);
    Int b = first + mod_floor(r - first, a);
    for (; b <= last; b += a) out.push_back(b);
    return out;
}

struct Interval {
    Surd lo, hi;
};

} // namespace

std::vector<BasisPair> extend_to_good_bases(const Ideal& I, const QuadInt& x) {
    const FieldCtx& fc = I.ctx();
    auto [A, C] = coords_in(I, x); // throws not_in_ideal
    if (x.is_zero() || gcd(A, C) != 1) fail(errc::not_primitive, "x does not extend to a basis");

    Int nI = I.norm();
    Int nx = qi_norm(fc, x);
    Int delta = nI * nI * fc.disc - 3 * nx * nx;
    std::vector<BasisPair> result;
    if (sgn(delta) < 0) return result;

    QuadInt u = I.basis_u(), v = I.basis_v();
    Int T = qi_trace(fc, qi_mul(fc, u, qi_conj(fc, v)));
    Int nv = qi_norm(fc, v);

    std::vector<std::pair<Int, BasisPair>> hits; // (f4, pair), discovery order
    auto try_candidate = [&](const QuadInt& y) {
        BasisPair bp{I, x, y};
        Int f4 = f4_value(bp);
        if (sgn(f4) > 0) return;
        for (const auto& h : hits)
            if (h.first == f4) return;
        hits.emplace_back(std::move(f4), std::move(bp));
    };

    if (sgn(A) == 0) {
        // x = +-v; solve for d in {v, u + d v}, two width-1 intervals
        const Int& N = nv;
        Int den = 2 * N;
        Interval J1{Surd(-(T + N), -1, delta, den), Surd(-(T - N), -1, delta, den)};
        Interval J2{Surd(-(T + N), 1, delta, den), Surd(-(T - N), 1, delta, den)};
        if (surd_cmp(J2.lo, J1.lo) < 0) std::swap(J1, J2);
        for (const Interval& J : {J1, J2})
            for (const Int& d : candidates_in_interval(J.lo, J.hi, Int(0), Int(1)))
                try_candidate(qi_add(u, qi_scale(d, v)));
    } else {
        Int a = A, c = C;
        if (sgn(a) < 0) {
            a = -a;
            c = -c;
        }
        // residue class of b making d = (1 + b c)/a integral
        Int r = 0;
        if (a != 1) r = mod_floor(-mod_inverse(mod_floor(c, a), a), a);
        Int den = 2 * nx;
        Int n1 = -(a * (T + nx) + 2 * c * nv);
        Int n2 = -(a * (T - nx) + 2 * c * nv);
        Interval J1{Surd(n1, -a, delta, den), Surd(n2, -a, delta, den)};
        Interval J2{Surd(n1, a, delta, den), Surd(n2, a, delta, den)};
        if (surd_cmp(J2.lo, J1.lo) < 0) std::swap(J1, J2);
        for (const Interval& J : {J1, J2}) {
            for (const Int& b : candidates_in_interval(J.lo, J.hi, r, a)) {
                Int d = exact_div(1 + b * c, a);
                try_candidate(qi_add(qi_scale(b, u), qi_scale(d, v)));
            }
        }
    }

    if (hits.size() > 2) fail(errc::internal, "more than two good bases found");
    result.reserve(hits.size());
    for (auto& h : hits) result.push_back(std::move(h.second));
    return result;
}

TwistClass make_twist_class(const BasisPair& b) {
    TwistClass tc;
    tc.f4 = f4_value(b);
    tc.cos_theta = cos_theta(b);
    if (sgn(tc.cos_theta.get_num()) == 0)
        tc.kind = TwistKind::orthogonal;
    else if (sgn(tc.f4) == 0)
        tc.kind = TwistKind::hexagonal;
    else
        tc.kind = TwistKind::generic;
    auto [beta, alpha] = beta_and_alpha(b);
    tc.witness = b;
    tc.beta = beta;
    tc.alpha = alpha;
    return tc;
}

TwistSet well_rounded_twists(const Ideal& I) {
    Int bound = twist_enumeration_bound(I);
    std::vector<QuadInt> reps = enumerate_principal_up_to_units(I, bound, true);
    std::map<Int, TwistClass> by_f4;
    for (const QuadInt& x : reps) {
        for (const BasisPair& bp : extend_to_good_bases(I, x)) {
            Int key = f4_value(bp);
            if (!by_f4.count(key)) by_f4.emplace(key, make_twist_class(bp));
        }
    }
    TwistSet out;
    out.principal_count = reps.size();
    out.classes.reserve(by_f4.size());
    for (auto& [k, tc] : by_f4) out.classes.push_back(std::move(tc));
    std::sort(out.classes.begin(), out.classes.end(), [](const TwistClass& l, const TwistClass& r) {
        return abs(l.cos_theta) > abs(r.cos_theta);
    });
    if (out.classes.size() > 2 * out.principal_count)
        fail(errc::internal, "|w(Lambda)| exceeds 2 |P|");
    return out;
}

std::vector<TwistClass> all_well_rounded_twists(const Ideal& I) {
    return well_rounded_twists(I).classes;
}

std::pair<BasisPair, Rat> good_basis_with_one(FieldPtr fc) {
    const FieldCtx& f = *fc;
    // b = floor((1 - Tr(omega) - sqrt(disc - 3)) / 2)
    Int b = surd_floor(Surd(1 - f.tr_omega, -1, f.disc - 3, 2));
    BasisPair bp{unit_ideal(fc), QuadInt(Int(1), Int(0)), QuadInt(b, Int(1))};
    Rat cos;
    if (f.tr_omega == 1)
        cos = Rat(b * b + b + exact_div(5 - f.D, Int(4)), 2 * b + 1);
    else
        cos = Rat(b * b + 1 - f.D, 2 * b);
    cos.canonicalize();
    return {bp, cos};
}

double sphere_packing_radius(const Rat& cos) {
    Rat c2 = cos * cos;
    if (cmp(c2, Rat(1, 4)) > 0) fail(errc::out_of_range, "|cos theta| must be at most 1/2");
    double v = to_double(c2);
    return 0.5 / std::pow(1.0 - v, 0.25);
}

} // namespace wrt
