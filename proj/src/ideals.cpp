#include "wrt/ideals.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>

namespace wrt {

namespace {

bool canonical_ok(const FieldCtx& fc, const Int& a, const Int& b, const Int& d) {
    if (sgn(a) <= 0 || sgn(d) <= 0 || sgn(b) < 0) return false;
    if (b >= a) return false;
    if (!divisible(a, d) || !divisible(b, d)) return false;
    Int nv = qi_norm(fc, QuadInt(b, d));
    return divisible(nv, a * d);
}

// HNF of the Z-span of the generators, as a canonical ideal triple.
Ideal ideal_from_gens(FieldPtr fc, const std::vector<QuadInt>& gens) {
    Int d = 0, wm = 0;
    for (const QuadInt& g : gens) {
        if (sgn(g.c) == 0) continue;
        Int s, t, dn;
        mpz_gcdext(dn.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), g.c.get_mpz_t());
        wm = s * wm + t * g.a;
        d = dn;
    }
    if (sgn(d) == 0) fail(errc::not_an_ideal, "generators do not span a rank-2 lattice");
    Int a = 0;
    for (const QuadInt& g : gens) a = gcd(a, g.a - exact_div(g.c, d) * wm);
    a = abs(a);
    if (sgn(a) == 0) fail(errc::not_an_ideal, "generators do not span a rank-2 lattice");
    Int b = mod_floor(wm, a);
    if (!canonical_ok(*fc, a, b, d)) fail(errc::not_an_ideal, "lattice is not an O_K ideal");
    return Ideal{std::move(fc), std::move(a), std::move(b), std::move(d)};
}

} // namespace

Ideal ideal_from_canonical(FieldPtr fc, Int a, Int b, Int d) {
    if (!canonical_ok(*fc, a, b, d)) fail(errc::not_an_ideal, "not a canonical ideal basis");
    return Ideal{std::move(fc), std::move(a), std::move(b), std::move(d)};
}

Ideal ideal_from_generator(FieldPtr fc, const QuadInt& x) {
    if (x.is_zero()) fail(errc::zero_element, "zero generates no ideal");
    QuadInt xw = qi_mul(*fc, x, QuadInt(Int(0), Int(1)));
    return ideal_from_gens(std::move(fc), {x, xw});
}

Ideal unit_ideal(FieldPtr fc) { return Ideal{std::move(fc), 1, 0, 1}; }

std::optional<std::pair<Int, Int>> try_coords(const Ideal& I, const QuadInt& x) {
    if (!divisible(x.c, I.d)) return std::nullopt;
    Int n = exact_div(x.c, I.d);
    Int rest = x.a - n * I.b;
    if (!divisible(rest, I.a)) return std::nullopt;
    return std::make_pair(exact_div(rest, I.a), n);
}

std::pair<Int, Int> coords_in(const Ideal& I, const QuadInt& x) {
    auto c = try_coords(I, x);
    if (!c) fail(errc::not_in_ideal, "element does not lie in the ideal");
    return *c;
}

bool ideal_contains(const Ideal& I, const QuadInt& x) { return try_coords(I, x).has_value(); }

bool extends_to_basis(const Ideal& I, const QuadInt& x) {
    auto [m, n] = coords_in(I, x);
    return gcd(m, n) == 1;
}

Ideal galois_conjugate(const Ideal& I) {
    return ideal_from_gens(I.fc, {qi_conj(I.ctx(), I.basis_u()), qi_conj(I.ctx(), I.basis_v())});
}

bool is_galois_stable(const Ideal& I) { return galois_conjugate(I) == I; }

Ideal ideal_mul(const Ideal& I, const Ideal& J) {
    if (I.norm() == 1) return J;
    if (J.norm() == 1) return I;
    const FieldCtx& fc = I.ctx();
    std::vector<QuadInt> gens;
    for (const QuadInt& x : {I.basis_u(), I.basis_v()})
        for (const QuadInt& y : {J.basis_u(), J.basis_v()}) gens.push_back(qi_mul(fc, x, y));
    Ideal M = ideal_from_gens(I.fc, gens);
    if (M.norm() != I.norm() * J.norm()) fail(errc::internal, "ideal product norm mismatch");
    return M;
}

NormForm norm_form(const Ideal& I) {
    const FieldCtx& fc = I.ctx();
    Int A = exact_div(I.a, I.d);
    Int B = 2 * exact_div(I.b, I.d) + fc.tr_omega;
    Int C = exact_div(qi_norm(fc, I.basis_v()), I.norm());
    return {A, B, C};
}

// ------------------------------------------------------ form reduction

namespace {

// (a, b, c) indefinite of discriminant disc, sd = floor(sqrt(disc)).
// Reduced means 0 < b < sqrt(disc) and sqrt(disc) - b < 2|a| < sqrt(disc) + b,
// decided exactly on integers since disc is never a square.

bool reduced_mpz(const Int& sd, const Int& a, const Int& b) {
    if (sgn(b) <= 0 || b > sd) return false;
    Int two_a = 2 * abs(a);
    return sd - b < two_a && two_a <= sd + b;
}

struct RhoStep {
    Int a, b, c;
    Int m; // the applied column operation parameter, (b + b')/(2c)
};

RhoStep rho_mpz(const Int& disc, const Int& sd, const Int& a, const Int& b, const Int& c) {
    Int t = abs(c);
    Int bn;
    if (t > sd) {
        bn = mod_floor(-b, 2 * t);
        if (bn > t) bn -= 2 * t;
    } else {
        bn = sd - mod_floor(sd + b, 2 * t);
    }
    Int cn = exact_div(bn * bn - disc, 4 * c);
    Int m = exact_div(b + bn, 2 * c);
    return {c, bn, cn, m};
}

struct CycleInfo {
    Int min_abs_a;
    bool has_unit;
};

constexpr long long kSmallLimit = 1LL << 40;

bool fits_small(const Int& x) { return x.fits_slong_p() && std::llabs(x.get_si()) < kSmallLimit; }

CycleInfo scan_cycle_small(long long disc, long long sd, long long a, long long b, long long c) {
    auto rho = [&](long long& A, long long& B, long long& C) {
        long long t = std::llabs(C);
        long long bn;
        if (t > sd) {
            bn = (-B) % (2 * t);
            if (bn < 0) bn += 2 * t;
            if (bn > t) bn -= 2 * t;
        } else {
            long long m = (sd + B) % (2 * t);
            if (m < 0) m += 2 * t;
            bn = sd - m;
        }
        __int128 num = (__int128)bn * bn - disc;
        long long cn = static_cast<long long>(num / ((__int128)4 * C));
        A = C;
        B = bn;
        C = cn;
    };
    auto is_red = [&](long long A, long long B) {
        if (B <= 0 || B > sd) return false;
        long long two_a = 2 * std::llabs(A);
        return sd - B < two_a && two_a <= sd + B;
    };
    long iter = 0;
    while (!is_red(a, b)) {
        rho(a, b, c);
        if (++iter > 2000000) fail(errc::internal, "form reduction did not terminate");
    }
    long long a0 = a, b0 = b, c0 = c;
    long long min_abs = std::llabs(a);
    bool unit = std::llabs(a) == 1;
    for (;;) {
        rho(a, b, c);
        min_abs = std::min(min_abs, std::llabs(a));
        unit = unit || std::llabs(a) == 1;
        if (a == a0 && b == b0 && c == c0) break;
        if (++iter > 10000000) fail(errc::internal, "form cycle did not close");
    }
    return {Int(static_cast<long>(min_abs)), unit};
}

CycleInfo scan_cycle(const FieldCtx& fc, NormForm f) {
    if (f.discriminant() != fc.disc) fail(errc::internal, "form discriminant mismatch");
    if (fits_small(fc.disc) && fits_small(f.A) && fits_small(f.B) && fits_small(f.C))
        return scan_cycle_small(fc.disc.get_si(), fc.sqrt_disc.get_si(), f.A.get_si(),
                                f.B.get_si(), f.C.get_si());
    Int a = f.A, b = f.B, c = f.C;
    long iter = 0;
    while (!reduced_mpz(fc.sqrt_disc, a, b)) {
        RhoStep s = rho_mpz(fc.disc, fc.sqrt_disc, a, b, c);
        a = s.a;
        b = s.b;
        c = s.c;
        if (++iter > 2000000) fail(errc::internal, "form reduction did not terminate");
    }
    Int a0 = a, b0 = b, c0 = c;
    Int min_abs = abs(a);
    bool unit = min_abs == 1;
    for (;;) {
        RhoStep s = rho_mpz(fc.disc, fc.sqrt_disc, a, b, c);
        a = s.a;
        b = s.b;
        c = s.c;
        Int aa = abs(a);
        if (aa < min_abs) min_abs = aa;
        unit = unit || aa == 1;
        if (a == a0 && b == b0 && c == c0) break;
        if (++iter > 10000000) fail(errc::internal, "form cycle did not close");
    }
    return {min_abs, unit};
}

} // namespace

Int min_nonzero_abs_norm(const Ideal& I) {
    return I.norm() * scan_cycle(I.ctx(), norm_form(I)).min_abs_a;
}

bool is_principal(const Ideal& I) { return scan_cycle(I.ctx(), norm_form(I)).has_unit; }

std::optional<QuadInt> principal_generator(const Ideal& I) {
    const FieldCtx& fc = I.ctx();
    if (!is_principal(I)) return std::nullopt;

    // Re-walk with the transformation tracked; the first column of U holds
    // the coordinates of a generator once the leading coefficient hits +-1.
    NormForm f = norm_form(I);
    Int a = f.A, b = f.B, c = f.C;
    Int u11 = 1, u21 = 0, u12 = 0, u22 = 1;
    auto step = [&]() {
        RhoStep s = rho_mpz(fc.disc, fc.sqrt_disc, a, b, c);
        a = s.a;
        b = s.b;
        c = s.c;
        // right-multiply U by [[0, -1], [1, m]]
        Int n12 = s.m * u12 - u11;
        Int n22 = s.m * u22 - u21;
        u11 = u12;
        u21 = u22;
        u12 = std::move(n12);
        u22 = std::move(n22);
    };
    long iter = 0;
    while (abs(a) != 1) {
        step();
        if (++iter > 12000000) fail(errc::internal, "principal generator walk did not terminate");
    }
    QuadInt g = qi_add(qi_scale(u11, I.basis_u()), qi_scale(u21, I.basis_v()));
    if (abs(qi_norm(fc, g)) != I.norm()) fail(errc::internal, "generator norm mismatch");
    return canonical_associate(fc, g);
}

QuadInt canonical_associate(const FieldCtx& fc, QuadInt x) {
    if (x.is_zero()) fail(errc::zero_element, "zero has no canonical associate");
    if (qi_sign_embed(fc, x) < 0) x = qi_neg(x);
    Int nabs = abs(qi_norm(fc, x));
    double k_est = std::floor((log_abs_embed(fc, x) - 0.5 * log_abs(nabs)) / fc.regulator);
    long k = static_cast<long>(k_est);
    const QuadInt& eps = fc.fund_unit;
    QuadInt eps_inv = qi_unit_inverse(fc, eps);
    if (k > 0)
        x = qi_mul(fc, x, qi_pow(fc, eps_inv, static_cast<unsigned long>(k)));
    else if (k < 0)
        x = qi_mul(fc, x, qi_pow(fc, eps, static_cast<unsigned long>(-k)));
    QuadInt nq(nabs, Int(0));
    QuadInt eps2n = qi_scale(nabs, qi_mul(fc, eps, eps));
    int guard = 0;
    while (qi_cmp_embed(fc, qi_mul(fc, x, x), nq) < 0) {
        x = qi_mul(fc, x, eps);
        if (++guard > 10000) fail(errc::internal, "canonical_associate: no convergence");
    }
    while (qi_cmp_embed(fc, qi_mul(fc, x, x), eps2n) >= 0) {
        x = qi_mul(fc, x, eps_inv);
        if (++guard > 10000) fail(errc::internal, "canonical_associate: no convergence");
    }
    return x;
}

std::vector<Ideal> ideals_of_norm(FieldPtr fc, const Int& n) {
    std::vector<Ideal> out;
    if (n < 1) return out;
    for (Int d = 1; d * d <= n; ++d) {
        if (!divisible(n, d * d)) continue;
        Int a = exact_div(n, d);
        for (Int b = 0; b < a; b += d) {
            if (divisible(qi_norm(*fc, QuadInt(b, d)), n)) out.push_back(Ideal{fc, a, b, d});
        }
    }
    return out;
}

std::vector<Ideal> primitive_ideals_of_norm(FieldPtr fc, const Int& n) {
    std::vector<Ideal> out;
    if (n < 1) return out;
    const FieldCtx& f = *fc;
    if (n.fits_slong_p() && f.norm_omega.fits_slong_p() &&
        std::llabs(f.norm_omega.get_si()) < (1LL << 40) && n.get_si() < (1LL << 20)) {
        long long nn = n.get_si(), t = f.tr_omega, nw = f.norm_omega.get_si();
        for (long long b = 0; b < nn; ++b) {
            long long v = (b % nn) * ((b + t) % nn) % nn + nw % nn;
            if (v % nn == 0)
                out.push_back(Ideal{fc, Int(static_cast<long>(nn)), Int(static_cast<long>(b)), Int(1)});
        }
        return out;
    }
    for (Int b = 0; b < n; ++b)
        if (divisible(qi_norm(f, QuadInt(b, Int(1))), n)) out.push_back(Ideal{fc, n, b, Int(1)});
    return out;
}

std::vector<QuadInt> enumerate_principal_up_to_units(const Ideal& I, const Int& bound,
                                                     bool fold_galois) {
    std::vector<QuadInt> out;
    const Int nI = I.norm();
    if (bound < nI) return out;
    bool fold = fold_galois && is_galois_stable(I);
    Int max_jn = fdiv(bound, nI);
    const FieldCtx& fc = I.ctx();
    std::vector<std::pair<Int, QuadInt>> found; // (|N(x)|, x)
    for (Int n = 1; n <= max_jn; ++n) {
        for (const Ideal& J : primitive_ideals_of_norm(I.fc, n)) {
            if (fold) {
                Ideal Jc = galois_conjugate(J);
                if (J.triple() < Jc.triple()) continue; // partner will be emitted
            }
            Ideal M = ideal_mul(I, J);
            auto g = principal_generator(M);
            if (!g) continue;
            if (!extends_to_basis(I, *g)) fail(errc::internal, "representative not primitive");
            found.emplace_back(abs(qi_norm(fc, *g)), *g);
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
        return std::tie(l.first, l.second.a, l.second.c) < std::tie(r.first, r.second.a, r.second.c);
    });
    out.reserve(found.size());
    for (auto& p : found) out.push_back(std::move(p.second));
    return out;
}

} // namespace wrt
