#include "wrt/field_core.hpp"

#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace wrt {

// ---------------------------------------------------------------- Surd

Surd::Surd(Int p_, Int q_, Int n_, Int r_) : p(std::move(p_)), q(std::move(q_)), n(std::move(n_)), r(std::move(r_)) {
    if (sgn(r) == 0) fail(errc::bad_input, "Surd: zero denominator");
    if (sgn(n) < 0) fail(errc::bad_input, "Surd: negative radicand");
    if (sgn(r) < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    if (sgn(q) == 0) {
        n = 0;
    } else if (is_perfect_square(n)) {
        p += q * isqrt(n);
        q = 0;
        n = 0;
    }
    Int g = gcd(gcd(abs(p), abs(q)), r);
    if (g > 1) {
        p = exact_div(p, g);
        q = exact_div(q, g);
        r = exact_div(r, g);
    }
}

int Surd::sign() const {
    // sign of p + q*sqrt(n); when reaching the mixed case n is not a square
    if (sgn(q) == 0) return sgn(p);
    if (sgn(p) == 0) return sgn(q);
    if (sgn(p) > 0 && sgn(q) > 0) return 1;
    if (sgn(p) < 0 && sgn(q) < 0) return -1;
    Int lhs = p * p;
    Int rhs = q * q * n;
    int c = cmp(lhs, rhs);
    if (sgn(p) > 0) return c > 0 ? 1 : -1; // q < 0
    return c < 0 ? 1 : -1;                 // p < 0, q > 0
}

Int surd_floor(const Surd& s) {
    // floor((p + q*sqrt(n))/r) = fdiv(p + floor(q*sqrt(n)), r) for r > 0
    Int fq;
    if (sgn(s.q) == 0) {
        fq = 0;
    } else {
        Int m = s.q * s.q * s.n;
        Int t = isqrt(m);
        if (sgn(s.q) > 0) {
            fq = t;
        } else {
            fq = (t * t == m) ? Int(-t) : Int(-t - 1);
        }
    }
    return fdiv(s.p + fq, s.r);
}

Int surd_ceil(const Surd& s) { return -surd_floor(Surd(-s.p, -s.q, s.n, s.r)); }

int surd_cmp(const Surd& s, const Surd& t) {
    Int n = s.n;
    if (sgn(s.q) == 0) {
        n = t.n;
    } else if (sgn(t.q) != 0 && s.n != t.n) {
        fail(errc::bad_input, "surd_cmp: incompatible radicands");
    }
    Int A = s.p * t.r - t.p * s.r;
    Int B = s.q * t.r - t.q * s.r;
    if (sgn(B) == 0) return sgn(A);
    return Surd(A, B, n, 1).sign();
}

// ---------------------------------------------------------------- QuadInt

Int qi_norm(const FieldCtx& fc, const QuadInt& x) {
    return x.a * x.a + x.a * x.c * fc.tr_omega + x.c * x.c * fc.norm_omega;
}

Int qi_trace(const FieldCtx& fc, const QuadInt& x) { return 2 * x.a + fc.tr_omega * x.c; }

QuadInt qi_conj(const FieldCtx& fc, const QuadInt& x) { return {x.a + fc.tr_omega * x.c, -x.c}; }

QuadInt qi_mul(const FieldCtx& fc, const QuadInt& x, const QuadInt& y) {
    // omega^2 = Tr(omega)*omega - N(omega)
    Int cc = x.c * y.c;
    return {x.a * y.a - cc * fc.norm_omega, x.a * y.c + x.c * y.a + cc * fc.tr_omega};
}

QuadInt qi_pow(const FieldCtx& fc, const QuadInt& x, unsigned long k) {
    QuadInt result(1, 0);
    QuadInt base = x;
    while (k > 0) {
        if (k & 1) result = qi_mul(fc, result, base);
        base = qi_mul(fc, base, base);
        k >>= 1;
    }
    return result;
}

QuadInt qi_unit_inverse(const FieldCtx& fc, const QuadInt& u) {
    Int nu = qi_norm(fc, u);
    if (nu != 1 && nu != -1) fail(errc::bad_input, "qi_unit_inverse: not a unit");
    QuadInt v = qi_conj(fc, u);
    return nu == 1 ? v : qi_neg(v);
}

Surd qi_surd(const FieldCtx& fc, const QuadInt& x, bool conjugate) {
    Int c = conjugate ? Int(-x.c) : x.c;
    if (fc.tr_omega == 1) return Surd(2 * x.a + (conjugate ? x.c : c), c, fc.D, 2);
    return Surd(x.a, c, fc.D, 1);
}

int qi_sign_embed(const FieldCtx& fc, const QuadInt& x, bool conjugate) {
    return qi_surd(fc, x, conjugate).sign();
}

int qi_cmp_embed(const FieldCtx& fc, const QuadInt& x, const QuadInt& y) {
    return qi_sign_embed(fc, qi_sub(x, y));
}

std::pair<double, double> embed(const FieldCtx& fc, const QuadInt& x) {
    double a = to_double(x.a), c = to_double(x.c);
    return {a + c * fc.omega1, a + c * fc.omega2};
}

double log_abs_embed(const FieldCtx& fc, const QuadInt& x, bool conjugate) {
    if (x.is_zero()) fail(errc::bad_input, "log_abs_embed: zero element");
    double w = conjugate ? fc.omega2 : fc.omega1;
    auto [da, ea] = to_double_2exp(x.a);
    auto [dc, ec] = to_double_2exp(x.c);
    long e = std::max(ea, ec);
    double v = da * std::ldexp(1.0, static_cast<int>(ea - e)) + dc * w * std::ldexp(1.0, static_cast<int>(ec - e));
    double scale = std::max(std::fabs(da), std::fabs(dc) * std::fabs(w));
    if (sgn(x.c) == 0) return log_abs(x.a);
    if (sgn(x.a) == 0) return log_abs(x.c) + std::log(std::fabs(w));
    if (std::fabs(v) > 1e-9 * scale)
        return std::log(std::fabs(v)) + static_cast<double>(e) * M_LN2;
    // catastrophic cancellation: this embedding is tiny, go through the norm
    return log_abs(qi_norm(fc, x)) - log_abs_embed(fc, x, !conjugate);
}

std::string qi_str(const QuadInt& x) {
    std::ostringstream os;
    if (sgn(x.c) == 0) {
        os << x.a;
        return os.str();
    }
    if (sgn(x.a) != 0) os << x.a << (sgn(x.c) > 0 ? " + " : " - ");
    else if (sgn(x.c) < 0) os << "-";
    Int c = abs(x.c);
    if (c != 1) os << c << "*";
    os << "w";
    return os.str();
}

// ---------------------------------------------------------------- QuadRat

QuadRat qr_make(QuadInt num, Int den) {
    if (sgn(den) == 0) fail(errc::bad_input, "QuadRat: zero denominator");
    if (sgn(den) < 0) {
        num = qi_neg(num);
        den = -den;
    }
    Int g = gcd(gcd(abs(num.a), abs(num.c)), den);
    if (g > 1) {
        num.a = exact_div(num.a, g);
        num.c = exact_div(num.c, g);
        den = exact_div(den, g);
    }
    return {std::move(num), std::move(den)};
}

QuadRat qr_div(const FieldCtx& fc, const QuadInt& p, const QuadInt& q) {
    if (q.is_zero()) fail(errc::bad_input, "qr_div: division by zero");
    return qr_make(qi_mul(fc, p, qi_conj(fc, q)), qi_norm(fc, q));
}

Surd qr_surd(const FieldCtx& fc, const QuadRat& x, bool conjugate) {
    Surd s = qi_surd(fc, x.num, conjugate);
    return Surd(s.p, s.q, s.n, s.r * x.den);
}

int qr_sign_embed(const FieldCtx& fc, const QuadRat& x, bool conjugate) {
    return qr_surd(fc, x, conjugate).sign();
}

std::pair<double, double> qr_embed(const FieldCtx& fc, const QuadRat& x) {
    auto [v1, v2] = embed(fc, x.num);
    double d = to_double(x.den);
    return {v1 / d, v2 / d};
}

std::string qr_str(const QuadRat& x) {
    std::ostringstream os;
    if (x.den == 1) {
        os << qi_str(x.num);
    } else {
        os << "(" << qi_str(x.num) << ")/" << x.den;
    }
    return os.str();
}

// ------------------------------------------------------- fundamental unit

namespace {

struct Mat2 {
    Int m[2][2];
    static Mat2 identity() { return {{{1, 0}, {0, 1}}}; }
};

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
    return r;
}

// Fundamental unit of O_K from the continued fraction of omega.  States
// (P, Q) of the complete quotients (P + sqrt(D))/Q repeat; the product of
// the partial-quotient matrices over one minimal period is the fundamental
// automorphism of the module [1, omega] = O_K.
QuadInt fundamental_unit_cf(const FieldCtx& fc) {
    Int P = fc.tr_omega == 1 ? Int(1) : Int(0);
    Int Q = fc.tr_omega == 1 ? Int(2) : Int(1);

    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::vector<Int> quotients;
    std::vector<std::pair<Int, Int>> states;

    std::size_t first = 0;
    for (;;) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            first = it->second;
            break;
        }
        seen.emplace(key, states.size());
        states.push_back(key);
        Int a = surd_floor(Surd(P, 1, fc.D, Q));
        quotients.push_back(a);
        Int Pn = a * Q - P;
        Int Qn = exact_div(fc.D - Pn * Pn, Q);
        P = Pn;
        Q = Qn;
        if (states.size() > 4000000) fail(errc::out_of_range, "continued fraction period too long");
    }

    Mat2 T = Mat2::identity();
    for (std::size_t i = first; i < quotients.size(); ++i) {
        Mat2 A{{{quotients[i], 1}, {1, 0}}};
        T = mat_mul(T, A);
    }

    const Int& Pk = states[first].first;
    const Int& Qk = states[first].second;
    // eps = T21 * (Pk + sqrt(D))/Qk + T22
    Int A = T.m[1][0] * Pk + T.m[1][1] * Qk; // rational part numerator over Qk
    Int B = T.m[1][0];                       // sqrt(D) coefficient numerator over Qk
    QuadInt eps;
    if (fc.tr_omega == 1) {
        // sqrt(D) = 2*omega - 1
        eps = {exact_div(A - B, Qk), exact_div(2 * B, Qk)};
    } else {
        eps = {exact_div(A, Qk), exact_div(B, Qk)};
    }
    return eps;
}

} // namespace

FieldCtx new_field(const Int& D) {
    if (D < 2) fail(errc::too_small, "D must be at least 2");
    if (D > Int("1000000000000")) fail(errc::out_of_range, "D too large (limit 10^12)");
    if (!is_square_free(D)) fail(errc::not_square_free, "D must be square-free");

    FieldCtx fc;
    fc.D = D;
    bool one_mod_4 = mod_floor(D, 4) == 1;
    fc.tr_omega = one_mod_4 ? 1 : 0;
    fc.norm_omega = one_mod_4 ? exact_div(1 - D, Int(4)) : Int(-D);
    fc.disc = one_mod_4 ? D : 4 * D;
    fc.sqrt_disc = isqrt(fc.disc);
    double sd = std::sqrt(to_double(D));
    fc.omega1 = one_mod_4 ? (1.0 + sd) / 2.0 : sd;
    fc.omega2 = one_mod_4 ? (1.0 - sd) / 2.0 : -sd;

    fc.fund_unit = fundamental_unit_cf(fc);
    Int n = qi_norm(fc, fc.fund_unit);
    if (n != 1 && n != -1) fail(errc::internal, "fundamental unit has |N| != 1");
    fc.fund_unit_norm = n == 1 ? 1 : -1;
    fc.regulator = log_abs_embed(fc, fc.fund_unit);
    if (!(fc.regulator > 0)) fail(errc::internal, "non-positive regulator");
    return fc;
}

FieldPtr make_field(const Int& D) { return std::make_shared<const FieldCtx>(new_field(D)); }

double regulator_of(const FieldCtx& fc) { return fc.regulator; }

} // namespace wrt
