#ifndef WRT_FIELD_CORE_HPP
#define WRT_FIELD_CORE_HPP

#include <memory>
#include <string>
#include <utility>

#include "wrt/numeric.hpp"

namespace wrt {

// Element a + c*omega of O_K, coordinates in the canonical basis {1, omega}.
struct QuadInt {
    Int a{0};
    Int c{0};

    QuadInt() = default;
    QuadInt(Int a_, Int c_) : a(std::move(a_)), c(std::move(c_)) {}
    bool is_zero() const { return sgn(a) == 0 && sgn(c) == 0; }
    bool operator==(const QuadInt& o) const { return a == o.a && c == o.c; }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }
};

// Immutable per-field context for K = Q(sqrt(D)); safe to share across threads.
struct FieldCtx {
    Int D;           // square-free, >= 2
    Int disc;        // D or 4D
    int tr_omega;    // 1 if D = 1 mod 4, else 0
    Int norm_omega;  // (1-D)/4 or -D
    Int sqrt_disc;   // floor(sqrt(disc)), cached for exact form reduction
    QuadInt fund_unit;
    int fund_unit_norm; // +1 or -1
    double regulator;
    double omega1, omega2; // real embeddings of omega, omega1 > omega2
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

FieldCtx new_field(const Int& D);
FieldPtr make_field(const Int& D);

// Exact quadratic irrational (p + q*sqrt(n))/r.  Normal form: r > 0, square
// part of n folded into p when n is a perfect square, gcd(p, q, r) = 1.
// Comparisons and floor are exact; no floating point anywhere.
struct Surd {
    Int p{0}, q{0}, n{0}, r{1};

    Surd() = default;
    Surd(Int p_, Int q_, Int n_, Int r_);
    static Surd from_int(const Int& v) { return Surd(v, 0, 0, 1); }

    int sign() const;
    bool operator==(const Surd& o) const { return p == o.p && q == o.q && n == o.n && r == o.r; }
};

Int surd_floor(const Surd& s);
Int surd_ceil(const Surd& s);
// -1 / 0 / +1; requires equal radicands unless one side is rational
int surd_cmp(const Surd& s, const Surd& t);

// --- arithmetic in O_K ---

Int qi_norm(const FieldCtx& fc, const QuadInt& x);
Int qi_trace(const FieldCtx& fc, const QuadInt& x);
QuadInt qi_conj(const FieldCtx& fc, const QuadInt& x);
QuadInt qi_mul(const FieldCtx& fc, const QuadInt& x, const QuadInt& y);
QuadInt qi_pow(const FieldCtx& fc, const QuadInt& x, unsigned long k);
// inverse of a unit u (|N(u)| = 1)
QuadInt qi_unit_inverse(const FieldCtx& fc, const QuadInt& u);

inline QuadInt qi_add(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.c + y.c}; }
inline QuadInt qi_sub(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.c - y.c}; }
inline QuadInt qi_neg(const QuadInt& x) { return {-x.a, -x.c}; }
inline QuadInt qi_scale(const Int& m, const QuadInt& x) { return {m * x.a, m * x.c}; }

// identity (or conjugate) embedding of x as an exact Surd
Surd qi_surd(const FieldCtx& fc, const QuadInt& x, bool conjugate = false);
int qi_sign_embed(const FieldCtx& fc, const QuadInt& x, bool conjugate = false);
// exact comparison of identity embeddings
int qi_cmp_embed(const FieldCtx& fc, const QuadInt& x, const QuadInt& y);

std::pair<double, double> embed(const FieldCtx& fc, const QuadInt& x);
// log of |embedding|, robust against coordinate cancellation and overflow
double log_abs_embed(const FieldCtx& fc, const QuadInt& x, bool conjugate = false);

double regulator_of(const FieldCtx& fc);

std::string qi_str(const QuadInt& x);

// Element num/den of K; normal form: den > 0, gcd(num.a, num.c, den) = 1.
struct QuadRat {
    QuadInt num;
    Int den{1};
};

QuadRat qr_make(QuadInt num, Int den);
// p / q for q != 0
QuadRat qr_div(const FieldCtx& fc, const QuadInt& p, const QuadInt& q);
Surd qr_surd(const FieldCtx& fc, const QuadRat& x, bool conjugate = false);
int qr_sign_embed(const FieldCtx& fc, const QuadRat& x, bool conjugate = false);
std::pair<double, double> qr_embed(const FieldCtx& fc, const QuadRat& x);
std::string qr_str(const QuadRat& x);

} // namespace wrt

#endif
