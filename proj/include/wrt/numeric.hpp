#ifndef WRT_NUMERIC_HPP
#define WRT_NUMERIC_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <utility>

#include "wrt/errors.hpp"

namespace wrt {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// floor division (rounds toward -inf); b > 0
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& b) {
    if (!divisible(a, b)) fail(errc::internal, "exact_div: not divisible");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// inverse of a mod m (m > 0, gcd(a, m) = 1)
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(errc::internal, "mod_inverse: not invertible");
    return r;
}

// Trial division; 64-bit fast path for the common case.
inline bool is_square_free(const Int& n) {
    if (n <= 0) return false;
    if (n.fits_ulong_p()) {
        unsigned long m = n.get_ui();
        for (unsigned long p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return false;
            }
        }
        return true;
    }
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (divisible(m, p)) {
            m = exact_div(m, p);
            if (divisible(m, p)) return false;
        }
    }
    return true;
}

// x ~ d * 2^e with 0.5 <= |d| < 1 (d = 0 iff x = 0); avoids double overflow
inline std::pair<double, long> to_double_2exp(const Int& x) {
    long e = 0;
    double d = mpz_get_d_2exp(&e, x.get_mpz_t());
    return {d, e};
}

// log|x| for x != 0, safe for arbitrarily large x
inline double log_abs(const Int& x) {
    auto [d, e] = to_double_2exp(x);
    return std::log(std::fabs(d)) + static_cast<double>(e) * M_LN2;
}

inline double to_double(const Int& x) { return x.get_d(); }
inline double to_double(const Rat& x) { return x.get_d(); }

inline Int int_from(long v) { return Int(v); }

} // namespace wrt

#endif
