#include "doctest.h"

#include <cmath>
#include <random>

#include "wrt/classify.hpp"
#include "wrt/field_core.hpp"

using namespace wrt;

namespace {

QuadInt rand_qi(std::mt19937_64& rng, long lim) {
    std::uniform_int_distribution<long> d(-lim, lim);
    return {Int(d(rng)), Int(d(rng))};
}

} // namespace

TEST_CASE("new_field derived constants") {
    FieldCtx f5 = new_field(Int(5));
    CHECK(f5.disc == 5);
    CHECK(f5.tr_omega == 1);
    CHECK(f5.norm_omega == -1);
    CHECK(f5.fund_unit == QuadInt(Int(0), Int(1))); // omega itself

    FieldCtx f17 = new_field(Int(17));
    CHECK(f17.fund_unit == QuadInt(Int(3), Int(2))); // 4 + sqrt(17)
    CHECK(f17.fund_unit_norm == -1);

    FieldCtx f2 = new_field(Int(2));
    CHECK(f2.disc == 8);
    CHECK(f2.tr_omega == 0);
    CHECK(f2.norm_omega == -2);
    CHECK(f2.fund_unit == QuadInt(Int(1), Int(1)));

    CHECK_THROWS_AS(new_field(Int(12)), error);
    CHECK_THROWS_AS(new_field(Int(1)), error);
    CHECK_THROWS_AS(new_field(Int(0)), error);
    CHECK_THROWS_AS(new_field(Int(-5)), error);
    CHECK_THROWS_AS(new_field(Int(50)), error); // 25 | 50

    // a famously large unit
    FieldCtx f94 = new_field(Int(94));
    CHECK(f94.fund_unit == QuadInt(Int(2143295), Int(221064)));
    CHECK(f94.fund_unit_norm == 1);
}

TEST_CASE("fundamental unit is the smallest unit above 1") {
    // independent oracle: solve |N(a + c*omega)| = 1 directly for each
    // omega-coefficient c below the one of eps, via the discriminant of the
    // quadratic in a
    for (long D = 2; D <= 300; ++D) {
        if (!is_square_free(Int(D))) continue;
        FieldCtx fc = new_field(Int(D));
        CAPTURE(D);
        Int n_eps = qi_norm(fc, fc.fund_unit);
        CHECK(abs(n_eps) == 1);
        CHECK(qi_sign_embed(fc, qi_sub(fc.fund_unit, QuadInt(Int(1), Int(0)))) > 0);
        Int cmax = fc.fund_unit.c;
        REQUIRE(cmax >= 1);
        // any unit strictly between 1 and eps has a strictly smaller
        // omega-coefficient, so scanning c < c(eps) is complete; fields whose
        // unit is too large to scan are skipped
        if (cmax > 50000) continue;
        bool smaller_unit = false;
        for (Int c = 1; c < cmax && !smaller_unit; ++c) {
            for (int target : {1, -1}) {
                // a^2 + a c t + c^2 n_w = target
                Int disc_a = c * c * fc.tr_omega * fc.tr_omega - 4 * (c * c * fc.norm_omega - target);
                if (sgn(disc_a) < 0 || !is_perfect_square(disc_a)) continue;
                Int root = isqrt(disc_a);
                for (int pm : {1, -1}) {
                    Int num = -c * fc.tr_omega + pm * root;
                    if (!divisible(num, Int(2))) continue;
                    QuadInt u(exact_div(num, Int(2)), c);
                    if (abs(qi_norm(fc, u)) != 1) continue;
                    if (qi_sign_embed(fc, qi_sub(u, QuadInt(Int(1), Int(0)))) > 0 &&
                        qi_cmp_embed(fc, u, fc.fund_unit) < 0)
                        smaller_unit = true;
                }
            }
        }
        CHECK_FALSE(smaller_unit);
    }
}

TEST_CASE("norm, trace, conjugation examples") {
    FieldCtx f17 = new_field(Int(17));
    CHECK(qi_norm(f17, QuadInt(Int(1), Int(1))) == -2);

    FieldCtx f201 = new_field(Int(201));
    CHECK(qi_norm(f201, QuadInt(Int(129), Int(-17))) == -2);

    std::mt19937_64 rng(42);
    for (long D : {2L, 5L, 13L, 201L}) {
        FieldCtx fc = new_field(Int(D));
        for (int i = 0; i < 200; ++i) {
            QuadInt x = rand_qi(rng, 50), y = rand_qi(rng, 50);
            CHECK(qi_conj(fc, qi_conj(fc, x)) == x);
            CHECK(qi_norm(fc, qi_mul(fc, x, y)) == qi_norm(fc, x) * qi_norm(fc, y));
            CHECK(qi_trace(fc, qi_add(x, y)) == qi_trace(fc, x) + qi_trace(fc, y));
            // x * conj(x) is the rational integer N(x)
            QuadInt p = qi_mul(fc, x, qi_conj(fc, x));
            CHECK(p == QuadInt(qi_norm(fc, x), Int(0)));
            // ring axioms spot checks
            CHECK(qi_mul(fc, x, y) == qi_mul(fc, y, x));
            QuadInt z = rand_qi(rng, 50);
            CHECK(qi_mul(fc, x, qi_add(y, z)) == qi_add(qi_mul(fc, x, y), qi_mul(fc, x, z)));
            CHECK(qi_mul(fc, qi_mul(fc, x, y), z) == qi_mul(fc, x, qi_mul(fc, y, z)));
        }
    }
}

TEST_CASE("embeddings") {
    FieldCtx f5 = new_field(Int(5));
    auto [w1, w2] = embed(f5, QuadInt(Int(0), Int(1)));
    CHECK(w1 == doctest::Approx(1.6180339887498949).epsilon(1e-12));
    CHECK(w2 == doctest::Approx(-0.6180339887498949).epsilon(1e-12));
    auto one = embed(f5, QuadInt(Int(1), Int(0)));
    CHECK(one.first == 1.0);
    CHECK(one.second == 1.0);
    FieldCtx f2 = new_field(Int(2));
    auto [s1, s2] = embed(f2, QuadInt(Int(0), Int(1)));
    CHECK(s1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(s2 == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));

    std::mt19937_64 rng(7);
    for (long D : {2L, 17L, 210L}) {
        FieldCtx fc = new_field(Int(D));
        for (int i = 0; i < 500; ++i) {
            QuadInt x = rand_qi(rng, 1000000);
            if (x.is_zero()) continue;
            auto [v1, v2] = embed(fc, x);
            double n = to_double(qi_norm(fc, x));
            if (n == 0.0) continue;
            CHECK(std::fabs(v1 * v2 - n) <= 1e-9 * std::fabs(n));
        }
    }
}

TEST_CASE("surd floor and comparison") {
    CHECK(surd_floor(Surd(Int(0), Int(-1), Int(198), Int(2))) == -8);
    CHECK(surd_floor(Surd(Int(1571), Int(-387), Int(21), Int(4))) == -51);
    CHECK(surd_floor(Surd(Int(0), Int(0), Int(0), Int(1))) == 0);

    // floor(s) <= s < floor(s) + 1 with exact comparisons
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> dp(-1000, 1000), dn(0, 500), dr(1, 60);
    for (int i = 0; i < 4000; ++i) {
        long r = dr(rng);
        Surd s(Int(dp(rng)), Int(dp(rng)), Int(dn(rng)), Int(rng() % 2 ? r : -r));
        Int f = surd_floor(s);
        CHECK(surd_cmp(Surd::from_int(f), s) <= 0);
        CHECK(surd_cmp(s, Surd::from_int(f + 1)) < 0);
        CHECK(surd_ceil(s) >= f);
        CHECK(surd_ceil(s) <= f + 1);
    }

    // comparison against rationals and antisymmetry
    Surd a(Int(1), Int(1), Int(2), Int(1));  // 1 + sqrt 2
    Surd b(Int(5), Int(-1), Int(2), Int(2)); // (5 - sqrt 2)/2
    CHECK(surd_cmp(a, b) > 0);
    CHECK(surd_cmp(b, a) < 0);
    CHECK(surd_cmp(a, a) == 0);
    CHECK(surd_cmp(a, Surd::from_int(Int(2))) > 0);
    CHECK(surd_cmp(a, Surd::from_int(Int(3))) < 0);

    // perfect squares fold to rationals, so mixed radicands still compare
    CHECK(surd_cmp(Surd(Int(0), Int(1), Int(9), Int(1)), Surd(Int(0), Int(1), Int(16), Int(1))) < 0);
}

TEST_CASE("regulator values") {
    CHECK(new_field(Int(5)).regulator == doctest::Approx(std::log((1 + std::sqrt(5.0)) / 2)).epsilon(1e-12));
    CHECK(new_field(Int(2)).regulator == doctest::Approx(std::log(1 + std::sqrt(2.0))).epsilon(1e-12));
    CHECK(new_field(Int(17)).regulator == doctest::Approx(std::log(4 + std::sqrt(17.0))).epsilon(1e-12));
}

TEST_CASE("log_abs_embed handles cancellation") {
    FieldCtx fc = new_field(Int(5));
    // omega^(-20) has huge coordinates but tiny identity embedding
    QuadInt u = qi_pow(fc, qi_unit_inverse(fc, fc.fund_unit), 20);
    CHECK(log_abs_embed(fc, u) == doctest::Approx(-20.0 * fc.regulator).epsilon(1e-9));
    CHECK(log_abs_embed(fc, fc.fund_unit, true) == doctest::Approx(-fc.regulator).epsilon(1e-9));
}

TEST_CASE("quad rationals") {
    FieldCtx fc = new_field(Int(5));
    QuadRat b = qr_div(fc, QuadInt(Int(-1), Int(1)), QuadInt(Int(0), Int(1))); // (omega-1)/omega
    CHECK(b.num == QuadInt(Int(2), Int(-1))); // 2 - omega = (3 - sqrt 5)/2
    CHECK(b.den == 1);
    CHECK(qr_sign_embed(fc, b) > 0);
    CHECK(qr_sign_embed(fc, b, true) > 0); // conjugate (3 + sqrt 5)/2 > 0
    auto [v1, v2] = qr_embed(fc, b);
    CHECK(v1 == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(v2 == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
}
