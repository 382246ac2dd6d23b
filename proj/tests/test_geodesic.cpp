#include "doctest.h"

#include <cmath>
#include <random>

#include "wrt/geodesic.hpp"
#include "wrt/twists.hpp"

using namespace wrt;

TEST_CASE("tau formula") {
    EmbeddedBasis id{1, 0, 0, 1};
    UhpPoint p = tau(id, 1.0);
    CHECK(p.x == doctest::Approx(0.0));
    CHECK(p.y == doctest::Approx(1.0));
    UhpPoint q = tau(id, 2.0);
    CHECK(q.x == doctest::Approx(0.0));
    CHECK(q.y == doctest::Approx(0.25));

    // the twisting alpha of the canonical basis of Q(sqrt 5) lands on i
    auto f5 = make_field(Int(5));
    Ideal O = unit_ideal(f5);
    auto classes = all_well_rounded_twists(O);
    REQUIRE(classes.size() == 1);
    UhpPoint r = reduce_to_fundamental_domain(tau(embedded_basis(O), classes[0].alpha));
    CHECK(std::fabs(r.x) < 1e-9);
    CHECK(r.y == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(tau(EmbeddedBasis{1, 0, 0, -1}, 1.0), error);
    CHECK_THROWS_AS(tau(id, 0.0), error);
    CHECK_THROWS_AS(tau(id, -2.0), error);
}

TEST_CASE("fundamental domain reduction") {
    UhpPoint a = reduce_to_fundamental_domain({0.6, 2.0});
    CHECK(a.x == doctest::Approx(-0.4).epsilon(1e-12));
    CHECK(a.y == doctest::Approx(2.0).epsilon(1e-12));

    UhpPoint b = reduce_to_fundamental_domain({0.3, 0.4});
    CHECK(b.x == doctest::Approx(-0.2).epsilon(1e-12));
    CHECK(b.y == doctest::Approx(1.6).epsilon(1e-12));

    UhpPoint c = reduce_to_fundamental_domain({0.0, 1.0});
    CHECK(c.x == doctest::Approx(0.0));
    CHECK(c.y == doctest::Approx(1.0));

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dx(-8.0, 8.0), dy(0.01, 5.0);
    for (int i = 0; i < 2000; ++i) {
        UhpPoint z{dx(rng), dy(rng)};
        UhpPoint r = reduce_to_fundamental_domain(z);
        CHECK(r.x > -0.5 - 1e-12);
        CHECK(r.x <= 0.5 + 1e-12);
        CHECK(r.x * r.x + r.y * r.y >= 1.0 - 1e-12);
    }
}

TEST_CASE("reduction is invariant under basis change") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> shift(-3, 3);
    for (long D : {5L, 17L, 57L}) {
        auto fc = make_field(Int(D));
        EmbeddedBasis B = embedded_basis(unit_ideal(fc));
        for (int trial = 0; trial < 25; ++trial) {
            // random unimodular matrix as a short word in T and S
            long long m[2][2] = {{1, 0}, {0, 1}};
            for (int w = 0; w < 6; ++w) {
                long long k = shift(rng);
                long long t[2][2];
                if (rng() & 1) { // right-multiply by [[1, k], [0, 1]]
                    t[0][0] = m[0][0];
                    t[0][1] = k * m[0][0] + m[0][1];
                    t[1][0] = m[1][0];
                    t[1][1] = k * m[1][0] + m[1][1];
                } else { // right-multiply by [[0, -1], [1, 0]]
                    t[0][0] = m[0][1];
                    t[0][1] = -m[0][0];
                    t[1][0] = m[1][1];
                    t[1][1] = -m[1][0];
                }
                m[0][0] = t[0][0];
                m[0][1] = t[0][1];
                m[1][0] = t[1][0];
                m[1][1] = t[1][1];
            }
            long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            if (det != 1) continue;
            EmbeddedBasis B2{B.a * m[0][0] + B.b * m[1][0], B.a * m[0][1] + B.b * m[1][1],
                             B.c * m[0][0] + B.d * m[1][0], B.c * m[0][1] + B.d * m[1][1]};
            for (double al : {0.7, 1.0, 1.9}) {
                UhpPoint p = reduce_to_fundamental_domain(tau(B, al));
                UhpPoint q = reduce_to_fundamental_domain(tau(B2, al));
                CHECK(std::fabs(p.x - q.x) <= 1e-9);
                CHECK(std::fabs(p.y - q.y) <= 1e-9);
            }
        }
    }
}

TEST_CASE("sampled points stay in the fundamental domain") {
    auto fc = make_field(Int(17));
    auto samples = sample_geodesic(unit_ideal(fc), 500);
    CHECK(samples.size() == 500);
    for (const GeodesicSample& s : samples) {
        CHECK(s.x > -0.5 - 1e-12);
        CHECK(s.x <= 0.5 + 1e-12);
        CHECK(s.x * s.x + s.y * s.y >= 1.0 - 1e-12);
        CHECK(s.dist_to_arc >= -1e-12);
    }
    CHECK_THROWS_AS(sample_geodesic(unit_ideal(fc), 1), error);
}

TEST_CASE("crossing cosines match the enumerated twists") {
    // Fig-1 style counts: 1, 2, 3 crossings for D = 5, 17, 57
    std::vector<std::pair<long, std::size_t>> counts = {{5, 1}, {17, 2}, {57, 3}};
    for (auto [D, n] : counts) {
        auto fc = make_field(Int(D));
        auto classes = all_well_rounded_twists(unit_ideal(fc));
        REQUIRE(classes.size() == n);
        auto crossings = crossing_cosines(unit_ideal(fc), 20000);
        CAPTURE(D);
        REQUIRE(crossings.size() == n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::fabs(crossings[i] - std::fabs(to_double(classes[i].cos_theta))) <= 1e-6);
    }

    for (long D = 2; D <= 60; ++D) {
        if (!is_square_free(Int(D))) continue;
        auto fc = make_field(Int(D));
        auto classes = all_well_rounded_twists(unit_ideal(fc));
        auto crossings = crossing_cosines(unit_ideal(fc), 8000);
        CAPTURE(D);
        REQUIRE(crossings.size() == classes.size());
        for (std::size_t i = 0; i < classes.size(); ++i)
            CHECK(std::fabs(crossings[i] - std::fabs(to_double(classes[i].cos_theta))) <= 1e-6);
    }
}
