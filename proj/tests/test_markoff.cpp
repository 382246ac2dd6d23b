#include "doctest.h"

#include <cmath>
#include <set>

#include "wrt/markoff.hpp"

using namespace wrt;

namespace {

std::vector<std::array<long, 3>> as_longs(const std::vector<MarkoffTriple>& v) {
    std::vector<std::array<long, 3>> out;
    for (const MarkoffTriple& t : v) out.push_back({t.a.get_si(), t.b.get_si(), t.c.get_si()});
    return out;
}

} // namespace

TEST_CASE("markoff tree") {
    auto t30 = as_longs(markoff_tree(Int(30)));
    CHECK(t30 == std::vector<std::array<long, 3>>{
                     {1, 1, 1}, {1, 1, 2}, {1, 2, 5}, {1, 5, 13}, {2, 5, 29}});
    auto t1 = as_longs(markoff_tree(Int(1)));
    CHECK(t1 == std::vector<std::array<long, 3>>{{1, 1, 1}});
    auto t200 = as_longs(markoff_tree(Int(200)));
    CHECK(t200 == std::vector<std::array<long, 3>>{{1, 1, 1},
                                                   {1, 1, 2},
                                                   {1, 2, 5},
                                                   {1, 5, 13},
                                                   {2, 5, 29},
                                                   {1, 13, 34},
                                                   {1, 34, 89},
                                                   {2, 29, 169},
                                                   {5, 13, 194}});
    for (const MarkoffTriple& t : markoff_tree(Int(100000))) {
        CHECK(is_markoff_triple(t));
        if (mod_floor(t.c, 2) == 1) CHECK(mod_floor(t.c, 4) == 1); // odd c is 1 mod 4
    }
}

TEST_CASE("markoff ideals") {
    MarkoffIdealData m1 = markoff_ideal({Int(1), Int(1), Int(1)});
    CHECK(m1.field->D == 5);
    CHECK(m1.ideal.triple() == std::array<Int, 3>{Int(1), Int(0), Int(1)});

    MarkoffIdealData m5 = markoff_ideal({Int(1), Int(2), Int(5)});
    CHECK(m5.field->D == 221);
    CHECK(m5.k == 2);
    CHECK(m5.ell == 1);
    CHECK(m5.ideal.triple() == std::array<Int, 3>{Int(5), Int(4), Int(1)});

    MarkoffIdealData m13 = markoff_ideal({Int(1), Int(5), Int(13)});
    CHECK(m13.field->D == 1517);
    CHECK(m13.k == 5);
    CHECK(m13.ideal.triple() == std::array<Int, 3>{Int(13), Int(11), Int(1)});

    CHECK_THROWS_AS(markoff_ideal({Int(1), Int(1), Int(2)}), error);   // even c
    CHECK_THROWS_AS(markoff_ideal({Int(1), Int(2), Int(6)}), error);   // not a triple
}

TEST_CASE("markoff good bases, closed forms") {
    MarkoffGoodBases g5 = markoff_good_bases({Int(1), Int(2), Int(5)});
    CHECK(g5.beta1 == -2);
    CHECK(g5.beta2 == 0);
    CHECK(g5.cos1 == 0);
    CHECK(g5.cos2 == Rat(-2, 9));

    MarkoffGoodBases g13 = markoff_good_bases({Int(1), Int(5), Int(13)});
    CHECK(g13.cos1 == 0);
    CHECK(g13.cos2 == Rat(-6, 23));

    MarkoffGoodBases g29 = markoff_good_bases({Int(2), Int(5), Int(29)});
    CHECK(g29.cos1 == Rat(348, 1537));
    CHECK(g29.cos2 == Rat(-2, 63));

    CHECK_THROWS_AS(markoff_good_bases({Int(1), Int(1), Int(1)}), error); // c = 1

    // closed forms agree with the exact cos of the constructed bases and
    // with the general extension algorithm
    for (const MarkoffTriple& t : markoff_tree(Int(3000))) {
        if (mod_floor(t.c, 2) == 0 || t.c == 1) continue;
        CAPTURE(t.c.get_si());
        MarkoffGoodBases gb = markoff_good_bases(t);
        CHECK(is_good_basis(gb.basis1));
        CHECK(is_good_basis(gb.basis2));
        CHECK(cos_theta(gb.basis1) == gb.cos1);
        CHECK(cos_theta(gb.basis2) == gb.cos2);
        auto ext = extend_to_good_bases(gb.data.ideal, QuadInt(t.c, Int(0)));
        REQUIRE(ext.size() == 2);
        std::set<Int> keys{f4_value(ext[0]), f4_value(ext[1])};
        CHECK(keys == std::set<Int>{f4_value(gb.basis1), f4_value(gb.basis2)});
    }
}

TEST_CASE("fibonacci and pell families") {
    auto fib = fibonacci_triples(3);
    CHECK(as_longs(fib) == std::vector<std::array<long, 3>>{{1, 2, 5}, {1, 5, 13}, {1, 34, 89}});
    auto pell = pell_triples(2);
    CHECK(as_longs(pell) == std::vector<std::array<long, 3>>{{2, 5, 29}, {2, 29, 169}});
    CHECK(as_longs(fibonacci_triples(1)) == std::vector<std::array<long, 3>>{{1, 2, 5}});
    for (const MarkoffTriple& t : fibonacci_triples(12)) {
        CHECK(is_markoff_triple(t));
        CHECK(mod_floor(t.c, 2) == 1);
    }
    for (const MarkoffTriple& t : pell_triples(10)) {
        CHECK(is_markoff_triple(t));
        CHECK(mod_floor(t.c, 2) == 1);
    }
}

TEST_CASE("limiting cosines") {
    auto lim = limiting_cosines();
    CHECK(lim[0] == 0.0);
    CHECK(lim[1] == doctest::Approx(-0.26776695).epsilon(1e-7));
    CHECK(lim[2] == doctest::Approx(0.22654092).epsilon(1e-7));
    CHECK(lim[3] == doctest::Approx(-0.03274517).epsilon(1e-7));

    // fibonacci beta = -2 cosine is exactly 0; the other tends to the limit
    double prev_gap = 1.0;
    for (const MarkoffTriple& t : fibonacci_triples(8)) {
        MarkoffGoodBases gb = markoff_good_bases(t);
        CHECK(gb.cos1 == 0);
        double gap = std::fabs(to_double(gb.cos2) - lim[1]);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    for (const MarkoffTriple& t : pell_triples(8)) {
        MarkoffGoodBases gb = markoff_good_bases(t);
        CHECK(to_double(gb.cos1) == doctest::Approx(lim[2]).epsilon(0.08));
        CHECK(to_double(gb.cos2) == doctest::Approx(lim[3]).epsilon(0.9));
    }
}

TEST_CASE("markoff minimum product distance") {
    MarkoffMpd m1 = markoff_mpd({Int(1), Int(1), Int(1)});
    CHECK(m1.min_norm == 1);
    CHECK(m1.n_lambda == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
    CHECK(m1.meets_s_hat);

    MarkoffMpd m5 = markoff_mpd({Int(1), Int(2), Int(5)});
    CHECK(m5.min_norm == 25);
    CHECK(m5.n_lambda == doctest::Approx(5.0 / std::sqrt(221.0)).epsilon(1e-12));
    CHECK(m5.meets_s_hat);

    MarkoffMpd m13 = markoff_mpd({Int(1), Int(5), Int(13)});
    CHECK(m13.min_norm == 169);
    CHECK(m13.meets_s_hat);
    CHECK(m13.n_lambda > 1.0 / 3.0);

    CHECK_THROWS_AS(markoff_mpd({Int(1), Int(1), Int(2)}), error);
}
