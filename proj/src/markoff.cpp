#include "wrt/markoff.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <tuple>

namespace wrt {

bool is_markoff_triple(const MarkoffTriple& t) {
    return t.a >= 1 && t.a <= t.b && t.b <= t.c &&
           t.a * t.a + t.b * t.b + t.c * t.c == 3 * t.a * t.b * t.c;
}

std::vector<MarkoffTriple> markoff_tree(const Int& max_c) {
    if (max_c < 1) fail(errc::bad_input, "max_c must be at least 1");
    using Key = std::tuple<Int, Int, Int>;
    std::set<Key> seen;
    std::queue<MarkoffTriple> work;
    auto push = [&](Int a, Int b, Int c) {
        Int v[3] = {std::move(a), std::move(b), std::move(c)};
        std::sort(v, v + 3);
        if (v[2] > max_c) return;
        Key key{v[0], v[1], v[2]};
        if (!seen.insert(key).second) return;
        work.push(MarkoffTriple{v[0], v[1], v[2]});
    };
    push(1, 1, 1);
    while (!work.empty()) {
        MarkoffTriple t = work.front();
        work.pop();
        push(3 * t.b * t.c - t.a, t.b, t.c);
        push(t.a, 3 * t.a * t.c - t.b, t.c);
        push(t.a, t.b, 3 * t.a * t.b - t.c);
    }
    std::vector<MarkoffTriple> out;
    out.reserve(seen.size());
    for (const auto& [a, b, c] : seen) out.push_back(MarkoffTriple{a, b, c});
    std::sort(out.begin(), out.end(), [](const MarkoffTriple& l, const MarkoffTriple& r) {
        return std::tie(l.c, l.b, l.a) < std::tie(r.c, r.b, r.a);
    });
    return out;
}

MarkoffIdealData markoff_ideal(const MarkoffTriple& t) {
    if (!is_markoff_triple(t)) fail(errc::bad_input, "not a Markoff triple");
    if (mod_floor(t.c, 2) == 0) fail(errc::even_c, "even Markoff numbers give non-maximal orders");
    MarkoffIdealData md;
    md.triple = t;
    md.field = make_field(9 * t.c * t.c - 4);
    md.k = mod_floor(t.b * mod_inverse(mod_floor(t.a, t.c), t.c), t.c);
    md.ell = exact_div(md.k * md.k + 1, t.c);
    Int half = exact_div(t.c + 1, Int(2)); // (c+1)/2
    Int bpart = md.k >= half ? Int(md.k - half) : Int(md.k + half - 1);
    md.ideal = ideal_from_canonical(md.field, t.c, bpart, Int(1));
    return md;
}

MarkoffGoodBases markoff_good_bases(const MarkoffTriple& t) {
    if (t.c == 1) fail(errc::c_one, "c = 1 is the ring of integers of Q(sqrt 5)");
    MarkoffGoodBases gb{markoff_ideal(t), {}, {}, {}, {}, {}, {}};
    const Int& c = t.c;
    const Int& k = gb.data.k;
    // floor((-k +- sqrt(3c^2/2 - 1))/c), radicand cleared to sqrt(6c^2-4)/(2c)
    Int rad = 6 * c * c - 4;
    gb.beta1 = surd_floor(Surd(-2 * k, -1, rad, 2 * c));
    gb.beta2 = surd_floor(Surd(-2 * k, 1, rad, 2 * c));
    QuadInt x(c, Int(0));
    Int shift = k + exact_div(c - 1, Int(2));
    auto basis = [&](const Int& beta) {
        return BasisPair{gb.data.ideal, x, QuadInt(beta * c + shift, Int(1))};
    };
    auto closed_cos = [&](const Int& beta) {
        Rat r((beta * beta + beta - 1) * c * c + (2 * beta + 1) * k * c + k * k + 1,
              (2 * beta + 1) * c * c + 2 * k * c);
        r.canonicalize();
        return r;
    };
    gb.basis1 = basis(gb.beta1);
    gb.basis2 = basis(gb.beta2);
    gb.cos1 = closed_cos(gb.beta1);
    gb.cos2 = closed_cos(gb.beta2);
    return gb;
}

std::vector<MarkoffTriple> fibonacci_triples(int count) {
    if (count < 1) fail(errc::bad_input, "count must be positive");
    std::vector<MarkoffTriple> out;
    Int f1 = 1, f2 = 1; // F_1, F_2
    while (static_cast<int>(out.size()) < count) {
        Int f3 = f1 + f2;     // F_{2n+1} from F_{2n-1}, F_{2n}
        MarkoffTriple t{Int(1), f1, f3};
        if (mod_floor(f3, 2) == 1 && t.b > 1) out.push_back(t);
        f1 = f3;
        f2 = f2 + f3; // F_{2n+2}
    }
    return out;
}

std::vector<MarkoffTriple> pell_triples(int count) {
    if (count < 1) fail(errc::bad_input, "count must be positive");
    std::vector<MarkoffTriple> out;
    Int p = 5, q = 12; // P_4, P_5
    while (static_cast<int>(out.size()) < count) {
        Int pn = 2 * q + p; // P_{2n}
        out.push_back(MarkoffTriple{Int(2), p, pn});
        p = pn;
        q = 2 * pn + q;
    }
    return out;
}

std::array<double, 4> limiting_cosines() {
    double s5 = std::sqrt(5.0), s2 = std::sqrt(2.0);
    return {0.0, (6.0 - 4.0 * s5) / 11.0, (3.0 - s2) / 7.0, (15.0 - 11.0 * s2) / 17.0};
}

MarkoffMpd markoff_mpd(const MarkoffTriple& t) {
    MarkoffIdealData md = markoff_ideal(t);
    MarkoffMpd r;
    r.min_norm = min_nonzero_abs_norm(md.ideal);
    const Int& disc = md.field->disc;
    r.n_lambda = std::exp(log_abs(r.min_norm) - log_abs(t.c) - 0.5 * log_abs(disc));
    Int s_k = 1 + fdiv(isqrt(disc), Int(3));
    r.meets_s_hat = r.min_norm == t.c * s_k;
    return r;
}

} // namespace wrt
