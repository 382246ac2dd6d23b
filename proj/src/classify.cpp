#include "wrt/classify.hpp"

#include <cmath>

#include "wrt/sweep.hpp"

namespace wrt {

bool is_special_form(const Int& D) {
    Int m = mod_floor(D, 4);
    if (m == 2) return is_perfect_square(D - 1);
    if (m == 1) return D >= 4 && is_perfect_square(D - 4);
    return false;
}

RegulatorBound regulator_lower_bound(const FieldCtx& fc) {
    double d = to_double(fc.D);
    double bound;
    if (fc.tr_omega == 1)
        bound = std::log((std::sqrt(d - 4.0) + std::sqrt(d)) / 2.0);
    else
        bound = std::log(std::sqrt(d - 1.0) + std::sqrt(d));
    return {bound, fc.regulator - bound < 1e-9};
}

Int s_k_bound(const Int& disc) {
    if (disc < 5) fail(errc::bad_input, "discriminant must be at least 5");
    return 1 + fdiv(isqrt(disc), Int(3));
}

double s_hat_k(const Int& disc) {
    return to_double(s_k_bound(disc)) / std::sqrt(to_double(disc));
}

double mpd(const Ideal& I) {
    Int m = min_nonzero_abs_norm(I);
    return std::exp(log_abs(m) - log_abs(I.norm()) - 0.5 * log_abs(I.ctx().disc));
}

bool unique_orthogonal_twist(const FieldPtr& fc) {
    auto classes = all_well_rounded_twists(unit_ideal(fc));
    return classes.size() == 1 && classes[0].kind == TwistKind::orthogonal;
}

OrthoCheck orthogonal_twist_exists(const FieldPtr& fc) {
    auto classes = all_well_rounded_twists(unit_ideal(fc));
    bool enumerated = false;
    for (const TwistClass& tc : classes) enumerated = enumerated || tc.kind == TwistKind::orthogonal;
    return {enumerated, fc->fund_unit_norm == -1};
}

std::vector<Int> square_free_in(const Int& min_D, const Int& max_D) {
    std::vector<Int> out;
    for (Int d = min_D < 2 ? Int(2) : min_D; d <= max_D; ++d)
        if (is_square_free(d)) out.push_back(d);
    return out;
}

BestMpdReport best_mpd_check(const Int& max_small_D, const Int& max_sweep_D) {
    BestMpdReport rep{Int(0), {Int(0), Int(0), Int(0)}, true, true, Int(0), Int(0)};
    // exact comparison key: mpd(I)^2 = m^2 / (N^2 disc) vs 1/5 as rationals
    Rat best(0);
    for (const Int& D : square_free_in(Int(2), max_small_D - 1)) {
        FieldPtr fc = make_field(D);
        ++rep.checked_fields;
        Int lim = fdiv(isqrt(fc->disc), Int(2));
        for (Int n = 1; n <= lim; ++n) {
            for (const Ideal& I : ideals_of_norm(fc, n)) {
                ++rep.checked_ideals;
                Int m = min_nonzero_abs_norm(I);
                Rat v(m * m, n * n * fc->disc);
                v.canonicalize();
                if (cmp(v, best) > 0) {
                    best = v;
                    rep.best_D = D;
                    rep.best_ideal = I.triple();
                }
            }
        }
    }
    rep.small_max_is_q5 = best == Rat(1, 5) && rep.best_D == 5;
    // beyond the small range, S_hat_K < 1/sqrt(5) exactly: 5 S_K^2 < disc
    for (const Int& D : square_free_in(max_small_D, max_sweep_D)) {
        Int disc = mod_floor(D, 4) == 1 ? D : Int(4 * D);
        Int sk = s_k_bound(disc);
        if (5 * sk * sk >= disc) {
            rep.sweep_ok = false;
            break;
        }
    }
    return rep;
}

FieldReport field_report(const FieldPtr& fc) {
    FieldReport fr;
    fr.D = fc->D;
    fr.disc = fc->disc;
    fr.regulator = fc->regulator;
    RegulatorBound rb = regulator_lower_bound(*fc);
    fr.reg_lower_bound = rb.bound;
    fr.reg_equality = rb.equality;
    fr.fund_unit_norm = fc->fund_unit_norm;
    TwistSet ts = well_rounded_twists(unit_ideal(fc));
    fr.twists = std::move(ts.classes);
    fr.principal_count = ts.principal_count;
    if (fr.twists.size() > 2 * fr.principal_count) fail(errc::internal, "count bound violated");
    fr.unique_orthogonal = fr.twists.size() == 1 && fr.twists[0].kind == TwistKind::orthogonal;
    fr.s_k = s_k_bound(fc->disc);
    fr.s_hat = s_hat_k(fc->disc);
    return fr;
}

void survey(const Int& min_D, const Int& max_D,
            const std::function<void(const FieldReport&)>& sink) {
    std::vector<Int> ds = square_free_in(min_D, max_D);
    ordered_parallel_map<Int, FieldReport>(
        ds, [](const Int& D) { return field_report(make_field(D)); },
        [&](const Int&, FieldReport& fr) { sink(fr); });
}

} // namespace wrt
