#ifndef WRT_CLASSIFY_HPP
#define WRT_CLASSIFY_HPP

#include <functional>
#include <vector>

#include "wrt/twists.hpp"

namespace wrt {

// D = s^2 + 1 with D = 2 (mod 4), or D = s^2 + 4 with D = 1 (mod 4)
bool is_special_form(const Int& D);

struct RegulatorBound {
    double bound;
    bool equality; // R_K - bound < 1e-9
};

RegulatorBound regulator_lower_bound(const FieldCtx& fc);

// S_K = 1 + floor(sqrt(disc)/3) and its normalization S_K/sqrt(disc)
Int s_k_bound(const Int& disc);
double s_hat_k(const Int& disc);

// minimum product distance at unit covolume: min|N|/(N(I) sqrt(disc))
double mpd(const Ideal& I);

bool unique_orthogonal_twist(const FieldPtr& fc);

struct OrthoCheck {
    bool by_enumeration; // a cos = 0 class exists in w(Lambda_K)
    bool by_unit_norm;   // N(eps) = -1 (Bayer-Fluckiger--Nebe)
};

OrthoCheck orthogonal_twist_exists(const FieldPtr& fc);

struct BestMpdReport {
    Int best_D;             // D attaining the maximal mpd among small fields
    std::array<Int, 3> best_ideal;
    bool small_max_is_q5;   // max mpd = 1/sqrt(5), only at (5, O_K)
    bool sweep_ok;          // S_hat_K < 1/sqrt(5) for all swept D >= 100
    Int checked_fields;
    Int checked_ideals;
};

BestMpdReport best_mpd_check(const Int& max_small_D, const Int& max_sweep_D);

struct FieldReport {
    Int D, disc;
    double regulator, reg_lower_bound;
    bool reg_equality;
    int fund_unit_norm;
    std::vector<TwistClass> twists;
    std::size_t principal_count;
    bool unique_orthogonal;
    Int s_k;
    double s_hat;
};

FieldReport field_report(const FieldPtr& fc);

std::vector<Int> square_free_in(const Int& min_D, const Int& max_D);

// One report per square-free D in [min_D, max_D], streamed in order of D.
void survey(const Int& min_D, const Int& max_D, const std::function<void(const FieldReport&)>& sink);

} // namespace wrt

#endif
