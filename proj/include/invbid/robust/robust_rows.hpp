#pragma once

#include <cstdint>
#include <vector>

#include "invbid/consumer/bid_model.hpp"
#include "invbid/data/ranges.hpp"
#include "invbid/lp/problem.hpp"

namespace invbid::robust {

// LP handles of the constraint-side bid parameters inside an estimation
// problem, so the robust rows can bind to them.
struct ParameterVars {
    lp::VarId ramp_up_intercept = -1;
    lp::VarId ramp_down_intercept = -1;
    lp::VarId pmin_intercept = -1;
    lp::VarId pmax_intercept = -1;
    std::vector<lp::VarId> ramp_up_coefs, ramp_down_coefs, pmin_coefs, pmax_coefs;
};

struct RobustHandles {
    lp::RowId bounds_row = -1; // pmin <= pmax over the whole box
    lp::RowId nonneg_row = -1; // pmin >= 0 over the whole box
    lp::RowId ramp_row = -1;   // ramp_up + ramp_down >= 0 over the whole box
    std::vector<lp::VarId> phi_hi, phi_lo;   // bounds family box duals
    std::vector<lp::VarId> eta_hi, eta_lo;   // nonnegativity family
    std::vector<lp::VarId> vphi_hi, vphi_lo; // ramp family
};

// Emits, once per estimation problem (coefficients are time-invariant so the
// inner maximization is the same for every period), the dualized worst-case
// rows making every materialized bid feasible for all feature vectors in the
// box:
//   g0 + sum_i (hi_i * upper_i - lo_i * lower_i) <= 0
//   hi_i - lo_i = d_i,  hi, lo >= 0
// with (g0, d) = (pmin0 - pmax0, a_pmin - a_pmax) for the bounds family and
// the analogous data for the other two families.
RobustHandles emit_robust_rows(const data::FeatureRanges& ranges,
                               const ParameterVars& vars, lp::Problem& target);

// worst case of sum_i d_i z_i over the box by direct corner evaluation
double box_max_corner(const std::vector<double>& d, const data::FeatureRanges& ranges);
// the same quantity through its dual LP; tests pin the two together
double box_max_dual(const std::vector<double>& d, const data::FeatureRanges& ranges);

// samples the box uniformly and reports the first materialized-bid invariant
// violation, or nullptr if all samples pass
const char* sample_check(const consumer::BidModel& model,
                         const data::FeatureRanges& ranges, int samples,
                         std::uint64_t seed, double tol = 1e-6);

} // namespace invbid::robust
