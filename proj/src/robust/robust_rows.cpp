#include "invbid/robust/robust_rows.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "invbid/common.hpp"
#include "invbid/lp/solve.hpp"

namespace invbid::robust {

namespace {

// One family: g0_terms + max_{z in box} sum_i d_i z_i <= 0, with d_i given as
// a linear expression over existing variables. Adds the dual pair per feature
// and the linking equalities.
void emit_family(const std::string& tag, const data::FeatureRanges& ranges,
                 const std::vector<lp::Term>& g0_terms,
                 const std::vector<std::vector<lp::Term>>& d_terms,
                 lp::Problem& target, lp::RowId& row_out, std::vector<lp::VarId>& hi_out,
                 std::vector<lp::VarId>& lo_out) {
    const int I = ranges.size();
    std::vector<lp::Term> row = g0_terms;
    hi_out.clear();
    lo_out.clear();
    for (int i = 0; i < I; ++i) {
        const lp::VarId hi =
            target.add_variable(tag + "_hi[" + std::to_string(i + 1) + "]", 0.0);
        const lp::VarId lo =
            target.add_variable(tag + "_lo[" + std::to_string(i + 1) + "]", 0.0);
        hi_out.push_back(hi);
        lo_out.push_back(lo);
        row.push_back({hi, ranges.upper[i]});
        row.push_back({lo, -ranges.lower[i]});
        std::vector<lp::Term> link = {{hi, 1.0}, {lo, -1.0}};
        for (const lp::Term& t : d_terms[i]) link.push_back({t.var, -t.coef});
        target.add_constraint(tag + "_link[" + std::to_string(i + 1) + "]", link,
                              lp::Relation::eq, 0.0);
    }
    row_out = target.add_constraint(tag + "_worst", row, lp::Relation::le, 0.0);
}

} // namespace

RobustHandles emit_robust_rows(const data::FeatureRanges& ranges,
                               const ParameterVars& vars, lp::Problem& target) {
    const int I = ranges.size();
    if (static_cast<int>(vars.pmin_coefs.size()) != I ||
        static_cast<int>(vars.pmax_coefs.size()) != I ||
        static_cast<int>(vars.ramp_up_coefs.size()) != I ||
        static_cast<int>(vars.ramp_down_coefs.size()) != I)
        throw ConfigError("robust rows: coefficient handle count != feature count");

    RobustHandles h;
    // bounds family: pmin - pmax <= 0 for all z
    {
        std::vector<lp::Term> g0 = {{vars.pmin_intercept, 1.0}, {vars.pmax_intercept, -1.0}};
        std::vector<std::vector<lp::Term>> d(I);
        for (int i = 0; i < I; ++i)
            d[i] = {{vars.pmin_coefs[i], 1.0}, {vars.pmax_coefs[i], -1.0}};
        emit_family("rob_bounds", ranges, g0, d, target, h.bounds_row, h.phi_hi, h.phi_lo);
    }
    // nonnegativity family: -pmin <= 0 for all z
    {
        std::vector<lp::Term> g0 = {{vars.pmin_intercept, -1.0}};
        std::vector<std::vector<lp::Term>> d(I);
        for (int i = 0; i < I; ++i) d[i] = {{vars.pmin_coefs[i], -1.0}};
        emit_family("rob_nonneg", ranges, g0, d, target, h.nonneg_row, h.eta_hi, h.eta_lo);
    }
    // ramp family: -(ramp_up + ramp_down) <= 0 for all z
    {
        std::vector<lp::Term> g0 = {{vars.ramp_up_intercept, -1.0},
                                    {vars.ramp_down_intercept, -1.0}};
        std::vector<std::vector<lp::Term>> d(I);
        for (int i = 0; i < I; ++i)
            d[i] = {{vars.ramp_up_coefs[i], -1.0}, {vars.ramp_down_coefs[i], -1.0}};
        emit_family("rob_ramp", ranges, g0, d, target, h.ramp_row, h.vphi_hi, h.vphi_lo);
    }
    return h;
}

double box_max_corner(const std::vector<double>& d, const data::FeatureRanges& ranges) {
    double v = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        v += std::max(d[i] * ranges.upper[i], d[i] * ranges.lower[i]);
    return v;
}

double box_max_dual(const std::vector<double>& d, const data::FeatureRanges& ranges) {
    lp::Problem p;
    const int I = static_cast<int>(d.size());
    if (I == 0) return 0.0;
    for (int i = 0; i < I; ++i) {
        const lp::VarId hi = p.add_variable("hi" + std::to_string(i), 0.0);
        const lp::VarId lo = p.add_variable("lo" + std::to_string(i), 0.0);
        p.add_objective_term(hi, ranges.upper[i]);
        p.add_objective_term(lo, -ranges.lower[i]);
        p.add_constraint("link" + std::to_string(i), {{hi, 1.0}, {lo, -1.0}},
                         lp::Relation::eq, d[i]);
    }
    lp::Solution s = lp::solve(p);
    if (s.status != lp::Status::optimal)
        throw SolverError("box dual LP failed: " + s.message);
    return s.objective;
}

const char* sample_check(const consumer::BidModel& model,
                         const data::FeatureRanges& ranges, int samples,
                         std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    std::vector<double> z(ranges.size());
    for (int k = 0; k < samples; ++k) {
        for (int i = 0; i < ranges.size(); ++i) {
            std::uniform_real_distribution<double> u(ranges.lower[i], ranges.upper[i]);
            z[i] = u(rng);
        }
        const consumer::MarketBid bid = consumer::materialize_bid_unchecked(model, z);
        if (const char* bad = bid.violation(tol)) return bad;
    }
    return nullptr;
}

} // namespace invbid::robust
