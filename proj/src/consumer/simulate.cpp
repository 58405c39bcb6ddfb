#include "invbid/consumer/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "invbid/common.hpp"
#include "invbid/lp/solve.hpp"

namespace invbid::consumer {

double KktResiduals::worst() const {
    return std::max(std::max(stationarity, primal), std::max(dual, complementarity));
}

ConsumptionSolution simulate_bids(const std::vector<MarketBid>& bids,
                                  const std::vector<double>& prices,
                                  const SimulateOptions& options) {
    std::vector<MarketBid> work = bids;
    if (options.lexicographic_ties) {
        double scale = 1.0;
        for (const MarketBid& bid : bids)
            for (double a : bid.utility) scale = std::max(scale, std::fabs(a));
        const double eps = 1e-9 * scale;
        for (MarketBid& bid : work)
            for (int b = 0; b < bid.blocks(); ++b) bid.utility[b] += (b + 1) * eps;
    }

    lp::Problem p = build_consumer_lp(work, prices);
    lp::SolveOptions sopt;
    sopt.tol = options.tol;
    lp::Solution s = lp::solve(p, sopt);
    if (s.status != lp::Status::optimal)
        throw SolverError("consumer LP not optimal: " + s.message);

    const int T = static_cast<int>(bids.size());
    const int B = bids[0].blocks();
    ConsumptionSolution out;
    out.blocks.assign(T, std::vector<double>(B, 0.0));
    out.total.assign(T, 0.0);
    out.lambda_up.assign(T, 0.0);
    out.lambda_down.assign(T, 0.0);
    out.psi_upper.assign(T, std::vector<double>(B, 0.0));
    out.psi_lower.assign(T, std::vector<double>(B, 0.0));

    for (int t = 0; t < T; ++t) {
        double tot = bids[t].pmin;
        for (int b = 0; b < B; ++b) {
            const double v = std::max(0.0, s.x[consumer_var(b, t, B)]);
            out.blocks[t][b] = v;
            tot += v;
        }
        out.total[t] = tot;
    }
    // rows were added ramp pairs first, caps after
    int row = 0;
    for (int t = 1; t < T; ++t) {
        out.lambda_up[t] = std::max(0.0, s.duals[row++]);
        out.lambda_down[t] = std::max(0.0, s.duals[row++]);
    }
    for (int t = 0; t < T; ++t)
        for (int b = 0; b < B; ++b) out.psi_upper[t][b] = std::max(0.0, s.duals[row++]);
    for (int t = 0; t < T; ++t)
        for (int b = 0; b < B; ++b)
            out.psi_lower[t][b] = std::max(0.0, s.reduced_costs[consumer_var(b, t, B)]);

    // welfare recomputed from the extracted point (the LP objective uses the
    // tie-broken utilities when that mode is on)
    double welfare = 0.0;
    for (int t = 0; t < T; ++t)
        for (int b = 0; b < B; ++b)
            welfare += (bids[t].utility[b] - prices[t]) * out.blocks[t][b];
    out.objective = welfare;
    return out;
}

ConsumptionSolution simulate(const BidModel& model, const data::DataFrame& frame,
                             const SimulateOptions& options) {
    return simulate_bids(materialize_bids(model, frame), frame.price, options);
}

KktResiduals kkt_residuals(const std::vector<MarketBid>& bids,
                           const std::vector<double>& prices,
                           const ConsumptionSolution& sol) {
    const int T = static_cast<int>(bids.size());
    const int B = bids[0].blocks();
    KktResiduals r;

    auto total = [&](int t) { return sol.total[t]; };

    for (int t = 0; t < T; ++t) {
        const double cap = bids[t].block_size();
        const double cap_scale = 1.0 + std::fabs(cap);
        for (int b = 0; b < B; ++b) {
            // stationarity: lambda terms - psi_lower + psi_upper = a - p
            double lhs = -sol.psi_lower[t][b] + sol.psi_upper[t][b];
            if (t + 1 < T) lhs += -sol.lambda_up[t + 1] + sol.lambda_down[t + 1];
            if (t >= 1) lhs += sol.lambda_up[t] - sol.lambda_down[t];
            const double rhs = bids[t].utility[b] - prices[t];
            r.stationarity = std::max(r.stationarity,
                                      std::fabs(lhs - rhs) / (1.0 + std::fabs(rhs)));

            const double x = sol.blocks[t][b];
            r.primal = std::max(r.primal, (x - cap) / cap_scale);
            r.primal = std::max(r.primal, -x / cap_scale);
            r.dual = std::max(r.dual, -sol.psi_upper[t][b]);
            r.dual = std::max(r.dual, -sol.psi_lower[t][b]);
            r.complementarity =
                std::max(r.complementarity,
                         std::fabs(sol.psi_upper[t][b] * (cap - x)) / cap_scale);
            r.complementarity =
                std::max(r.complementarity, std::fabs(sol.psi_lower[t][b] * x) / cap_scale);
        }
        if (t >= 1) {
            const double delta = total(t) - total(t - 1);
            const double up_slack = bids[t].ramp_up - delta;
            const double down_slack = bids[t].ramp_down + delta;
            const double scale = 1.0 + std::fabs(delta) + std::fabs(bids[t].ramp_up) +
                                 std::fabs(bids[t].ramp_down);
            r.primal = std::max(r.primal, -up_slack / scale);
            r.primal = std::max(r.primal, -down_slack / scale);
            r.dual = std::max(r.dual, -sol.lambda_up[t]);
            r.dual = std::max(r.dual, -sol.lambda_down[t]);
            r.complementarity =
                std::max(r.complementarity, std::fabs(sol.lambda_up[t] * up_slack) / scale);
            r.complementarity = std::max(r.complementarity,
                                         std::fabs(sol.lambda_down[t] * down_slack) / scale);
        }
    }
    return r;
}

} // namespace invbid::consumer
