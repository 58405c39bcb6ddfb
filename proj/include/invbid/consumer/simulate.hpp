#pragma once

#include <vector>

#include "invbid/consumer/bid_model.hpp"
#include "invbid/consumer/consumer_lp.hpp"

namespace invbid::consumer {

// Optimal price response with the multipliers mapped onto the bid's KKT
// system: lambda for the ramp rows (index 0 unused), psi_upper for the block
// caps, psi_lower for the x >= 0 bounds.
struct ConsumptionSolution {
    std::vector<std::vector<double>> blocks; // [t][b]
    std::vector<double> total;               // pmin_t + sum_b blocks[t][b]
    std::vector<double> lambda_up, lambda_down;
    std::vector<std::vector<double>> psi_upper, psi_lower; // [t][b]
    double objective = 0.0;                  // welfare
};

struct SimulateOptions {
    double tol = 1e-8;
    // Re-solves with utility[b] += b*eps (eps = 1e-9 * utility scale) so tied
    // blocks resolve the same way every run. Off by default: ties are left to
    // the solver and contracts stay objective-level.
    bool lexicographic_ties = false;
};

ConsumptionSolution simulate_bids(const std::vector<MarketBid>& bids,
                                  const std::vector<double>& prices,
                                  const SimulateOptions& options = {});

ConsumptionSolution simulate(const BidModel& model, const data::DataFrame& frame,
                             const SimulateOptions& options = {});

// Inf-norm residuals of the bid-level KKT system (stationarity for each
// block/period, primal and dual feasibility, complementarity), evaluated
// directly from the bid data. Independent of the LP layer's own report.
struct KktResiduals {
    double stationarity = 0.0;
    double primal = 0.0;
    double dual = 0.0;
    double complementarity = 0.0;
    double worst() const;
};

KktResiduals kkt_residuals(const std::vector<MarketBid>& bids,
                           const std::vector<double>& prices,
                           const ConsumptionSolution& solution);

} // namespace invbid::consumer
