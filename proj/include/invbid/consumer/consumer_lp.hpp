#pragma once

#include <vector>

#include "invbid/consumer/bid_model.hpp"
#include "invbid/lp/problem.hpp"

namespace invbid::consumer {

// Welfare maximization over the horizon:
//   max sum_t sum_b (a_bt - p_t) x_bt
//   s.t. pick-up / drop-off limits between consecutive periods (none into
//        the first period), block caps x_bt <= (pmax_t - pmin_t)/B, x >= 0.
// Row names: ramp_up[t], ramp_down[t] for t >= 2 (1-based), cap[b,t].
lp::Problem build_consumer_lp(const std::vector<MarketBid>& bids,
                              const std::vector<double>& prices);

inline lp::VarId consumer_var(int b, int t, int blocks) {
    return static_cast<lp::VarId>(t * blocks + b);
}

} // namespace invbid::consumer
