#include "invbid/consumer/consumer_lp.hpp"

#include <string>

#include "invbid/common.hpp"

namespace invbid::consumer {

lp::Problem build_consumer_lp(const std::vector<MarketBid>& bids,
                              const std::vector<double>& prices) {
    const int T = static_cast<int>(bids.size());
    if (T < 1) throw DataError("empty bid horizon");
    if (prices.size() != bids.size()) throw DataError("price/bid length mismatch");
    const int B = bids[0].blocks();
    for (const MarketBid& bid : bids) {
        if (bid.blocks() != B) throw DataError("inconsistent block count");
        if (const char* bad = bid.violation()) throw DataError(bad);
    }

    lp::Problem p;
    p.set_sense(lp::Sense::maximize);
    for (int t = 0; t < T; ++t) {
        for (int b = 0; b < B; ++b) {
            const lp::VarId v = p.add_variable(
                "x[" + std::to_string(b + 1) + "," + std::to_string(t + 1) + "]", 0.0);
            p.add_objective_term(v, bids[t].utility[b] - prices[t]);
        }
    }
    // ramp rows couple totals pmin_t + sum_b x_bt of consecutive periods; the
    // pmin terms are constants here and move to the rhs
    for (int t = 1; t < T; ++t) {
        std::vector<lp::Term> up, down;
        for (int b = 0; b < B; ++b) {
            up.push_back({consumer_var(b, t, B), 1.0});
            up.push_back({consumer_var(b, t - 1, B), -1.0});
            down.push_back({consumer_var(b, t, B), -1.0});
            down.push_back({consumer_var(b, t - 1, B), 1.0});
        }
        const double dp = bids[t].pmin - bids[t - 1].pmin;
        p.add_constraint("ramp_up[" + std::to_string(t + 1) + "]", up, lp::Relation::le,
                         bids[t].ramp_up - dp);
        p.add_constraint("ramp_down[" + std::to_string(t + 1) + "]", down,
                         lp::Relation::le, bids[t].ramp_down + dp);
    }
    for (int t = 0; t < T; ++t) {
        for (int b = 0; b < B; ++b) {
            p.add_constraint(
                "cap[" + std::to_string(b + 1) + "," + std::to_string(t + 1) + "]",
                {{consumer_var(b, t, B), 1.0}}, lp::Relation::le, bids[t].block_size());
        }
    }
    return p;
}

} // namespace invbid::consumer
