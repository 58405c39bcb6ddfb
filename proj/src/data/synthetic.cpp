#include "invbid/data/synthetic.hpp"

#include <algorithm>
#include <random>

#include "invbid/common.hpp"
#include "invbid/consumer/simulate.hpp"

namespace invbid::data {

DataFrame generate_synthetic(const consumer::BidModel& truth, const DataFrame& skeleton,
                             double noise_sd, std::uint64_t seed) {
    if (noise_sd < 0.0) throw ConfigError("noise_sd must be >= 0");
    // materialize_bids validates feasibility and names the offending period
    std::vector<consumer::MarketBid> bids = consumer::materialize_bids(truth, skeleton);
    consumer::ConsumptionSolution sol =
        consumer::simulate_bids(bids, skeleton.price);

    DataFrame out = skeleton;
    out.load.assign(out.size(), 0.0);
    out.gap.assign(out.size(), 1);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, noise_sd);
    for (int t = 0; t < out.size(); ++t) {
        double v = sol.total[t];
        if (noise_sd > 0.0) v += noise(rng);
        out.load[t] = std::max(0.0, v);
    }
    out.validate();
    return out;
}

} // namespace invbid::data
