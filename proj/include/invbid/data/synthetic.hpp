#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invbid/consumer/bid_model.hpp"
#include "invbid/data/frame.hpp"

namespace invbid::data {

// Forward model for recovery experiments: the load is the optimal price
// response under `truth` plus i.i.d. zero-mean gaussian noise, floored at 0;
// gap = 1 everywhere. `skeleton` supplies timestamps, prices, and features
// (its load column is ignored).
DataFrame generate_synthetic(const consumer::BidModel& truth, const DataFrame& skeleton,
                             double noise_sd, std::uint64_t seed = 1);

} // namespace invbid::data
