#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invbid/consumer/bid_model.hpp"

namespace invbid::consumer {

// Human-readable bid file: per period, the consumption bounds, pick-up and
// drop-off limits, and the B (price, energy) steps an aggregator would submit.
void write_bid_file(const std::vector<MarketBid>& bids,
                    const std::vector<std::int64_t>& timestamps,
                    const std::string& path);

std::string format_bid_file(const std::vector<MarketBid>& bids,
                            const std::vector<std::int64_t>& timestamps);

} // namespace invbid::consumer
