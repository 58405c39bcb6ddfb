#include "invbid/consumer/bid_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "invbid/common.hpp"
#include "invbid/data/csv.hpp"

namespace invbid::consumer {

std::string format_bid_file(const std::vector<MarketBid>& bids,
                            const std::vector<std::int64_t>& timestamps) {
    if (bids.size() != timestamps.size())
        throw DataError("bid/timestamp length mismatch");
    std::ostringstream os;
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        return std::string(buf);
    };
    for (std::size_t t = 0; t < bids.size(); ++t) {
        const MarketBid& bid = bids[t];
        os << "period " << data::format_timestamp(timestamps[t]) << "\n";
        os << "  bound_min " << num(bid.pmin) << "\n";
        os << "  bound_max " << num(bid.pmax) << "\n";
        os << "  pickup_limit " << num(bid.ramp_up) << "\n";
        os << "  dropoff_limit " << num(bid.ramp_down) << "\n";
        for (int b = 0; b < bid.blocks(); ++b) {
            os << "  step " << (b + 1) << " price " << num(bid.utility[b]) << " energy "
               << num(bid.block_size()) << "\n";
        }
    }
    return os.str();
}

void write_bid_file(const std::vector<MarketBid>& bids,
                    const std::vector<std::int64_t>& timestamps,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << format_bid_file(bids, timestamps);
    if (!out) throw DataError("write failed: " + path);
}

} // namespace invbid::consumer
