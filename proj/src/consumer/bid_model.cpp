#include "invbid/consumer/bid_model.hpp"

#include <cmath>
#include <sstream>

#include "invbid/common.hpp"

namespace invbid::consumer {

const char* MarketBid::violation(double tol) const {
    if (utility.empty()) return "no utility blocks";
    for (std::size_t b = 0; b + 1 < utility.size(); ++b)
        if (utility[b] < utility[b + 1] - tol) return "utility not monotone non-increasing";
    if (pmin < -tol) return "negative minimum consumption";
    if (pmax < pmin - tol) return "pmax below pmin";
    if (ramp_up < -ramp_down - tol) return "ramp_up below -ramp_down";
    return nullptr;
}

void BidModel::validate() const {
    if (blocks < 1) throw ConfigError("bid model needs at least one block");
    if (static_cast<int>(utility_intercepts.size()) != blocks)
        throw ConfigError("utility intercept count != blocks");
    const std::size_t nf = feature_names.size();
    if (utility_coefs.size() != nf || ramp_up_coefs.size() != nf ||
        ramp_down_coefs.size() != nf || pmin_coefs.size() != nf ||
        pmax_coefs.size() != nf)
        throw ConfigError("coefficient vectors must match the feature list");
    for (int b = 0; b + 1 < blocks; ++b)
        if (utility_intercepts[b] < utility_intercepts[b + 1] - 1e-9)
            throw ConfigError("utility intercepts not monotone non-increasing");
}

namespace {

double affine(double intercept, const std::vector<double>& coefs,
              const std::vector<double>& z) {
    double v = intercept;
    for (std::size_t i = 0; i < coefs.size(); ++i) v += coefs[i] * z[i];
    return v;
}

} // namespace

MarketBid materialize_bid_unchecked(const BidModel& model,
                                    const std::vector<double>& z) {
    if (z.size() != model.utility_coefs.size())
        throw DataError("feature dimension does not match the bid model");
    MarketBid bid;
    const double shift = affine(0.0, model.utility_coefs, z);
    bid.utility.reserve(model.blocks);
    for (int b = 0; b < model.blocks; ++b)
        bid.utility.push_back(model.utility_intercepts[b] + shift);
    bid.ramp_up = affine(model.ramp_up_intercept, model.ramp_up_coefs, z);
    bid.ramp_down = affine(model.ramp_down_intercept, model.ramp_down_coefs, z);
    bid.pmin = affine(model.pmin_intercept, model.pmin_coefs, z);
    bid.pmax = affine(model.pmax_intercept, model.pmax_coefs, z);
    return bid;
}

MarketBid materialize_bid(const BidModel& model, const std::vector<double>& z,
                          int period) {
    MarketBid bid = materialize_bid_unchecked(model, z);
    if (const char* bad = bid.violation()) {
        std::ostringstream os;
        os << "materialized bid violates '" << bad << "'";
        if (period >= 0) os << " at period " << period;
        throw DataError(os.str());
    }
    return bid;
}

std::vector<MarketBid> materialize_bids(const BidModel& model,
                                        const data::DataFrame& frame) {
    model.validate();
    std::vector<MarketBid> bids;
    bids.reserve(frame.size());
    for (int t = 0; t < frame.size(); ++t)
        bids.push_back(materialize_bid(model, frame.feature_row(t), t));
    return bids;
}

} // namespace invbid::consumer
