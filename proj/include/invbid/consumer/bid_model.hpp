#pragma once

#include <string>
#include <vector>

#include "invbid/data/frame.hpp"
#include "invbid/data/ranges.hpp"

namespace invbid::consumer {

// One period's complex market bid: B monotone marginal-utility blocks of
// equal size (pmax-pmin)/B, pick-up/drop-off limits, and consumption bounds.
struct MarketBid {
    std::vector<double> utility; // a_b, non-increasing in b
    double ramp_up = 0.0;        // max hour-to-hour increase of total load
    double ramp_down = 0.0;      // max hour-to-hour decrease
    double pmin = 0.0;
    double pmax = 0.0;

    int blocks() const { return static_cast<int>(utility.size()); }
    double block_size() const { return (pmax - pmin) / blocks(); }

    // returns the violated invariant, or nullptr when the bid is well formed
    const char* violation(double tol = 1e-9) const;
};

// Estimation target: intercept + per-feature affine coefficients for every
// bid parameter. Utility coefficients are shared across blocks, so the whole
// curve shifts with the features and the intercept ordering alone keeps it
// monotone.
struct BidModel {
    int blocks = 0;
    std::vector<double> utility_intercepts; // a_b^0, one per block
    double ramp_up_intercept = 0.0;
    double ramp_down_intercept = 0.0;
    double pmin_intercept = 0.0;
    double pmax_intercept = 0.0;
    std::vector<std::string> feature_names;
    std::vector<double> utility_coefs;   // shared across blocks
    std::vector<double> ramp_up_coefs;
    std::vector<double> ramp_down_coefs;
    std::vector<double> pmin_coefs;
    std::vector<double> pmax_coefs;

    int num_features() const { return static_cast<int>(utility_coefs.size()); }
    void validate() const; // shape checks; throws ConfigError
};

// Affine materialization a_b = a_b^0 + sum_i alpha_i z_i (and likewise for
// every other parameter). `period` only labels the error message.
MarketBid materialize_bid(const BidModel& model, const std::vector<double>& z,
                          int period = -1);
// same arithmetic without the invariant check (for sampling diagnostics)
MarketBid materialize_bid_unchecked(const BidModel& model, const std::vector<double>& z);
std::vector<MarketBid> materialize_bids(const BidModel& model, const data::DataFrame& frame);

} // namespace invbid::consumer
