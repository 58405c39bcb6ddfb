#pragma once

#include <vector>

#include "invbid/data/frame.hpp"

namespace invbid::data {

// Box [lower_i, upper_i] of plausible values per feature. Robust bid
// feasibility is enforced over this box, so it must contain every training
// observation.
struct FeatureRanges {
    std::vector<double> lower, upper;
    int size() const { return static_cast<int>(lower.size()); }
    bool contains(const std::vector<double>& z, double tol = 0.0) const;
};

// Observed min/max widened by margin*span on each side; 0/1 indicator
// columns are intersected with [0,1]. A constant column keeps a degenerate
// range regardless of margin.
FeatureRanges feature_ranges(const DataFrame& frame, double margin = 0.1);

} // namespace invbid::data
