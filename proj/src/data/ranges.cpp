#include "invbid/data/ranges.hpp"

#include <algorithm>
#include <cmath>

#include "invbid/common.hpp"

namespace invbid::data {

bool FeatureRanges::contains(const std::vector<double>& z, double tol) const {
    if (static_cast<int>(z.size()) != size()) return false;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] < lower[i] - tol || z[i] > upper[i] + tol) return false;
    return true;
}

FeatureRanges feature_ranges(const DataFrame& frame, double margin) {
    if (margin < 0.0) throw ConfigError("range margin must be >= 0");
    if (frame.size() < 1) throw DataError("cannot range an empty frame");
    FeatureRanges out;
    out.lower.reserve(frame.features.size());
    out.upper.reserve(frame.features.size());
    for (const auto& col : frame.features) {
        const auto [mn_it, mx_it] = std::minmax_element(col.begin(), col.end());
        double lo = *mn_it, hi = *mx_it;
        const double span = hi - lo;
        lo -= margin * span;
        hi += margin * span;
        if (is_indicator_column(col)) {
            lo = std::max(lo, 0.0);
            hi = std::min(hi, 1.0);
        }
        out.lower.push_back(lo);
        out.upper.push_back(hi);
    }
    return out;
}

} // namespace invbid::data
