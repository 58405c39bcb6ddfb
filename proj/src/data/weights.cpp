#include "invbid/data/weights.hpp"

#include <cmath>

#include "invbid/common.hpp"

namespace invbid::data {

WeightVector compute_weights(const DataFrame& frame, double forgetting) {
    if (forgetting < 0.0) throw ConfigError("forgetting factor must be >= 0");
    const int n = frame.size();
    if (n < 1) throw DataError("cannot weight an empty frame");
    WeightVector out;
    out.w.resize(n);
    for (int t = 0; t < n; ++t) {
        const double frac = static_cast<double>(t + 1) / static_cast<double>(n);
        out.w[t] = frame.gap[t] == 1 ? std::pow(frac, forgetting) : 0.0;
    }
    return out;
}

} // namespace invbid::data
