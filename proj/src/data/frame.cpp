#include "invbid/data/frame.hpp"

#include <cmath>

#include "invbid/common.hpp"

namespace invbid::data {

std::int64_t DataFrame::step_seconds() const {
    if (timestamps.size() < 2) return 0;
    return timestamps[1] - timestamps[0];
}

DataFrame DataFrame::slice(int begin, int end) const {
    if (begin < 0 || end > size() || begin > end)
        throw DataError("slice out of range");
    DataFrame out;
    out.timestamps.assign(timestamps.begin() + begin, timestamps.begin() + end);
    out.price.assign(price.begin() + begin, price.begin() + end);
    out.load.assign(load.begin() + begin, load.begin() + end);
    out.gap.assign(gap.begin() + begin, gap.begin() + end);
    out.feature_names = feature_names;
    out.features.reserve(features.size());
    for (const auto& col : features)
        out.features.emplace_back(col.begin() + begin, col.begin() + end);
    return out;
}

std::vector<double> DataFrame::feature_row(int t) const {
    std::vector<double> row(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) row[i] = features[i][t];
    return row;
}

void DataFrame::validate() const {
    const std::size_t n = timestamps.size();
    if (n < 2) throw DataError("dataset needs at least two periods");
    if (price.size() != n || load.size() != n || gap.size() != n)
        throw DataError("column lengths differ");
    if (feature_names.size() != features.size())
        throw DataError("feature name/column mismatch");
    for (const auto& col : features)
        if (col.size() != n) throw DataError("feature column length differs");

    const std::int64_t step = timestamps[1] - timestamps[0];
    if (step <= 0) throw DataError("non-uniform time step");
    for (std::size_t t = 1; t < n; ++t)
        if (timestamps[t] - timestamps[t - 1] != step)
            throw DataError("non-uniform time step");

    for (std::size_t t = 0; t < n; ++t) {
        if (gap[t] != 0 && gap[t] != 1) throw DataError("gap flag must be 0 or 1");
        if (gap[t] == 1) {
            if (!std::isfinite(load[t])) throw DataError("missing load with gap=1");
            if (load[t] < 0.0) throw DataError("negative load with gap=1");
        }
        if (!std::isfinite(price[t])) throw DataError("non-finite price");
    }
    for (const auto& col : features)
        for (double v : col)
            if (!std::isfinite(v)) throw DataError("non-finite feature value");
}

bool is_indicator_column(const std::vector<double>& column) {
    for (double v : column)
        if (v != 0.0 && v != 1.0) return false;
    return true;
}

} // namespace invbid::data
