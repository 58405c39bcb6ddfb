#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace invbid::data {

// Aligned hourly series of price, measured load, features, and gap flags.
// Load is NaN exactly where gap == 0 allows it to be missing; all other
// invariants are enforced by validate().
struct DataFrame {
    std::vector<std::int64_t> timestamps; // epoch seconds, uniform spacing
    std::vector<double> price;
    std::vector<double> load;
    std::vector<std::uint8_t> gap; // 1 = correctly measured
    std::vector<std::string> feature_names;
    std::vector<std::vector<double>> features; // column major: [feature][t]

    int size() const { return static_cast<int>(timestamps.size()); }
    int num_features() const { return static_cast<int>(features.size()); }
    std::int64_t step_seconds() const;

    // half-open [begin, end)
    DataFrame slice(int begin, int end) const;
    std::vector<double> feature_row(int t) const;

    void validate() const; // throws DataError
};

// true when every finite value in the column is 0 or 1
bool is_indicator_column(const std::vector<double>& column);

} // namespace invbid::data
