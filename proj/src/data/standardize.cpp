#include "invbid/data/standardize.hpp"

#include <cmath>

#include "invbid/common.hpp"

namespace invbid::data {

FeatureScaling FeatureScaling::fit(const DataFrame& frame) {
    FeatureScaling s;
    const int n = frame.size();
    for (const auto& col : frame.features) {
        if (is_indicator_column(col)) {
            s.mean.push_back(0.0);
            s.sd.push_back(1.0);
            continue;
        }
        double mu = 0.0;
        for (double v : col) mu += v;
        mu /= n;
        double var = 0.0;
        for (double v : col) var += (v - mu) * (v - mu);
        var /= n;
        double sd = std::sqrt(var);
        if (sd < 1e-12) {
            // constant column: shift only
            s.mean.push_back(mu);
            s.sd.push_back(1.0);
        } else {
            s.mean.push_back(mu);
            s.sd.push_back(sd);
        }
    }
    return s;
}

std::vector<std::vector<double>> FeatureScaling::apply_columns(
    const std::vector<std::vector<double>>& columns) const {
    if (columns.size() != mean.size()) throw DataError("feature count mismatch in scaling");
    std::vector<std::vector<double>> out = columns;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (double& v : out[i]) v = (v - mean[i]) / sd[i];
    return out;
}

FeatureRanges FeatureScaling::apply(const FeatureRanges& ranges) const {
    if (static_cast<std::size_t>(ranges.size()) != mean.size())
        throw DataError("feature count mismatch in scaling");
    FeatureRanges out = ranges;
    for (int i = 0; i < out.size(); ++i) {
        out.lower[i] = (out.lower[i] - mean[i]) / sd[i];
        out.upper[i] = (out.upper[i] - mean[i]) / sd[i];
    }
    return out;
}

void FeatureScaling::unscale_affine(double& intercept, std::vector<double>& coefs) const {
    if (coefs.size() != mean.size()) throw DataError("feature count mismatch in scaling");
    // a0' + sum a_i' (z - mu)/sd  ==  (a0' - sum a_i' mu/sd) + sum (a_i'/sd) z
    for (std::size_t i = 0; i < coefs.size(); ++i) {
        intercept -= coefs[i] * mean[i] / sd[i];
        coefs[i] /= sd[i];
    }
}

} // namespace invbid::data
