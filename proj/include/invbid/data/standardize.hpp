#pragma once

#include <vector>

#include "invbid/data/frame.hpp"
#include "invbid/data/ranges.hpp"

namespace invbid::data {

// Zero-mean unit-variance transform per feature, fitted on a training
// window. Indicator columns and (near-)constant columns pass through
// untouched. Estimation happens in standardized space; fitted coefficients
// are mapped back to original units before they leave the estimator.
struct FeatureScaling {
    std::vector<double> mean, sd; // identity: mean 0, sd 1

    static FeatureScaling fit(const DataFrame& frame);

    std::vector<std::vector<double>> apply_columns(
        const std::vector<std::vector<double>>& columns) const;
    FeatureRanges apply(const FeatureRanges& ranges) const;

    // intercept/coefficients of an affine form in standardized features ->
    // the same form in original units
    void unscale_affine(double& intercept, std::vector<double>& coefs) const;
};

} // namespace invbid::data
