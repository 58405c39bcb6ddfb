#pragma once

#include <vector>

#include "invbid/data/frame.hpp"

namespace invbid::data {

struct WeightVector {
    std::vector<double> w;
};

// w_t = gap_t * (t/T)^E with 1-based t, so the newest observation always
// keeps weight gap_T and larger E forgets the past faster.
WeightVector compute_weights(const DataFrame& frame, double forgetting);

} // namespace invbid::data
