#pragma once

#include "invbid/lp/problem.hpp"
#include "invbid/lp/solve.hpp"

namespace invbid::lp {

// Inf-norm KKT residuals of a (problem, solution) pair, recomputed from the
// raw problem data. Independent of any solver internals so it can referee
// them.
struct KktReport {
    double stationarity = 0.0;    // gradient condition under the dual convention
    double primal = 0.0;          // row and bound violations
    double dual = 0.0;            // dual sign violations
    double complementarity = 0.0; // max scaled |dual * slack| over rows and bounds
    double worst() const;
};

KktReport check_kkt(const Problem& problem, const Solution& solution);

} // namespace invbid::lp
