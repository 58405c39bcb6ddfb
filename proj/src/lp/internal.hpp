#pragma once

// Shared backend-facing form: minimization, equilibrated, rows kept in their
// declared orientation. Each backend applies its own variable transforms.

#include <string>
#include <vector>

#include "invbid/lp/problem.hpp"
#include "invbid/lp/solve.hpp"

namespace invbid::lp::detail {

struct InternalLp {
    int num_vars = 0;
    std::vector<std::vector<Term>> rows;
    std::vector<Relation> rel;
    std::vector<double> rhs;
    std::vector<double> c; // minimization sense
    std::vector<double> lower, upper;
    std::vector<double> row_scale, col_scale;
};

InternalLp build_internal(const Problem& problem);

struct BackendResult {
    Status status = Status::numerical_failure;
    std::vector<double> x;  // equilibrated space
    std::vector<double> y;  // public dual convention, equilibrated space
    std::vector<double> rc; // equilibrated space
    int iterations = 0;
    std::string message;
};

BackendResult solve_simplex(const InternalLp& lp, const SolveOptions& options);
BackendResult solve_ipm(const InternalLp& lp, const SolveOptions& options);

} // namespace invbid::lp::detail
