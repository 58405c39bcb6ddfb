#pragma once

#include <string>
#include <vector>

#include "invbid/lp/problem.hpp"

namespace invbid::lp {

enum class Status { optimal, infeasible, unbounded, numerical_failure };

enum class Backend {
    automatic, // simplex below the size threshold, interior point above
    simplex,
    interior_point,
};

struct SolveOptions {
    double tol = 1e-7;
    Backend backend = Backend::automatic;
    int max_iterations = 0; // 0 = backend default
    // automatic backend switches to the interior point above this many
    // rows+columns (the dense tableau stops being reasonable there)
    int simplex_size_limit = 3000;
};

struct Residuals {
    double primal_inf = 0.0;
    double dual_inf = 0.0;
    double comp_gap = 0.0; // |primal obj - dual obj| / (1 + |primal obj|)
};

struct Solution {
    Status status = Status::numerical_failure;
    double objective = 0.0;           // in the problem's declared sense
    std::vector<double> x;            // per variable
    std::vector<double> duals;        // per row, convention in problem.hpp
    std::vector<double> reduced_costs; // per variable
    Residuals residuals;
    int iterations = 0;
    std::string backend;
    std::string message; // diagnostics when not optimal
};

// Deterministic: identical input yields an identical solution. The problem is
// equilibrated (row/column scaling) internally; residuals are reported on the
// original data. Non-convergence is reported as numerical_failure with
// diagnostics in `message`, never as a silent wrong status.
Solution solve(const Problem& problem, const SolveOptions& options = {});

// CPLEX LP text format, for cross-checking instances with external solvers.
std::string to_lp_format(const Problem& problem);
void write_lp_format(const Problem& problem, const std::string& path);

} // namespace invbid::lp
