#include "invbid/lp/solve.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "internal.hpp"
#include "invbid/common.hpp"
#include "invbid/lp/kkt.hpp"

namespace invbid::lp {

Solution solve(const Problem& problem, const SolveOptions& options) {
    problem.validate();
    detail::InternalLp internal = detail::build_internal(problem);

    Backend backend = options.backend;
    if (backend == Backend::automatic) {
        const long size = static_cast<long>(problem.num_variables()) +
                          problem.num_constraints();
        backend = size <= options.simplex_size_limit ? Backend::simplex
                                                     : Backend::interior_point;
    }

    detail::BackendResult br = backend == Backend::simplex
                                   ? detail::solve_simplex(internal, options)
                                   : detail::solve_ipm(internal, options);

    Solution sol;
    sol.status = br.status;
    sol.iterations = br.iterations;
    sol.backend = backend == Backend::simplex ? "simplex" : "ipm";
    sol.message = br.message;
    if (br.status != Status::optimal) return sol;

    const int n = problem.num_variables();
    const int m = problem.num_constraints();
    sol.x.resize(n);
    sol.reduced_costs.resize(n);
    sol.duals.resize(m);
    // rc keeps its sign for both senses: the internal min form uses -d for a
    // maximization, and the public identity d = A'(s.y) - rc absorbs the flip.
    for (int j = 0; j < n; ++j) {
        sol.x[j] = internal.col_scale[j] * br.x[j];
        sol.reduced_costs[j] = br.rc[j] / internal.col_scale[j];
    }
    for (int i = 0; i < m; ++i) sol.duals[i] = internal.row_scale[i] * br.y[i];

    double obj = 0.0;
    for (int j = 0; j < n; ++j) obj += problem.objective_coef(j) * sol.x[j];
    sol.objective = obj;

    KktReport report = check_kkt(problem, sol);
    sol.residuals.primal_inf = report.primal;
    sol.residuals.dual_inf = std::max(report.stationarity, report.dual);
    // duality gap through complementarity: report the scaled bilinear residual
    sol.residuals.comp_gap = report.complementarity;
    return sol;
}

} // namespace invbid::lp
