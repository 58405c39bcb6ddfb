#include "invbid/lp/kkt.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "invbid/common.hpp"

namespace invbid::lp {

double KktReport::worst() const {
    return std::max(std::max(stationarity, primal), std::max(dual, complementarity));
}

KktReport check_kkt(const Problem& p, const Solution& s) {
    if (s.status != Status::optimal)
        throw SolverError("check_kkt requires an optimal solution");
    const int n = p.num_variables();
    const int m = p.num_constraints();
    KktReport rep;

    // stationarity: c + sum_i sgn_i a_ij y_i = rc (min)  /  d = ... - rc (max)
    std::vector<double> grad(n, 0.0);
    for (RowId i = 0; i < m; ++i) {
        const double sgn = p.row_relation(i) == Relation::ge ? -1.0 : 1.0;
        for (const Term& t : p.row_terms(i)) grad[t.var] += sgn * t.coef * s.duals[i];
    }
    const double flip = p.sense() == Sense::maximize ? -1.0 : 1.0;
    for (VarId j = 0; j < n; ++j) {
        const double r = flip * p.objective_coef(j) + grad[j] - s.reduced_costs[j];
        rep.stationarity = std::max(rep.stationarity, std::fabs(r));
    }

    // primal feasibility and complementarity over rows
    for (RowId i = 0; i < m; ++i) {
        double ax = 0.0;
        for (const Term& t : p.row_terms(i)) ax += t.coef * s.x[t.var];
        const double b = p.row_rhs(i);
        const double scale = 1.0 + std::fabs(b) + std::fabs(ax);
        double viol = 0.0;
        double slack = 0.0;
        switch (p.row_relation(i)) {
            case Relation::le: viol = ax - b; slack = b - ax; break;
            case Relation::ge: viol = b - ax; slack = ax - b; break;
            case Relation::eq: viol = std::fabs(ax - b); slack = 0.0; break;
        }
        rep.primal = std::max(rep.primal, viol / scale);
        if (p.row_relation(i) != Relation::eq) {
            rep.dual = std::max(rep.dual, -s.duals[i]);
            rep.complementarity =
                std::max(rep.complementarity, std::fabs(s.duals[i] * slack) / scale);
        }
    }

    // bounds: feasibility, rc sign rules, and rc complementarity
    for (VarId j = 0; j < n; ++j) {
        const double x = s.x[j], l = p.lower(j), u = p.upper(j);
        const double rc = s.reduced_costs[j];
        const double scale = 1.0 + std::fabs(x);
        if (std::isfinite(l)) rep.primal = std::max(rep.primal, (l - x) / scale);
        if (std::isfinite(u)) rep.primal = std::max(rep.primal, (x - u) / scale);
        if (!std::isfinite(l) && !std::isfinite(u)) {
            rep.dual = std::max(rep.dual, std::fabs(rc));
        } else if (!std::isfinite(u)) {
            rep.dual = std::max(rep.dual, -rc); // lower bound only: rc >= 0
        } else if (!std::isfinite(l)) {
            rep.dual = std::max(rep.dual, rc); // upper bound only: rc <= 0
        }
        if (std::isfinite(l))
            rep.complementarity =
                std::max(rep.complementarity, std::fabs(std::max(rc, 0.0) * (x - l)) / scale);
        if (std::isfinite(u))
            rep.complementarity =
                std::max(rep.complementarity, std::fabs(std::min(rc, 0.0) * (u - x)) / scale);
    }
    return rep;
}

} // namespace invbid::lp
