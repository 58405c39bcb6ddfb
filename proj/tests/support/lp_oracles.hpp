#pragma once

// Brute-force vertex enumeration for tiny LPs (n <= 5): solves every n-subset
// of potentially active constraints (rows and bounds) and takes the best
// feasible point. Independent of the solver code paths on purpose.

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <vector>

#include "invbid/lp/problem.hpp"

namespace testsupport {

inline std::optional<double> enumerate_lp_optimum(const invbid::lp::Problem& p,
                                                  double feas_tol = 1e-7) {
    using namespace invbid::lp;
    const int n = p.num_variables();
    const int m = p.num_constraints();
    if (n > 5) return std::nullopt;

    struct Plane {
        Eigen::VectorXd a;
        double b;
    };
    std::vector<Plane> planes;
    for (RowId r = 0; r < m; ++r) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
        for (const Term& t : p.row_terms(r)) a[t.var] += t.coef;
        planes.push_back({a, p.row_rhs(r)});
    }
    for (VarId v = 0; v < n; ++v) {
        if (std::isfinite(p.lower(v))) {
            Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
            a[v] = 1.0;
            planes.push_back({a, p.lower(v)});
        }
        if (std::isfinite(p.upper(v))) {
            Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
            a[v] = 1.0;
            planes.push_back({a, p.upper(v)});
        }
    }
    const int np = static_cast<int>(planes.size());
    if (np < n) return std::nullopt;

    auto feasible = [&](const Eigen::VectorXd& x) {
        for (RowId r = 0; r < m; ++r) {
            double ax = 0.0;
            for (const Term& t : p.row_terms(r)) ax += t.coef * x[t.var];
            const double b = p.row_rhs(r);
            switch (p.row_relation(r)) {
                case Relation::le:
                    if (ax > b + feas_tol) return false;
                    break;
                case Relation::ge:
                    if (ax < b - feas_tol) return false;
                    break;
                case Relation::eq:
                    if (std::fabs(ax - b) > feas_tol) return false;
                    break;
            }
        }
        for (VarId v = 0; v < n; ++v) {
            if (x[v] < p.lower(v) - feas_tol || x[v] > p.upper(v) + feas_tol) return false;
        }
        return true;
    };

    std::optional<double> best;
    std::vector<int> idx(n);
    // iterate over all n-combinations of planes
    std::vector<int> comb(n);
    for (int i = 0; i < n; ++i) comb[i] = i;
    auto advance = [&]() {
        int i = n - 1;
        while (i >= 0 && comb[i] == np - n + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd b(n);
    do {
        for (int i = 0; i < n; ++i) {
            A.row(i) = planes[comb[i]].a.transpose();
            b[i] = planes[comb[i]].b;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        if (!lu.isInvertible()) continue;
        Eigen::VectorXd x = lu.solve(b);
        if (!feasible(x)) continue;
        double obj = 0.0;
        for (VarId v = 0; v < n; ++v) obj += p.objective_coef(v) * x[v];
        if (!best) {
            best = obj;
        } else if (p.sense() == Sense::maximize) {
            best = std::max(*best, obj);
        } else {
            best = std::min(*best, obj);
        }
    } while (advance());
    return best;
}

} // namespace testsupport
