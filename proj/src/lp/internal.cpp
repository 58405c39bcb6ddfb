#include "internal.hpp"

#include <algorithm>
#include <cmath>

namespace invbid::lp::detail {

namespace {

// Ruiz equilibration: iterative row/column inf-norm scaling toward 1.
void equilibrate(InternalLp& lp) {
    const int m = static_cast<int>(lp.rows.size());
    const int n = lp.num_vars;
    lp.row_scale.assign(m, 1.0);
    lp.col_scale.assign(n, 1.0);
    if (m == 0) return;

    std::vector<double> rnorm(m), cnorm(n);
    for (int pass = 0; pass < 10; ++pass) {
        std::fill(rnorm.begin(), rnorm.end(), 0.0);
        std::fill(cnorm.begin(), cnorm.end(), 0.0);
        for (int i = 0; i < m; ++i) {
            for (const Term& t : lp.rows[i]) {
                double a = std::fabs(t.coef);
                rnorm[i] = std::max(rnorm[i], a);
                cnorm[t.var] = std::max(cnorm[t.var], a);
            }
        }
        double drift = 0.0;
        for (int i = 0; i < m; ++i) drift = std::max(drift, std::fabs(rnorm[i] - 1.0));
        for (int j = 0; j < n; ++j)
            if (cnorm[j] > 0.0) drift = std::max(drift, std::fabs(cnorm[j] - 1.0));
        if (drift < 0.05) break;

        for (int i = 0; i < m; ++i) rnorm[i] = rnorm[i] > 0.0 ? 1.0 / std::sqrt(rnorm[i]) : 1.0;
        for (int j = 0; j < n; ++j) cnorm[j] = cnorm[j] > 0.0 ? 1.0 / std::sqrt(cnorm[j]) : 1.0;
        for (int i = 0; i < m; ++i) {
            for (Term& t : lp.rows[i]) t.coef *= rnorm[i] * cnorm[t.var];
            lp.rhs[i] *= rnorm[i];
            lp.row_scale[i] *= rnorm[i];
        }
        for (int j = 0; j < n; ++j) {
            lp.c[j] *= cnorm[j];
            if (std::isfinite(lp.lower[j])) lp.lower[j] /= cnorm[j];
            if (std::isfinite(lp.upper[j])) lp.upper[j] /= cnorm[j];
            lp.col_scale[j] *= cnorm[j];
        }
    }
}

} // namespace

InternalLp build_internal(const Problem& p) {
    InternalLp lp;
    const int n = p.num_variables();
    const int m = p.num_constraints();
    lp.num_vars = n;
    const double sign = p.sense() == Sense::maximize ? -1.0 : 1.0;
    lp.c.resize(n);
    lp.lower.resize(n);
    lp.upper.resize(n);
    for (VarId v = 0; v < n; ++v) {
        lp.c[v] = sign * p.objective_coef(v);
        lp.lower[v] = p.lower(v);
        lp.upper[v] = p.upper(v);
    }
    lp.rows.reserve(m);
    lp.rel.reserve(m);
    lp.rhs.reserve(m);
    for (RowId r = 0; r < m; ++r) {
        // merge duplicate terms so backends see one coefficient per variable
        std::vector<Term> terms = p.row_terms(r);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.var < b.var; });
        std::vector<Term> merged;
        merged.reserve(terms.size());
        for (const Term& t : terms) {
            if (!merged.empty() && merged.back().var == t.var)
                merged.back().coef += t.coef;
            else
                merged.push_back(t);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const Term& t) { return t.coef == 0.0; }),
                     merged.end());
        lp.rows.push_back(std::move(merged));
        lp.rel.push_back(p.row_relation(r));
        lp.rhs.push_back(p.row_rhs(r));
    }
    equilibrate(lp);
    return lp;
}

} // namespace invbid::lp::detail
