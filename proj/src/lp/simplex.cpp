// Dense two-phase tableau simplex. Intended for desk-size instances; the
// interior-point backend covers the large estimation programs. Pivot row
// elimination runs on the kernels lane, which is the hot loop here.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "internal.hpp"
#include "invbid/kernels/kernels.hpp"

namespace invbid::lp::detail {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kZeroTol = 1e-11;

enum class VarKind { shifted, negated, split };

struct VarMap {
    VarKind kind;
    double offset = 0.0; // lower bound (shifted) or upper bound (negated)
    int col = -1;        // primary column
    int neg_col = -1;    // second column of a split variable
    int bound_row = -1;  // appended row "x_hat <= width" for boxed variables
};

struct Tableau {
    int rows = 0, cols = 0;
    std::vector<double> a;    // row-major body
    std::vector<double> rhs;  // per row
    std::vector<double> obj;  // reduced-cost row of the active phase
    double obj_value = 0.0;
    std::vector<int> basis;   // basic column per row

    double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
    const double* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }

    void pivot(int pr, int pc) {
        double* prow = row(pr);
        const double inv = 1.0 / prow[pc];
        for (int j = 0; j < cols; ++j) prow[j] *= inv;
        prow[pc] = 1.0;
        rhs[pr] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == pr) continue;
            double f = row(i)[pc];
            if (std::fabs(f) <= kZeroTol) {
                row(i)[pc] = 0.0;
                continue;
            }
            kernels::axpy(-f, prow, row(i), static_cast<std::size_t>(cols));
            row(i)[pc] = 0.0;
            rhs[i] -= f * rhs[pr];
        }
        double f = obj[pc];
        if (std::fabs(f) > kZeroTol) {
            kernels::axpy(-f, prow, obj.data(), static_cast<std::size_t>(cols));
            obj[pc] = 0.0;
            obj_value -= f * rhs[pr];
        }
        basis[pr] = pc;
    }
};

struct StdForm {
    Tableau t;
    std::vector<VarMap> vmap;
    int num_rows_orig = 0;       // rows of the InternalLp (bound rows follow)
    std::vector<int> unit_col;   // per tableau row: slack/surplus/artificial column
    std::vector<bool> negated;   // row multiplied by -1 to make rhs >= 0
    std::vector<bool> is_art;    // per column
    std::vector<double> cost;    // phase-2 costs per column
    int structural_cols = 0;
};

// Build min c x, A x {<=,=,>=} b, x >= 0 with explicit slack/surplus and
// artificial columns, rhs nonnegative.
bool build_std_form(const InternalLp& lp, StdForm& sf, std::string& error) {
    const int n = lp.num_vars;
    sf.vmap.resize(n);
    int cols = 0;
    int bound_rows = 0;
    for (int j = 0; j < n; ++j) {
        VarMap& vm = sf.vmap[j];
        const double l = lp.lower[j], u = lp.upper[j];
        if (std::isfinite(l)) {
            vm.kind = VarKind::shifted;
            vm.offset = l;
            vm.col = cols++;
            if (std::isfinite(u)) ++bound_rows;
        } else if (std::isfinite(u)) {
            vm.kind = VarKind::negated;
            vm.offset = u;
            vm.col = cols++;
        } else {
            vm.kind = VarKind::split;
            vm.col = cols++;
            vm.neg_col = cols++;
        }
    }
    sf.structural_cols = cols;
    const int m_orig = static_cast<int>(lp.rows.size());
    const int m = m_orig + bound_rows;
    sf.num_rows_orig = m_orig;

    // assemble dense rows in transformed variable space
    std::vector<std::vector<double>> dense(m, std::vector<double>(cols, 0.0));
    std::vector<double> rhs(m, 0.0);
    std::vector<Relation> rel(m, Relation::le);
    for (int i = 0; i < m_orig; ++i) {
        double b = lp.rhs[i];
        for (const Term& t : lp.rows[i]) {
            const VarMap& vm = sf.vmap[t.var];
            switch (vm.kind) {
                case VarKind::shifted:
                    dense[i][vm.col] += t.coef;
                    b -= t.coef * vm.offset;
                    break;
                case VarKind::negated:
                    dense[i][vm.col] -= t.coef;
                    b -= t.coef * vm.offset;
                    break;
                case VarKind::split:
                    dense[i][vm.col] += t.coef;
                    dense[i][vm.neg_col] -= t.coef;
                    break;
            }
        }
        rhs[i] = b;
        rel[i] = lp.rel[i];
    }
    int br = m_orig;
    for (int j = 0; j < n; ++j) {
        VarMap& vm = sf.vmap[j];
        if (vm.kind == VarKind::shifted && std::isfinite(lp.upper[j])) {
            vm.bound_row = br;
            dense[br][vm.col] = 1.0;
            rhs[br] = lp.upper[j] - lp.lower[j];
            rel[br] = Relation::le;
            ++br;
        }
    }

    sf.negated.assign(m, false);
    for (int i = 0; i < m; ++i) {
        if (rhs[i] < 0.0) {
            sf.negated[i] = true;
            rhs[i] = -rhs[i];
            for (double& v : dense[i]) v = -v;
            if (rel[i] == Relation::le)
                rel[i] = Relation::ge;
            else if (rel[i] == Relation::ge)
                rel[i] = Relation::le;
        }
    }

    int n_slack = 0, n_art = 0;
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Relation::eq) ++n_slack;
        if (rel[i] != Relation::le) ++n_art;
    }
    const int total_cols = cols + n_slack + n_art;
    const std::size_t cells = static_cast<std::size_t>(m + 1) * total_cols;
    if (cells > 120u * 1000u * 1000u) {
        error = "instance too large for the dense simplex backend";
        return false;
    }

    Tableau& t = sf.t;
    t.rows = m;
    t.cols = total_cols;
    t.a.assign(static_cast<std::size_t>(m) * total_cols, 0.0);
    t.rhs = rhs;
    t.basis.assign(m, -1);
    sf.is_art.assign(total_cols, false);
    sf.unit_col.assign(m, -1);
    sf.cost.assign(total_cols, 0.0);

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < cols; ++j) t.row(i)[j] = dense[i][j];

    int next = cols;
    for (int i = 0; i < m; ++i) {
        if (rel[i] == Relation::le) {
            t.row(i)[next] = 1.0;
            sf.unit_col[i] = next;
            t.basis[i] = next;
            ++next;
        } else if (rel[i] == Relation::ge) {
            t.row(i)[next] = -1.0;
            sf.unit_col[i] = next;
            ++next;
        }
    }
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Relation::le) {
            t.row(i)[next] = 1.0;
            sf.is_art[next] = true;
            if (rel[i] == Relation::eq) sf.unit_col[i] = next;
            t.basis[i] = next;
            ++next;
        }
    }

    // phase-2 costs in transformed space
    for (int j = 0; j < n; ++j) {
        const VarMap& vm = sf.vmap[j];
        const double cj = lp.c[j];
        switch (vm.kind) {
            case VarKind::shifted: sf.cost[vm.col] += cj; break;
            case VarKind::negated: sf.cost[vm.col] -= cj; break;
            case VarKind::split:
                sf.cost[vm.col] += cj;
                sf.cost[vm.neg_col] -= cj;
                break;
        }
    }
    return true;
}

enum class LoopResult { optimal, unbounded, iteration_limit };

// Dantzig pricing with a Bland fallback after a degenerate streak; the
// combination is deterministic and cannot cycle.
LoopResult simplex_loop(Tableau& t, const std::vector<bool>& locked, double tol,
                        long max_iter, long& iters) {
    const int m = t.rows, nc = t.cols;
    int stall = 0;
    bool bland = false;
    const int stall_limit = std::max(64, m);
    while (iters < max_iter) {
        int enter = -1;
        if (!bland) {
            double best = -tol;
            for (int j = 0; j < nc; ++j) {
                if (locked[j]) continue;
                if (t.obj[j] < best) {
                    best = t.obj[j];
                    enter = j;
                }
            }
        } else {
            for (int j = 0; j < nc; ++j) {
                if (!locked[j] && t.obj[j] < -tol) {
                    enter = j;
                    break;
                }
            }
        }
        if (enter < 0) return LoopResult::optimal;

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        double best_piv = 0.0;
        for (int i = 0; i < m; ++i) {
            const double a = t.row(i)[enter];
            if (a <= kPivotTol) continue;
            const double ratio = t.rhs[i] / a;
            bool better;
            if (leave < 0 || ratio < best_ratio - 1e-12) {
                better = true;
            } else if (ratio <= best_ratio + 1e-12) {
                better = bland ? t.basis[i] < t.basis[leave] : a > best_piv;
            } else {
                better = false;
            }
            if (better) {
                best_ratio = ratio;
                best_piv = a;
                leave = i;
            }
        }
        if (leave < 0) return LoopResult::unbounded;

        const double before = t.obj_value;
        t.pivot(leave, enter);
        ++iters;
        // obj_value holds -z, so progress in the minimization raises it
        if (t.obj_value <= before + 1e-12 * (1.0 + std::fabs(before))) {
            if (++stall > stall_limit) bland = true;
        } else {
            stall = 0;
            bland = false;
        }
    }
    return LoopResult::iteration_limit;
}

} // namespace

BackendResult solve_simplex(const InternalLp& lp, const SolveOptions& options) {
    BackendResult res;
    StdForm sf;
    std::string err;
    if (!build_std_form(lp, sf, err)) {
        res.message = err;
        return res;
    }
    Tableau& t = sf.t;
    const int m = t.rows, nc = t.cols;
    const double tol = options.tol;
    long iters = 0;
    const long max_iter =
        options.max_iterations > 0 ? options.max_iterations
                                   : 2000L + 40L * (static_cast<long>(m) + nc);

    // Phase 1: drive artificials to zero. Artificial columns start basic and
    // are never allowed to re-enter.
    bool have_art = false;
    for (int i = 0; i < m; ++i)
        if (sf.is_art[t.basis[i]]) have_art = true;
    std::vector<bool> locked(nc, false);
    for (int j = 0; j < nc; ++j)
        if (sf.is_art[j]) locked[j] = true;
    if (have_art) {
        t.obj.assign(nc, 0.0);
        t.obj_value = 0.0;
        for (int j = 0; j < nc; ++j)
            if (sf.is_art[j]) t.obj[j] = 1.0;
        for (int i = 0; i < m; ++i) {
            if (!sf.is_art[t.basis[i]]) continue;
            kernels::axpy(-1.0, t.row(i), t.obj.data(), static_cast<std::size_t>(nc));
            t.obj_value -= t.rhs[i];
        }
        LoopResult r = simplex_loop(t, locked, tol, max_iter, iters);
        if (r == LoopResult::iteration_limit) {
            res.message = "phase-1 iteration limit";
            return res;
        }
        if (r == LoopResult::unbounded || -t.obj_value > tol * 10.0) {
            // phase-1 objective is bounded below by 0, so "unbounded" can only
            // be numerical noise; classify by the attained infeasibility
            if (-t.obj_value > tol * 10.0) {
                res.status = Status::infeasible;
                res.iterations = static_cast<int>(iters);
                return res;
            }
            res.message = "phase-1 numerical trouble";
            return res;
        }
        // pivot remaining artificials out where the row is not redundant
        for (int i = 0; i < m; ++i) {
            if (!sf.is_art[t.basis[i]]) continue;
            int pc = -1;
            for (int j = 0; j < nc && pc < 0; ++j)
                if (!sf.is_art[j] && std::fabs(t.row(i)[j]) > kPivotTol) pc = j;
            if (pc >= 0) {
                t.pivot(i, pc);
                ++iters;
            }
        }
    }

    // Phase 2 objective row for the current basis.
    t.obj = sf.cost;
    t.obj_value = 0.0;
    for (int i = 0; i < m; ++i) {
        const double cb = sf.cost[t.basis[i]];
        if (cb == 0.0) continue;
        kernels::axpy(-cb, t.row(i), t.obj.data(), static_cast<std::size_t>(nc));
        t.obj_value -= cb * t.rhs[i];
    }
    for (int i = 0; i < m; ++i) t.obj[t.basis[i]] = 0.0;

    LoopResult r = simplex_loop(t, locked, tol, max_iter, iters);
    res.iterations = static_cast<int>(iters);
    if (r == LoopResult::iteration_limit) {
        res.message = "phase-2 iteration limit";
        return res;
    }
    if (r == LoopResult::unbounded) {
        res.status = Status::unbounded;
        return res;
    }

    // Extract primal values in transformed space.
    std::vector<double> xhat(nc, 0.0);
    for (int i = 0; i < m; ++i) xhat[t.basis[i]] = t.rhs[i];

    const int n = lp.num_vars;
    res.x.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const VarMap& vm = sf.vmap[j];
        switch (vm.kind) {
            case VarKind::shifted: res.x[j] = vm.offset + xhat[vm.col]; break;
            case VarKind::negated: res.x[j] = vm.offset - xhat[vm.col]; break;
            case VarKind::split: res.x[j] = xhat[vm.col] - xhat[vm.neg_col]; break;
        }
    }

    // Duals. Under the public convention the dual of every row equals the
    // final reduced cost of that row's own unit column (slack, surplus, or
    // artificial); negated equality rows flip sign, negated inequalities do
    // not because the convention's sign block flips with the relation.
    std::vector<double> ydual(m, 0.0);
    for (int i = 0; i < m; ++i) ydual[i] = t.obj[sf.unit_col[i]];
    for (int i = 0; i < sf.num_rows_orig; ++i)
        if (sf.negated[i] && lp.rel[i] == Relation::eq) ydual[i] = -ydual[i];

    res.y.assign(ydual.begin(), ydual.begin() + sf.num_rows_orig);

    // Reduced costs in public convention.
    res.rc.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const VarMap& vm = sf.vmap[j];
        switch (vm.kind) {
            case VarKind::shifted: {
                double rc = t.obj[vm.col];
                if (vm.bound_row >= 0) rc -= ydual[vm.bound_row];
                res.rc[j] = rc;
                break;
            }
            case VarKind::negated: res.rc[j] = -t.obj[vm.col]; break;
            case VarKind::split: res.rc[j] = t.obj[vm.col]; break;
        }
    }
    res.status = Status::optimal;
    return res;
}

} // namespace invbid::lp::detail
