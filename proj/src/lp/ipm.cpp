// Mehrotra predictor-corrector interior-point method on the regularized
// augmented system, factorized with Eigen's simplicial LDLT. Carries the
// large inverse-estimation programs that the dense simplex cannot touch.
// The KKT matrix pattern is fixed across iterations: only the barrier
// diagonal changes, so symbolic analysis happens once.

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "internal.hpp"

namespace invbid::lp::detail {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

enum class VType { free_var, nonneg, boxed };

struct IpmForm {
    // min c.x  s.t.  A x = b, typed variables (boxed: 0 <= x <= width)
    SpMat A;
    Vec b, c;
    std::vector<VType> type;
    std::vector<double> width;
    int n = 0, m = 0;
    // mapping back to InternalLp variables
    struct Back {
        int col = -1;       // -1: fixed variable, takes value `offset`
        double sign = 1.0;  // x_orig = offset + sign * x_internal
        double offset = 0.0;
    };
    std::vector<Back> back;
    std::vector<int> slack_col; // per row, -1 for equalities
};

IpmForm build_ipm_form(const InternalLp& lp) {
    IpmForm f;
    const int n0 = lp.num_vars;
    const int m = static_cast<int>(lp.rows.size());
    f.back.resize(n0);
    std::vector<Eigen::Triplet<double>> trips;

    int col = 0;
    for (int j = 0; j < n0; ++j) {
        const double l = lp.lower[j], u = lp.upper[j];
        IpmForm::Back& bk = f.back[j];
        if (std::isfinite(l) && std::isfinite(u) && u - l <= 1e-14) {
            bk.col = -1;
            bk.offset = l;
            continue;
        }
        bk.col = col++;
        if (std::isfinite(l)) {
            bk.offset = l;
            f.type.push_back(std::isfinite(u) ? VType::boxed : VType::nonneg);
            f.width.push_back(std::isfinite(u) ? u - l : 0.0);
        } else if (std::isfinite(u)) {
            bk.offset = u;
            bk.sign = -1.0;
            f.type.push_back(VType::nonneg);
            f.width.push_back(0.0);
        } else {
            f.type.push_back(VType::free_var);
            f.width.push_back(0.0);
        }
    }
    f.slack_col.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        if (lp.rel[i] != Relation::eq) {
            f.slack_col[i] = col++;
            f.type.push_back(VType::nonneg);
            f.width.push_back(0.0);
        }
    }
    f.n = col;
    f.m = m;
    f.c = Vec::Zero(f.n);
    f.b = Vec::Zero(m);
    for (int j = 0; j < n0; ++j) {
        const IpmForm::Back& bk = f.back[j];
        if (bk.col >= 0) f.c[bk.col] = bk.sign * lp.c[j];
    }
    for (int i = 0; i < m; ++i) {
        double b = lp.rhs[i];
        for (const Term& t : lp.rows[i]) {
            const IpmForm::Back& bk = f.back[t.var];
            b -= t.coef * bk.offset;
            if (bk.col >= 0) trips.emplace_back(i, bk.col, t.coef * bk.sign);
        }
        if (f.slack_col[i] >= 0)
            trips.emplace_back(i, f.slack_col[i], lp.rel[i] == Relation::le ? 1.0 : -1.0);
        f.b[i] = b;
    }
    f.A.resize(m, f.n);
    f.A.setFromTriplets(trips.begin(), trips.end());
    f.A.makeCompressed();
    return f;
}

struct KktSystem {
    SpMat K; // lower triangle of [-(Theta+g) A'; A d]
    std::vector<std::ptrdiff_t> diag_pos;
    Eigen::SimplicialLDLT<SpMat, Eigen::Lower> ldlt;
    const IpmForm* f = nullptr;
    double gamma = 1e-8, delta = 1e-8;
    bool analyzed = false;

    void build(const IpmForm& form) {
        f = &form;
        const int n = form.n, m = form.m;
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(form.A.nonZeros() + n + m);
        for (int j = 0; j < n; ++j) trips.emplace_back(j, j, -1.0);
        for (int k = 0; k < form.A.outerSize(); ++k)
            for (SpMat::InnerIterator it(form.A, k); it; ++it)
                trips.emplace_back(n + static_cast<int>(it.row()), static_cast<int>(it.col()),
                                   it.value());
        for (int i = 0; i < m; ++i) trips.emplace_back(n + i, n + i, delta);
        K.resize(n + m, n + m);
        K.setFromTriplets(trips.begin(), trips.end());
        K.makeCompressed();
        diag_pos.resize(n);
        for (int j = 0; j < n; ++j) {
            std::ptrdiff_t pos = -1;
            for (std::ptrdiff_t p = K.outerIndexPtr()[j]; p < K.outerIndexPtr()[j + 1]; ++p) {
                if (K.innerIndexPtr()[p] == j) {
                    pos = p;
                    break;
                }
            }
            diag_pos[j] = pos;
        }
    }

    bool factorize(const Vec& theta) {
        const int n = f->n;
        for (int j = 0; j < n; ++j) K.valuePtr()[diag_pos[j]] = -(theta[j] + gamma);
        if (!analyzed) {
            ldlt.analyzePattern(K);
            analyzed = true;
        }
        ldlt.factorize(K);
        return ldlt.info() == Eigen::Success;
    }

    // Solve the augmented system with one step of iterative refinement
    // against the unregularized operator.
    void solve(const Vec& theta, const Vec& r1, const Vec& r2, Vec& dx, Vec& dy) const {
        const int n = f->n, m = f->m;
        Vec rhs(n + m);
        rhs.head(n) = r1;
        rhs.tail(m) = r2;
        Vec sol = ldlt.solve(rhs);
        Vec res(n + m);
        res.head(n) = r1 + theta.cwiseProduct(sol.head(n)) - f->A.transpose() * sol.tail(m);
        res.tail(m) = r2 - f->A * sol.head(n);
        sol += ldlt.solve(res);
        dx = sol.head(n);
        dy = sol.tail(m);
    }
};

struct Iterate {
    Vec x, y, z, w, s;
};

double step_length(const Vec& v, const Vec& dv, const std::vector<char>& active) {
    double a = 1.0;
    for (int j = 0; j < v.size(); ++j) {
        if (!active[j]) continue;
        if (dv[j] < 0.0) a = std::min(a, -v[j] / dv[j]);
    }
    return a;
}

} // namespace

BackendResult solve_ipm(const InternalLp& lp, const SolveOptions& options) {
    BackendResult res;
    IpmForm f = build_ipm_form(lp);
    const int n = f.n, m = f.m;
    if (n == 0 || m == 0) {
        // fully fixed or unconstrained corner cases fall back to the simplex
        return solve_simplex(lp, options);
    }

    std::vector<char> lo(n, 0), up(n, 0);
    int count = 0;
    for (int j = 0; j < n; ++j) {
        if (f.type[j] != VType::free_var) {
            lo[j] = 1;
            ++count;
        }
        if (f.type[j] == VType::boxed) {
            up[j] = 1;
            ++count;
        }
    }

    KktSystem kkt;
    kkt.build(f);

    // Starting point from a Theta = I least-squares solve.
    Iterate it;
    {
        Vec theta = Vec::Ones(n);
        if (!kkt.factorize(theta)) {
            res.message = "ipm: initial factorization failed";
            return res;
        }
        Vec dx, dy;
        kkt.solve(theta, Vec::Zero(n), f.b, dx, dy);
        it.x = dx;
        Vec px, py;
        kkt.solve(theta, -f.c, Vec::Zero(m), px, py);
        it.y = py;
        Vec ztilde = f.c - f.A.transpose() * it.y;

        it.z = Vec::Zero(n);
        it.w = Vec::Zero(n);
        it.s = Vec::Zero(n);
        double xshift = 0.0, zshift = 0.0;
        for (int j = 0; j < n; ++j) {
            if (lo[j]) xshift = std::max(xshift, -1.5 * it.x[j]);
            if (lo[j]) zshift = std::max(zshift, -1.5 * ztilde[j]);
        }
        double dots = 0.0, sumz = 0.0, sumx = 0.0;
        for (int j = 0; j < n; ++j) {
            if (!lo[j]) continue;
            dots += (it.x[j] + xshift) * (ztilde[j] + zshift);
            sumx += it.x[j] + xshift;
            sumz += ztilde[j] + zshift;
        }
        const double dx2 = xshift + 0.5 * dots / std::max(sumz, 1e-8);
        const double dz2 = zshift + 0.5 * dots / std::max(sumx, 1e-8);
        for (int j = 0; j < n; ++j) {
            if (!lo[j]) continue;
            it.x[j] += dx2 + 1e-4;
            it.z[j] = (up[j] ? std::fabs(ztilde[j]) : ztilde[j]) + dz2 + 1e-4;
            if (up[j]) {
                // keep boxed variables strictly interior
                it.x[j] = std::clamp(it.x[j], 0.05 * f.width[j], 0.95 * f.width[j]);
                it.s[j] = f.width[j] - it.x[j];
                it.w[j] = it.z[j] * 0.5 + 1e-4;
            }
        }
    }

    const double tol = options.tol;
    const int max_iter = options.max_iterations > 0 ? options.max_iterations : 120;
    const double bnorm = 1.0 + f.b.lpNorm<Eigen::Infinity>();
    const double cnorm = 1.0 + f.c.lpNorm<Eigen::Infinity>();

    Vec rp(m), rd(n), ru(n), theta(n);
    Vec rxz(n), rsw(n), rhat(n);
    Vec dx_a(n), dy_a(m), dz_a(n), dw_a(n), ds_a(n);
    Vec dx(n), dy(m), dz(n), dw(n), ds(n);
    int tiny_steps = 0;

    for (int iter = 0; iter < max_iter; ++iter) {
        rp = f.b - f.A * it.x;
        rd = f.c - f.A.transpose() * it.y - it.z + it.w;
        for (int j = 0; j < n; ++j) ru[j] = up[j] ? f.width[j] - it.x[j] - it.s[j] : 0.0;

        double mu = 0.0;
        for (int j = 0; j < n; ++j) {
            if (lo[j]) mu += it.x[j] * it.z[j];
            if (up[j]) mu += it.s[j] * it.w[j];
        }
        mu = count > 0 ? mu / count : 0.0;

        double pobj = f.c.dot(it.x);
        double dobj = f.b.dot(it.y);
        for (int j = 0; j < n; ++j)
            if (up[j]) dobj -= f.width[j] * it.w[j];
        const double relp = rp.lpNorm<Eigen::Infinity>() / bnorm;
        const double reld = rd.lpNorm<Eigen::Infinity>() / cnorm;
        const double relg = std::fabs(pobj - dobj) / (1.0 + std::fabs(pobj));
        res.iterations = iter;
        if (relp <= tol && reld <= tol && relg <= tol) {
            res.status = Status::optimal;
            break;
        }
        if (!std::isfinite(mu) || mu > 1e14 || it.x.lpNorm<Eigen::Infinity>() > 1e16) {
            std::ostringstream os;
            os << "ipm diverged: relp=" << relp << " reld=" << reld << " relg=" << relg
               << " (infeasible or unbounded instance, or numerical trouble)";
            res.message = os.str();
            return res;
        }

        for (int j = 0; j < n; ++j) {
            double t = 0.0;
            if (lo[j]) t += it.z[j] / it.x[j];
            if (up[j]) t += it.w[j] / it.s[j];
            theta[j] = t;
        }
        bool ok = kkt.factorize(theta);
        for (int bump = 0; !ok && bump < 3; ++bump) {
            kkt.gamma *= 100.0;
            kkt.delta *= 100.0;
            ok = kkt.factorize(theta);
        }
        if (!ok) {
            res.message = "ipm: factorization failed";
            return res;
        }

        // affine predictor
        for (int j = 0; j < n; ++j) {
            rxz[j] = lo[j] ? -it.x[j] * it.z[j] : 0.0;
            rsw[j] = up[j] ? -it.s[j] * it.w[j] : 0.0;
        }
        auto form_rhat = [&]() {
            for (int j = 0; j < n; ++j) {
                double v = rd[j];
                if (lo[j]) v -= rxz[j] / it.x[j];
                if (up[j]) v += rsw[j] / it.s[j] - it.w[j] * ru[j] / it.s[j];
                rhat[j] = v;
            }
        };
        auto recover = [&](const Vec& dxv, Vec& dzv, Vec& dwv, Vec& dsv) {
            for (int j = 0; j < n; ++j) {
                dzv[j] = lo[j] ? (rxz[j] - it.z[j] * dxv[j]) / it.x[j] : 0.0;
                if (up[j]) {
                    dsv[j] = ru[j] - dxv[j];
                    dwv[j] = (rsw[j] - it.w[j] * dsv[j]) / it.s[j];
                } else {
                    dsv[j] = 0.0;
                    dwv[j] = 0.0;
                }
            }
        };

        form_rhat();
        kkt.solve(theta, rhat, rp, dx_a, dy_a);
        recover(dx_a, dz_a, dw_a, ds_a);

        const double apa = std::min(step_length(it.x, dx_a, lo), step_length(it.s, ds_a, up));
        const double ada = std::min(step_length(it.z, dz_a, lo), step_length(it.w, dw_a, up));
        double mu_aff = 0.0;
        for (int j = 0; j < n; ++j) {
            if (lo[j]) mu_aff += (it.x[j] + apa * dx_a[j]) * (it.z[j] + ada * dz_a[j]);
            if (up[j]) mu_aff += (it.s[j] + apa * ds_a[j]) * (it.w[j] + ada * dw_a[j]);
        }
        mu_aff = count > 0 ? mu_aff / count : 0.0;
        double sigma = mu > 0.0 ? std::pow(mu_aff / mu, 3.0) : 0.0;
        sigma = std::clamp(sigma, 1e-8, 1.0);

        // corrector
        for (int j = 0; j < n; ++j) {
            if (lo[j]) rxz[j] = sigma * mu - it.x[j] * it.z[j] - dx_a[j] * dz_a[j];
            if (up[j]) rsw[j] = sigma * mu - it.s[j] * it.w[j] - ds_a[j] * dw_a[j];
        }
        form_rhat();
        kkt.solve(theta, rhat, rp, dx, dy);
        recover(dx, dz, dw, ds);

        double ap = std::min(step_length(it.x, dx, lo), step_length(it.s, ds, up));
        double ad = std::min(step_length(it.z, dz, lo), step_length(it.w, dw, up));
        ap = std::min(1.0, 0.9995 * ap);
        ad = std::min(1.0, 0.9995 * ad);

        it.x += ap * dx;
        it.s += ap * ds;
        it.y += ad * dy;
        it.z += ad * dz;
        it.w += ad * dw;

        if (ap < 1e-10 && ad < 1e-10) {
            if (++tiny_steps >= 3) {
                std::ostringstream os;
                os << "ipm stalled at relp=" << relp << " reld=" << reld << " relg=" << relg;
                res.message = os.str();
                return res;
            }
        } else {
            tiny_steps = 0;
        }
        if (iter + 1 == max_iter) {
            std::ostringstream os;
            os << "ipm iteration limit: relp=" << relp << " reld=" << reld << " relg=" << relg;
            res.message = os.str();
            return res;
        }
    }

    // Map back to the equilibrated problem's variables and public duals.
    const int n0 = lp.num_vars;
    res.x.assign(n0, 0.0);
    res.rc.assign(n0, 0.0);
    Vec rc_uniform = f.c - f.A.transpose() * it.y; // = z - w up to the dual residual
    for (int j = 0; j < n0; ++j) {
        const IpmForm::Back& bk = f.back[j];
        if (bk.col < 0) {
            res.x[j] = bk.offset;
            res.rc[j] = lp.c[j]; // completed by the dual sweep below
        } else {
            res.x[j] = bk.offset + bk.sign * it.x[bk.col];
            if (f.type[bk.col] == VType::free_var)
                res.rc[j] = bk.sign * rc_uniform[bk.col];
            else
                res.rc[j] = bk.sign * (it.z[bk.col] - it.w[bk.col]);
        }
    }
    res.y.assign(m, 0.0);
    for (int i = 0; i < m; ++i)
        res.y[i] = lp.rel[i] == Relation::ge ? it.y[i] : -it.y[i];
    // finish rc for eliminated (fixed) variables: c_j + sum_i sgn_i a_ij y_i
    for (int i = 0; i < m; ++i) {
        const double sgn = lp.rel[i] == Relation::ge ? -1.0 : 1.0;
        for (const Term& t : lp.rows[i]) {
            if (f.back[t.var].col < 0) res.rc[t.var] += sgn * t.coef * res.y[i];
        }
    }
    return res;
}

} // namespace invbid::lp::detail
