#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "invbid/lp/kkt.hpp"
#include "invbid/lp/problem.hpp"
#include "invbid/lp/solve.hpp"
#include "support/lp_oracles.hpp"

using namespace invbid;
using namespace invbid::lp;

TEST_CASE("one-variable maximum with an active row") {
    Problem p;
    VarId x = p.add_variable("x", 0.0);
    p.set_sense(Sense::maximize);
    p.add_objective_term(x, 1.0);
    p.add_constraint("cap", {{x, 1.0}}, Relation::le, 3.0);
    Solution s = solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.objective == doctest::Approx(3.0));
    CHECK(s.x[0] == doctest::Approx(3.0));
    CHECK(s.duals[0] == doctest::Approx(1.0));
    KktReport rep = check_kkt(p, s);
    CHECK(rep.worst() <= 1e-7);
}

TEST_CASE("contradictory rows are infeasible") {
    Problem p;
    VarId x = p.add_variable("x");
    p.add_constraint("low", {{x, 1.0}}, Relation::ge, 1.0);
    p.add_constraint("high", {{x, 1.0}}, Relation::le, 0.0);
    Solution s = solve(p);
    CHECK(s.status == Status::infeasible);
}

TEST_CASE("unbounded ray is classified") {
    Problem p;
    VarId x = p.add_variable("x", 0.0);
    p.set_sense(Sense::maximize);
    p.add_objective_term(x, 1.0);
    p.add_constraint("floor", {{x, 1.0}}, Relation::ge, 1.0);
    Solution s = solve(p);
    CHECK(s.status == Status::unbounded);
}

TEST_CASE("equality rows and free variables") {
    Problem p;
    VarId x = p.add_variable("x");
    VarId y = p.add_variable("y");
    p.add_objective_term(x, 1.0);
    p.add_objective_term(y, 1.0);
    p.add_constraint("sum", {{x, 1.0}, {y, 1.0}}, Relation::eq, 2.0);
    p.add_constraint("diff", {{x, 1.0}, {y, -1.0}}, Relation::eq, 0.0);
    Solution s = solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.x[0] == doctest::Approx(1.0));
    CHECK(s.x[1] == doctest::Approx(1.0));
}

TEST_CASE("upper-bounded variable leaves a nonpositive reduced cost") {
    Problem p;
    VarId x = p.add_variable("x", 0.0, 2.5);
    p.add_objective_term(x, -1.0);
    p.add_constraint("noop", {{x, 1.0}}, Relation::le, 10.0);
    Solution s = solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.x[0] == doctest::Approx(2.5));
    CHECK(s.reduced_costs[0] <= 1e-9);
    CHECK(check_kkt(p, s).worst() <= 1e-7);
}

namespace {

Problem random_box_lp(std::mt19937_64& rng, int n, int m) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_real_distribution<double> pos(0.1, 1.0);
    Problem p;
    std::vector<double> x0(n);
    for (int j = 0; j < n; ++j) {
        const double ub = 0.5 + 2.5 * pos(rng);
        p.add_variable("x" + std::to_string(j), 0.0, ub);
        x0[j] = ub * 0.5 * pos(rng);
    }
    p.set_sense(rng() % 2 == 0 ? Sense::maximize : Sense::minimize);
    for (int j = 0; j < n; ++j) p.add_objective_term(j, coef(rng));
    for (int i = 0; i < m; ++i) {
        std::vector<Term> terms;
        double ax = 0.0;
        for (int j = 0; j < n; ++j) {
            const double a = coef(rng);
            terms.push_back({j, a});
            ax += a * x0[j];
        }
        // keep x0 feasible so the instance never degenerates to empty
        if (rng() % 2 == 0)
            p.add_constraint("r" + std::to_string(i), terms, Relation::le, ax + pos(rng));
        else
            p.add_constraint("r" + std::to_string(i), terms, Relation::ge, ax - pos(rng));
    }
    return p;
}

} // namespace

TEST_CASE("random small LPs match the vertex enumeration oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Problem p = random_box_lp(rng, 5, 10);
        Solution s = solve(p);
        REQUIRE(s.status == Status::optimal);
        auto oracle = testsupport::enumerate_lp_optimum(p);
        REQUIRE(oracle.has_value());
        CHECK(s.objective ==
              doctest::Approx(*oracle).epsilon(1e-6).scale(1.0 + std::fabs(*oracle)));
        CHECK(check_kkt(p, s).worst() <= 1e-6);
    }
}

TEST_CASE("simplex and interior point agree on a mid-size instance") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        Problem p = random_box_lp(rng, 20, 30);
        SolveOptions simplex_opt;
        simplex_opt.backend = Backend::simplex;
        SolveOptions ipm_opt;
        ipm_opt.backend = Backend::interior_point;
        Solution a = solve(p, simplex_opt);
        Solution b = solve(p, ipm_opt);
        REQUIRE(a.status == Status::optimal);
        REQUIRE(b.status == Status::optimal);
        CHECK(a.objective ==
              doctest::Approx(b.objective).epsilon(1e-5).scale(1.0 + std::fabs(a.objective)));
        CHECK(check_kkt(p, a).worst() <= 1e-6);
        CHECK(check_kkt(p, b).worst() <= 1e-5);
    }
}

TEST_CASE("permuting constraint order leaves the objective unchanged") {
    std::mt19937_64 rng(23);
    Problem p = random_box_lp(rng, 5, 8);
    Solution base = solve(p);
    REQUIRE(base.status == Status::optimal);

    Problem q;
    for (VarId v = 0; v < p.num_variables(); ++v)
        q.add_variable(p.variable_name(v), p.lower(v), p.upper(v));
    q.set_sense(p.sense());
    for (VarId v = 0; v < p.num_variables(); ++v)
        q.add_objective_term(v, p.objective_coef(v));
    std::vector<RowId> order;
    for (RowId r = 0; r < p.num_constraints(); ++r) order.push_back(r);
    std::shuffle(order.begin(), order.end(), rng);
    for (RowId r : order)
        q.add_constraint(p.constraint_name(r), p.row_terms(r), p.row_relation(r),
                         p.row_rhs(r));
    Solution perm = solve(q);
    REQUIRE(perm.status == Status::optimal);
    CHECK(base.objective == doctest::Approx(perm.objective).epsilon(1e-7));
}

TEST_CASE("hand-perturbed primal value shows up as a primal residual") {
    Problem p;
    VarId x = p.add_variable("x", 0.0);
    p.set_sense(Sense::maximize);
    p.add_objective_term(x, 1.0);
    p.add_constraint("cap", {{x, 1.0}}, Relation::le, 3.0);
    Solution s = solve(p);
    REQUIRE(s.status == Status::optimal);
    s.x[0] += 0.125;
    KktReport rep = check_kkt(p, s);
    // scaled by 1 + |b| + |ax|
    CHECK(rep.primal == doctest::Approx(0.125 / (1.0 + 3.0 + 3.125)));
}

TEST_CASE("degenerate instances terminate (anti-cycling)") {
    // Beale's classic cycling example under naive Dantzig pivoting.
    Problem p;
    VarId x1 = p.add_variable("x1", 0.0);
    VarId x2 = p.add_variable("x2", 0.0);
    VarId x3 = p.add_variable("x3", 0.0);
    VarId x4 = p.add_variable("x4", 0.0);
    p.add_objective_term(x1, -0.75);
    p.add_objective_term(x2, 150.0);
    p.add_objective_term(x3, -0.02);
    p.add_objective_term(x4, 6.0);
    p.add_constraint("r1", {{x1, 0.25}, {x2, -60.0}, {x3, -1.0 / 25.0}, {x4, 9.0}},
                     Relation::le, 0.0);
    p.add_constraint("r2", {{x1, 0.5}, {x2, -90.0}, {x3, -1.0 / 50.0}, {x4, 3.0}},
                     Relation::le, 0.0);
    p.add_constraint("r3", {{x3, 1.0}}, Relation::le, 1.0);
    Solution s = solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.objective == doctest::Approx(-0.05));
}

TEST_CASE("LP text export carries the instance") {
    Problem p;
    VarId x = p.add_variable("x", 0.0, 4.0);
    p.set_sense(Sense::maximize);
    p.add_objective_term(x, 2.0);
    p.add_constraint("cap two", {{x, 1.0}}, Relation::le, 3.0);
    std::string text = to_lp_format(p);
    CHECK(text.find("Maximize") != std::string::npos);
    CHECK(text.find("cap_two:") != std::string::npos);
    CHECK(text.find("<= 3") != std::string::npos);
    CHECK(text.find("0 <= x <= 4") != std::string::npos);
}
