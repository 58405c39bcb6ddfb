#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "invbid/kernels/kernels.hpp"

using namespace invbid;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n, double lo = -5.0,
                               double hi = 5.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("scalar kernels match hand values") {
    const std::vector<double> a{1.0, -2.0, 3.0};
    const std::vector<double> b{4.0, 5.0, -6.0};
    const auto& ops = kernels::scalar_ops();
    CHECK(ops.dot(a.data(), b.data(), 3) == doctest::Approx(4.0 - 10.0 - 18.0));
    CHECK(ops.asum(a.data(), 3) == doctest::Approx(6.0));
    CHECK(ops.max_abs(a.data(), 3) == doctest::Approx(3.0));
    CHECK(ops.sum(b.data(), 3) == doctest::Approx(3.0));
    std::vector<double> y{1.0, 1.0, 1.0};
    ops.axpy(2.0, a.data(), y.data(), 3);
    CHECK(y[0] == doctest::Approx(3.0));
    CHECK(y[1] == doctest::Approx(-3.0));
    CHECK(y[2] == doctest::Approx(7.0));
    const std::vector<double> w{1.0, 0.5, 0.0};
    CHECK(ops.weighted_abs_diff(w.data(), a.data(), b.data(), 3) ==
          doctest::Approx(3.0 + 0.5 * 7.0));
}

TEST_CASE("dispatched lane agrees with the scalar reference") {
    std::mt19937_64 rng(42);
    const auto& ref = kernels::scalar_ops();
    const auto& act = kernels::active();
    INFO("active lane: " << kernels::isa_name(kernels::active_isa()));
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 64u, 257u, 1000u}) {
        auto a = random_vec(rng, n);
        auto b = random_vec(rng, n);
        auto w = random_vec(rng, n, 0.0, 2.0);
        const double tol = 1e-12 * (1.0 + static_cast<double>(n));
        CHECK(act.dot(a.data(), b.data(), n) ==
              doctest::Approx(ref.dot(a.data(), b.data(), n)).epsilon(tol));
        CHECK(act.asum(a.data(), n) == doctest::Approx(ref.asum(a.data(), n)).epsilon(tol));
        CHECK(act.sum(a.data(), n) == doctest::Approx(ref.sum(a.data(), n)).epsilon(tol));
        CHECK(act.max_abs(a.data(), n) == doctest::Approx(ref.max_abs(a.data(), n)));
        CHECK(act.weighted_abs_diff(w.data(), a.data(), b.data(), n) ==
              doctest::Approx(ref.weighted_abs_diff(w.data(), a.data(), b.data(), n))
                  .epsilon(tol));
        auto y1 = random_vec(rng, n);
        auto y2 = y1;
        ref.axpy(0.37, a.data(), y1.data(), n);
        act.axpy(0.37, a.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(y2[i] == doctest::Approx(y1[i]).epsilon(1e-13));
        auto o1 = std::vector<double>(n);
        auto o2 = std::vector<double>(n);
        ref.mul(a.data(), b.data(), o1.data(), n);
        act.mul(a.data(), b.data(), o2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(o2[i] == doctest::Approx(o1[i]));
    }
}
