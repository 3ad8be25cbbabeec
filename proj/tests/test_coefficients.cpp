#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "wavelab/coefficients.hpp"

using namespace wavelab;
using Catch::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<coeff::CoefficientProfile> preset_profiles() {
    return {coeff::make_constant(1.0, 1.0),
            coeff::make_lipschitz(1.0, 2.0, kPi, 1.0),
            coeff::make_weierstrass(1.0, 0.5, 1.0, 2, 1.0),
            coeff::make_smooth_degenerate(kPi, 1.0, 2),
            coeff::make_hoelder_degenerate(0.7, kPi, 1.0)};
}
}  // namespace

TEST_CASE("constant profile evaluates to the constant") {
    CHECK(coeff::make_constant(1.0, 1.0).eval(0.5) == 1.0);
    CHECK(coeff::make_constant(4.0, 2.0).eval(0.0) == 4.0);
    const auto p = coeff::make_constant(1.0, 1.0);
    CHECK(coeff::estimate_hoelder_seminorm(p, 1.0, 1000) == 0.0);
}

TEST_CASE("constant profile rejects bad parameters") {
    CHECK_THROWS_AS(coeff::make_constant(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(coeff::make_constant(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("lipschitz profile: direct evaluation") {
    const auto flat = coeff::make_lipschitz(1.0, 0.0, 1.0, 1.0);
    for (double t : {0.0, 0.25, 0.8, 1.0}) CHECK(flat.eval(t) == 1.0);

    // 1 + 2 sin^2(pi/2) = 3
    const auto p = coeff::make_lipschitz(1.0, 2.0, kPi, 1.0);
    CHECK(p.eval(0.5) == Approx(3.0).margin(1e-14));
    CHECK_THROWS_AS(coeff::make_lipschitz(0.0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("lipschitz profile: empirical seminorm below the stored constant") {
    const auto p = coeff::make_lipschitz(1.0, 2.0, kPi, 1.0);
    const double measured = coeff::estimate_hoelder_seminorm(p, 1.0, 4096);
    CHECK(measured <= 2.0 * kPi * (1.0 + 1e-6));
    CHECK(measured > 0.5 * 2.0 * kPi);  // grid maximization does find the steep part
}

TEST_CASE("weierstrass eval(0) matches direct summation of the series") {
    const auto p = coeff::make_weierstrass(1.0, 0.5, 1.0, 2, 1.0);
    // at t = 0 every atom is (1+cos 0)/2 = 1
    double expected = 1.0;
    int k = 0;
    while (true) {
        const double term = std::pow(2.0, -0.5 * k);
        if (term < 1e-12) break;
        expected += term;
        ++k;
    }
    CHECK(p.eval(0.0) == Approx(expected).epsilon(1e-12));
}

TEST_CASE("weierstrass with zero amplitude is bit-identical to the constant") {
    const auto w = coeff::make_weierstrass(1.0, 0.5, 0.0, 2, 1.0);
    const auto c = coeff::make_constant(1.0, 1.0);
    for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        REQUIRE(w.eval(t) == c.eval(t));
    }
}

TEST_CASE("weierstrass empirical seminorm bounded by the stored bound") {
    const auto p = coeff::make_weierstrass(1.0, 0.5, 1.0, 2, 1.0);
    REQUIRE(p.alpha);
    const double measured = coeff::estimate_hoelder_seminorm(p, *p.alpha, 1 << 12);
    CHECK(measured <= p.seminorm_bound * (1.0 + 1e-6));
    CHECK(measured > 0.0);
}

TEST_CASE("weierstrass rejects bad parameters") {
    CHECK_THROWS_AS(coeff::make_weierstrass(1.0, 0.0, 1.0, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(coeff::make_weierstrass(1.0, 1.0, 1.0, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(coeff::make_weierstrass(1.0, 0.5, 1.0, 1, 1.0), std::invalid_argument);
}

TEST_CASE("smooth degenerate profile hits its zeros") {
    const auto p = coeff::make_smooth_degenerate(2.0, 2.0);
    CHECK(p.eval(0.0) == 0.0);
    CHECK(p.eval(kPi / 4.0) == Approx(1.0).margin(1e-14));
    // min over a grid must reach 0 when T >= pi/omega
    double min_val = 1.0;
    for (int i = 0; i <= 10000; ++i) min_val = std::min(min_val, p.eval(2.0 * i / 10000.0));
    CHECK(min_val <= 1e-6);
}

TEST_CASE("hoelder degenerate profile values and regularity metadata") {
    const auto p1 = coeff::make_hoelder_degenerate(1.0, 2.0, 1.0);
    CHECK(p1.eval(0.0) == 0.0);
    CHECK(p1.eval(kPi / 4.0) == Approx(1.0).margin(1e-14));
    CHECK_THROWS_AS(coeff::make_hoelder_degenerate(2.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(coeff::make_hoelder_degenerate(0.0, 1.0, 1.0), std::invalid_argument);

    // alpha <= 1: the alpha-seminorm of a itself is finite and stable in the grid
    const auto p = coeff::make_hoelder_degenerate(0.7, kPi, 1.0);
    const double coarse = coeff::estimate_hoelder_seminorm(p, 0.7, (1 << 12) + 1);
    const double fine = coeff::estimate_hoelder_seminorm(p, 0.7, (1 << 14) + 1);
    CHECK(fine <= p.seminorm_bound * (1.0 + 1e-6));
    CHECK(std::fabs(fine - coarse) <= 0.25 * fine);

    // all alpha in (0,2): sqrt(a) is C^(alpha/2), stable under refinement
    const auto q = coeff::make_hoelder_degenerate(1.5, kPi, 1.0);
    const double sq_coarse = coeff::estimate_sqrt_hoelder_seminorm(q, 0.75, (1 << 12) + 1);
    const double sq_fine = coeff::estimate_sqrt_hoelder_seminorm(q, 0.75, (1 << 14) + 1);
    CHECK(sq_fine <= q.sqrt_seminorm_bound * (1.0 + 1e-6));
    CHECK(std::fabs(sq_fine - sq_coarse) <= 0.25 * sq_fine);
}

TEST_CASE("seminorm estimator on a linear function is exact") {
    const double measured =
        coeff::estimate_hoelder_seminorm([](double t) { return t; }, 1.0, 1.0, 1024);
    CHECK(measured == Approx(1.0).margin(1e-12));
}

TEST_CASE("seminorm estimator two-resolution stability for rough profiles") {
    const auto p = coeff::make_weierstrass(1.0, 0.3, 1.0, 2, 1.0);
    const double coarse = coeff::estimate_hoelder_seminorm(p, 0.3, (1 << 12) + 1);
    const double fine = coeff::estimate_hoelder_seminorm(p, 0.3, (1 << 14) + 1);
    CHECK(std::fabs(fine - coarse) <= 0.25 * fine);
}

TEST_CASE("profiles respect their certified bounds on a dense grid") {
    for (const auto& p : preset_profiles()) {
        double min_val = 1e300, max_val = -1e300;
        for (int i = 0; i <= 10000; ++i) {
            const double a = p.eval(p.T * i / 10000.0);
            min_val = std::min(min_val, a);
            max_val = std::max(max_val, a);
        }
        CAPTURE(p.generator);
        CHECK(min_val >= 0.0);
        CHECK(min_val >= p.a0 - 1e-12);
        CHECK(max_val <= p.sup_bound + 1e-12);
        if (p.case_tag == coeff::CaseTag::LipPositive ||
            p.case_tag == coeff::CaseTag::HoelderPositive)
            CHECK(p.a0 > 0.0);
    }
}

TEST_CASE("seminorm estimate is nondecreasing in the grid and below the bound") {
    for (const auto& p : preset_profiles()) {
        CAPTURE(p.generator);
        double prev = 0.0;
        for (int logn : {8, 10, 12, 14}) {
            const double est =
                coeff::estimate_hoelder_seminorm(p, p.seminorm_order, (1 << logn) + 1);
            CHECK(est >= prev - 1e-15);
            CHECK(est <= p.seminorm_bound * (1.0 + 1e-6));
            prev = est;
        }
        // the sqrt metadata is certified at its own order
        const double sq =
            coeff::estimate_sqrt_hoelder_seminorm(p, p.sqrt_seminorm_order, (1 << 12) + 1);
        CHECK(sq <= p.sqrt_seminorm_bound * (1.0 + 1e-6));
    }
}

TEST_CASE("profiles evaluate deterministically") {
    const auto p = coeff::make_weierstrass(1.0, 0.5, 1.0, 2, 1.0);
    for (double t : {0.1, 0.37, 0.9}) CHECK(p.eval(t) == p.eval(t));
}
