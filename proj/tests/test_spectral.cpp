#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "wavelab/coefficients.hpp"
#include "wavelab/ode_energy.hpp"
#include "wavelab/spectral.hpp"
#include "wavelab/util.hpp"

using namespace wavelab;
using Catch::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

spectral::SpectralField single_mode(double beta, double weight) {
    return spectral::abstract_grid({beta}, {weight});
}
}  // namespace

TEST_CASE("heisenberg grid eigenvalues follow (2m+n)|lambda|") {
    const auto f1 = spectral::heisenberg_grid(1, {1.0}, 0);
    REQUIRE(f1.modes.size() == 1);
    CHECK(f1.modes[0].beta * f1.modes[0].beta == Approx(1.0));

    const auto f2 = spectral::heisenberg_grid(1, {2.0}, 3);
    REQUIRE(f2.modes.size() == 4);
    CHECK(f2.modes[3].beta * f2.modes[3].beta == Approx(14.0));
}

TEST_CASE("heisenberg grid folds the Hermite multiplicity into weights") {
    // n = 2, m = 1: binom(m+n-1, n-1) = binom(2,1) = 2
    const auto f = spectral::heisenberg_grid(2, {1.0}, 1);
    REQUIRE(f.modes.size() == 2);
    CHECK(f.modes[1].weight == Approx(2.0 * f.modes[0].weight));
}

TEST_CASE("heisenberg grid labels are unique") {
    const auto f = spectral::heisenberg_grid(1, util::geometric_grid(0.5, 8.0, 5), 3);
    for (std::size_t i = 0; i < f.modes.size(); ++i)
        for (std::size_t j = i + 1; j < f.modes.size(); ++j)
            CHECK((f.modes[i].m != f.modes[j].m || f.modes[i].lambda != f.modes[j].lambda));
}

TEST_CASE("abstract grid is the identity construction") {
    for (int n : {1, 2, 100}) {
        std::vector<double> betas, weights;
        for (int i = 0; i < n; ++i) {
            betas.push_back(1.0 + i);
            weights.push_back(0.5 + 0.1 * i);
        }
        const auto f = spectral::abstract_grid(betas, weights);
        REQUIRE(f.modes.size() == static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            CHECK(f.modes[i].beta == betas[i]);
            CHECK(f.modes[i].weight == weights[i]);
        }
    }
    CHECK_THROWS_AS(spectral::abstract_grid({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("gevrey data magnitude on a unit mode") {
    const auto f = spectral::synthesize_data(single_mode(1.0, 1.0),
                                             spectral::GevreyClass{1.0, 1.0}, 7);
    CHECK(std::abs(f.modes[0].u_hat) == Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(
        spectral::synthesize_data(single_mode(1.0, 1.0), spectral::GevreyClass{1.0, -1.0}, 7),
        std::invalid_argument);
}

TEST_CASE("synthesis is seed-deterministic with seed-independent magnitudes") {
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.5, 8.0, 6), 4);
    const auto a = spectral::synthesize_data(grid, spectral::SobolevClass{1.0, 0.5}, 11);
    const auto b = spectral::synthesize_data(grid, spectral::SobolevClass{1.0, 0.5}, 11);
    const auto c = spectral::synthesize_data(grid, spectral::SobolevClass{1.0, 0.5}, 12);
    bool phases_differ = false;
    for (std::size_t i = 0; i < a.modes.size(); ++i) {
        REQUIRE(a.modes[i].u_hat == b.modes[i].u_hat);
        REQUIRE(a.modes[i].du_hat == b.modes[i].du_hat);
        CHECK(std::abs(a.modes[i].u_hat) == Approx(std::abs(c.modes[i].u_hat)).epsilon(1e-12));
        if (a.modes[i].u_hat != c.modes[i].u_hat) phases_differ = true;
    }
    CHECK(phases_differ);
    CHECK(spectral::sobolev_norm(a, 1.0) == Approx(spectral::sobolev_norm(c, 1.0)).epsilon(1e-12));
}

TEST_CASE("sobolev data keep every truncated gevrey norm finite") {
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.5, 8.0, 6), 4);
    const auto f = spectral::synthesize_data(grid, spectral::SobolevClass{0.0, 0.5}, 3);
    const auto g = spectral::gevrey_norm(f, 1.0, 2.0);
    CHECK(g.finite);
    CHECK(std::isfinite(g.value));
}

TEST_CASE("evolution conserves per-mode energy for a == 1") {
    const auto p = coeff::make_constant(1.0, 1.0);
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.5, 16.0, 8), 6);
    const auto f0 = spectral::synthesize_data(grid, spectral::SobolevClass{0.0, 0.5}, 5);
    const auto fT = spectral::evolve(f0, p, 64);
    for (std::size_t i = 0; i < f0.modes.size(); ++i) {
        const double b2 = f0.modes[i].beta * f0.modes[i].beta;
        const double e0 = b2 * std::norm(f0.modes[i].u_hat) + std::norm(f0.modes[i].du_hat);
        const double eT = b2 * std::norm(fT.modes[i].u_hat) + std::norm(fT.modes[i].du_hat);
        CHECK(eT == Approx(e0).epsilon(1e-6));
    }
}

TEST_CASE("single-mode evolution matches the direct solver bit-for-bit") {
    const auto p = coeff::make_weierstrass(1.0, 0.5, 1.0, 2, 1.0);
    auto field = single_mode(17.0, 0.3);
    field.modes[0].u_hat = {0.4, -0.1};
    field.modes[0].du_hat = {0.0, 0.9};
    const auto evolved = spectral::evolve(field, p, 32);
    const auto direct =
        ode::solve_final(p, 17.0, field.modes[0].u_hat, field.modes[0].du_hat, 32);
    const spectral::complexd expected_u =
        direct.v_component / (spectral::complexd(0.0, 1.0) * 17.0);
    REQUIRE(evolved.modes[0].u_hat == expected_u);
    REQUIRE(evolved.modes[0].du_hat == direct.dv_component);
}

TEST_CASE("solver faults surface with the mode label attached") {
    const auto p = coeff::make_constant(1.0, 1.0);
    auto field = spectral::heisenberg_grid(1, {2.0}, 0);
    field.modes[0].u_hat = 1.0;
    CHECK_THROWS_WITH(spectral::evolve(field, p, 8),  // invalid steps_per_period
                      Catch::Matchers::ContainsSubstring("m=0"));
}

TEST_CASE("evolution commutes with partitioning the mode set") {
    const auto p = coeff::make_lipschitz(1.0, 2.0, 1.0, 1.0);
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.5, 32.0, 10), 9);
    const auto whole = spectral::synthesize_data(grid, spectral::SobolevClass{0.5, 0.5}, 21);
    auto first_half = whole, second_half = whole;
    const std::size_t cut = whole.modes.size() / 2;
    first_half.modes.assign(whole.modes.begin(), whole.modes.begin() + cut);
    second_half.modes.assign(whole.modes.begin() + cut, whole.modes.end());

    const auto ew = spectral::evolve(whole, p, 32, 2);
    const auto e1 = spectral::evolve(first_half, p, 32, 2);
    const auto e2 = spectral::evolve(second_half, p, 32, 2);
    for (std::size_t i = 0; i < cut; ++i) REQUIRE(ew.modes[i].u_hat == e1.modes[i].u_hat);
    for (std::size_t i = cut; i < whole.modes.size(); ++i)
        REQUIRE(ew.modes[i].u_hat == e2.modes[i - cut].u_hat);
}

TEST_CASE("sobolev norm basics") {
    auto f = single_mode(1.0, 1.0);
    f.modes[0].u_hat = 1.0;
    CHECK(spectral::sobolev_norm(f, 0.0) == Approx(1.0).epsilon(1e-14));
    // s = nu/2 = 1: (1 + 1)^(2*1/2) = 2 under the root
    CHECK(spectral::sobolev_norm(f, 1.0) == Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("sobolev norm at s = 0 is the plain weighted sum") {
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.5, 8.0, 6), 5);
    const auto f = spectral::synthesize_data(grid, spectral::SobolevClass{0.5, 0.5}, 19);
    double direct = 0.0;
    for (const auto& mode : f.modes) direct += mode.weight * std::norm(mode.u_hat);
    CHECK(std::pow(spectral::sobolev_norm(f, 0.0), 2) == Approx(direct).epsilon(1e-13));
}

TEST_CASE("squared sobolev norms add over disjoint mode sets") {
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.5, 8.0, 6), 5);
    auto f = spectral::synthesize_data(grid, spectral::SobolevClass{0.5, 0.5}, 9);
    auto g = f, h = f;
    const std::size_t cut = f.modes.size() / 3;
    g.modes.assign(f.modes.begin(), f.modes.begin() + cut);
    h.modes.assign(f.modes.begin() + cut, f.modes.end());
    const double whole = std::pow(spectral::sobolev_norm(f, 0.7), 2);
    const double parts =
        std::pow(spectral::sobolev_norm(g, 0.7), 2) + std::pow(spectral::sobolev_norm(h, 0.7), 2);
    CHECK(whole == Approx(parts).epsilon(1e-12));
}

TEST_CASE("norms are invariant under mode permutation") {
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.5, 8.0, 7), 6);
    auto f = spectral::synthesize_data(grid, spectral::SobolevClass{0.5, 0.5}, 13);
    auto shuffled = f;
    std::mt19937 rng(99);
    std::shuffle(shuffled.modes.begin(), shuffled.modes.end(), rng);
    REQUIRE(spectral::sobolev_norm(f, 1.3) == spectral::sobolev_norm(shuffled, 1.3));
    REQUIRE(spectral::gevrey_norm(f, 1.5, 0.7).value ==
            spectral::gevrey_norm(shuffled, 1.5, 0.7).value);
}

TEST_CASE("gevrey norm basics and overflow flagging") {
    auto f = single_mode(1.0, 1.0);
    f.modes[0].u_hat = std::exp(-1.0);
    CHECK(spectral::gevrey_norm(f, 1.0, 1.0).value == Approx(1.0).epsilon(1e-12));

    // A = 0 reduces to the plain L2 norm
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.5, 8.0, 5), 4);
    const auto data = spectral::synthesize_data(grid, spectral::SobolevClass{0.0, 0.5}, 3);
    CHECK(spectral::gevrey_norm(data, 1.5, 0.0).value ==
          Approx(spectral::sobolev_norm(data, 0.0)).epsilon(1e-12));

    auto big = single_mode(1e6, 1.0);
    big.modes[0].u_hat = 1.0;
    const auto overflowed = spectral::gevrey_norm(big, 1.0, 1.0);
    CHECK(!overflowed.finite);
    CHECK(std::isinf(overflowed.value));
    CHECK(overflowed.log_value == Approx(1e6).epsilon(1e-6));
}

TEST_CASE("monotonicity of the norm families") {
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(1.0, 16.0, 6), 5);
    const auto f = spectral::synthesize_data(grid, spectral::SobolevClass{0.5, 0.75}, 17);
    CHECK(spectral::sobolev_norm(f, 0.0) <= spectral::sobolev_norm(f, 0.5));
    CHECK(spectral::sobolev_norm(f, 0.5) <= spectral::sobolev_norm(f, 1.5));
    CHECK(spectral::gevrey_norm(f, 1.5, 0.1).value <= spectral::gevrey_norm(f, 1.5, 0.4).value);
}

TEST_CASE("gevrey data sampled at a smaller A stay finite as the grid extends") {
    // extending the spectral tail (larger m_max) adds geometrically decaying
    // contributions at A' = A/2, so the norm stabilizes
    const auto base = spectral::heisenberg_grid(1, util::geometric_grid(0.25, 32.0, 16), 16);
    const auto extended = spectral::heisenberg_grid(1, util::geometric_grid(0.25, 32.0, 16), 64);
    const spectral::GevreyClass cls{1.0, 2.0};
    const auto coarse = spectral::synthesize_data(base, cls, 23);
    const auto fine = spectral::synthesize_data(extended, cls, 23);
    const auto nc = spectral::gevrey_norm(coarse, 1.0, 1.0);
    const auto nf = spectral::gevrey_norm(fine, 1.0, 1.0);
    REQUIRE(nc.finite);
    REQUIRE(nf.finite);
    CHECK(nf.value >= nc.value);  // extra modes only add mass
    CHECK(nf.value - nc.value <= 0.05 * nc.value);
}

TEST_CASE("gevrey characterization on a single mode") {
    auto f = single_mode(1.0, 1.0);
    f.modes[0].u_hat = 0.7;
    const auto report = spectral::gevrey_char_check(f, 1.0, 6);
    for (double ld : report.log_dk) CHECK(ld == Approx(std::log(0.7)).margin(1e-10));
    CHECK(report.fitted_B <= 1.0);
    CHECK(report.bounded);
}

TEST_CASE("gevrey characterization is consistent across k_max") {
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.25, 16.0, 16), 12);
    const auto f = spectral::synthesize_data(grid, spectral::GevreyClass{1.0, 1.5}, 29);
    const auto r4 = spectral::gevrey_char_check(f, 1.0, 4);
    const auto r6 = spectral::gevrey_char_check(f, 1.0, 6);
    const auto r8 = spectral::gevrey_char_check(f, 1.0, 8);
    CHECK(std::fabs(r6.fitted_B - r4.fitted_B) <= 0.2 * r4.fitted_B);
    CHECK(std::fabs(r8.fitted_B - r6.fitted_B) <= 0.2 * r6.fitted_B);
    CHECK(r8.bounded);
    CHECK_THROWS_AS(spectral::gevrey_char_check(f, 1.0, 2), std::invalid_argument);
}

TEST_CASE("a super-Gevrey synthetic tail is flagged unbounded") {
    // d_k growing faster than B^(nu k)((nu k)!)^s for every fixed B
    std::vector<double> log_dk;
    for (int k = 0; k <= 8; ++k)
        log_dk.push_back(1.5 * std::lgamma(2.0 * k + 1.0) + std::lgamma(k + 1.0));
    const auto report = spectral::analyze_gevrey_sequence(log_dk, 2.0, 1.5);
    CHECK(!report.bounded);
}

TEST_CASE("case 1 wellposedness measures unit constant for a == 1") {
    const auto p = coeff::make_constant(1.0, 1.0);
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.25, 16.0, 12), 10);
    for (double s : {0.0, 1.0}) {
        const auto data = spectral::synthesize_data(grid, spectral::SobolevClass{s, 0.75}, 31);
        const auto rep = spectral::wellposedness_case1(data, p, s, 64, 2);
        CHECK(rep.c_meas == Approx(1.0).margin(1e-4));
    }
}

TEST_CASE("case 1 wellposedness stays under the coefficient-range bound") {
    const auto p = coeff::make_lipschitz(1.0, 2.0, kPi / 2.0, 1.0);
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.25, 32.0, 16), 16);
    const auto fine = spectral::heisenberg_grid(1, util::geometric_grid(0.25, 32.0, 32), 32);
    const auto data = spectral::synthesize_data(grid, spectral::SobolevClass{0.0, 0.75}, 37);
    const auto data_fine = spectral::synthesize_data(fine, spectral::SobolevClass{0.0, 0.75}, 37);
    const auto rep = spectral::wellposedness_case1(data, p, 0.0, 64, 2);
    const auto rep_fine = spectral::wellposedness_case1(data_fine, p, 0.0, 64, 2);
    CHECK(rep.c_meas <= 3.0 * 1.1);
    CHECK(std::fabs(rep_fine.c_meas - rep.c_meas) <= 0.1 * rep.c_meas);
}

TEST_CASE("gevrey wellposedness report reacts to the decay horizon") {
    const auto p = coeff::make_weierstrass(1.0, 0.5, 1.0, 2, 1.0);
    const auto grid = spectral::heisenberg_grid(1, util::geometric_grid(0.25, 16.0, 12), 12);
    const double s = 1.5;
    const double K = spectral::decay_rate_over_ladder(p, s, 1.0, grid.beta_max(), 7, 256);
    REQUIRE(K > 0.0);

    // healthy horizon: B = A - K T > 0 and the evolved norm is finite
    const double A = 1.05 * K * p.T;
    const auto data = spectral::synthesize_data(grid, spectral::GevreyClass{s, A}, 41);
    const auto rep = spectral::wellposedness_gevrey(data, p, s, A, K, 64, 2);
    CHECK(rep.B > 0.0);
    CHECK(!rep.horizon_exceeded);
    CHECK(rep.finite);
    CHECK(rep.ratio > 0.0);

    // too small A: flagged, not thrown
    const double A_small = 0.5 * K * p.T;
    const auto data2 = spectral::synthesize_data(grid, spectral::GevreyClass{s, A_small}, 41);
    const auto rep2 = spectral::wellposedness_gevrey(data2, p, s, A_small, K, 64, 2);
    CHECK(rep2.horizon_exceeded);
}
