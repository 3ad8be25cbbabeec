#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "wavelab/coefficients.hpp"

namespace wavelab::growth {

struct SweepRecord {
    double beta = 0.0;
    double e_ratio = 0.0;               ///< sup_t E(t)/E(0), base energy
    std::optional<double> k_min;        ///< minimal decay rate, when requested
    double wall_time = 0.0;             ///< seconds; excluded from determinism
};

struct SweepOptions {
    std::complex<double> v0{1.0, 0.0};
    std::complex<double> v1{0.0, 0.0};
    int steps_per_period = 64;
    int threads = 1;
    bool with_k_min = false;
    double k_min_s = 1.5;    ///< s used in minimal_decay_rate when with_k_min
    int k_min_t_grid = 512;  ///< its time grid
};

/// One solve per beta; records are returned sorted by beta and are
/// deterministic regardless of thread scheduling.
std::vector<SweepRecord> beta_sweep(const coeff::CoefficientProfile& p,
                                    const std::vector<double>& betas,
                                    const SweepOptions& options = {});

struct GrowthFit {
    double exponent = 0.0;
    double intercept = 0.0;      ///< of the log-log fit
    double stderr_slope = 0.0;
    /// no growth trend: fewer than 5 finite records above the 1+1e-3 floor,
    /// or the qualifying ratios are constant across the grid to within 1e-3
    bool bounded = false;
    int n_used = 0;
};

/// Fits the exponent p of e_ratio ~ C exp(K T beta^p): least-squares slope of
/// log(log e_ratio) against log(beta) over the top (largest-beta) half of the
/// records with e_ratio > 1 + 1e-3.  Fewer than 5 qualifying records means
/// the energy is flagged bounded and the exponent is 0.
GrowthFit fit_growth(const std::vector<SweepRecord>& records);
double fit_growth_exponent(const std::vector<SweepRecord>& records);

/// The growth exponents the energy estimates prove per case:
/// 0 (LipPositive), 1-alpha (HoelderPositive), 2/(2+l) (SmoothDegenerate),
/// 1/(1+alpha) (HoelderDegenerate).
double theoretical_exponent(coeff::CaseTag tag, std::optional<double> alpha,
                            std::optional<int> l);

struct GrowthVerdict {
    double fitted_exponent = 0.0;
    double theoretical_bound = 0.0;
    double tolerance = 0.1;
    bool pass = false;
    bool bounded = false;
    coeff::CaseTag case_tag = coeff::CaseTag::LipPositive;
    std::optional<double> alpha;
    std::optional<int> l;
};

GrowthVerdict verdict(const std::vector<SweepRecord>& records, coeff::CaseTag tag,
                      std::optional<double> alpha, std::optional<int> l, double tolerance = 0.1);

}  // namespace wavelab::growth
