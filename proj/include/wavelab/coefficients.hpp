#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wavelab::coeff {

/// The four regularity regimes of the propagation speed a(t):
///   LipPositive:       Lipschitz, a >= a0 > 0
///   HoelderPositive:   C^alpha with 0 < alpha < 1, a >= a0 > 0
///   SmoothDegenerate:  C^l with l >= 2, a >= 0 (zeros allowed)
///   HoelderDegenerate: C^alpha with 0 < alpha < 2, a >= 0
enum class CaseTag { LipPositive, HoelderPositive, SmoothDegenerate, HoelderDegenerate };

std::string to_string(CaseTag tag);
CaseTag case_tag_from_string(const std::string& name);

/// A propagation speed a(t) on [0, T] together with certified regularity
/// metadata.  Profiles are immutable after construction and eval is a pure
/// function of t, so they are safe to evaluate concurrently.
struct CoefficientProfile {
    CaseTag case_tag = CaseTag::LipPositive;
    double a0 = 0.0;         ///< certified lower bound: a(t) >= a0
    double sup_bound = 0.0;  ///< certified upper bound: a(t) <= sup_bound
    std::optional<double> alpha;  ///< case parameter (HoelderPositive/HoelderDegenerate)
    std::optional<int> smoothness_l;  ///< assumed smoothness order (SmoothDegenerate)
    double T = 1.0;

    // Certified Hoelder metadata: |a(t)-a(s)| <= seminorm_bound * |t-s|^seminorm_order,
    // and the same for sqrt(a) with the sqrt_* pair.  For HoelderDegenerate with
    // alpha > 1 the bound on a itself is Lipschitz (order 1); the alpha-scaled
    // information lives in the sqrt pair, which is what the mollified-eigenvalue
    // machinery consumes.
    double seminorm_order = 1.0;
    double seminorm_bound = 0.0;
    double sqrt_seminorm_order = 1.0;
    double sqrt_seminorm_bound = 0.0;

    std::string generator;  ///< generator name, for serialization
    std::vector<std::pair<std::string, double>> params;  ///< flat parameter record

    std::function<double(double)> eval_fn;

    double eval(double t) const { return eval_fn(t); }
    double sqrt_eval(double t) const;
};

/// a(t) = c.  Oracle case; tagged LipPositive.
CoefficientProfile make_constant(double c, double T);

/// a(t) = a0 + amplitude * sin^2(freq*t + phase); Lipschitz constant <= amplitude*freq.
CoefficientProfile make_lipschitz(double a0, double amplitude, double freq, double T,
                                  double phase = 0.0);

/// Truncated lacunary cosine series
///   a(t) = a0 + amp * sum_{k=0}^{N} base^(-alpha k) (1 + cos(base^k t)) / 2,
/// N chosen so base^(-alpha N) < 1e-12.  The atoms are nonnegative, so
/// a >= a0 holds with no clipping.  C^alpha for 0 < alpha < 1.
CoefficientProfile make_weierstrass(double a0, double alpha, double amp, int base, double T);

/// a(t) = sin^2(omega*t): smooth, vanishing at t = k*pi/omega.
CoefficientProfile make_smooth_degenerate(double omega, double T, int assumed_l = 2);

/// a(t) = |sin(omega*t)|^alpha with alpha in (0,2): C^alpha, degenerate,
/// sqrt(a) in C^(alpha/2).
CoefficientProfile make_hoelder_degenerate(double alpha, double omega, double T);

/// Max of |f(t)-f(s)| / |t-s|^alpha over grid pairs with |t-s| <= T/8.
/// The grid is uniform with grid_size points; pairs are strided dyadically
/// (i, i + 2^m), an O(n log n) subsample, so the value is a lower bound on
/// the true seminorm.  Returns 0 when no pair satisfies the distance cap.
double estimate_hoelder_seminorm(const std::function<double(double)>& f, double T, double alpha,
                                 int grid_size);

/// Same estimator applied to the profile's a(t).
double estimate_hoelder_seminorm(const CoefficientProfile& p, double alpha, int grid_size);

/// Same estimator applied to sqrt(a): the quantity the regularized
/// eigenvalues depend on.
double estimate_sqrt_hoelder_seminorm(const CoefficientProfile& p, double alpha, int grid_size);

}  // namespace wavelab::coeff
