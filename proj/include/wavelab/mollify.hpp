#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavelab/coefficients.hpp"

namespace wavelab::mollify {

/// Normalized compactly supported bump
///   phi_eps(t) = normalization * exp(-1/(1-(t/eps)^2)) / eps   on |t| < eps,
/// zero outside.  normalization is computed numerically so the kernel has
/// unit mass.
struct MollifierKernel {
    double epsilon = 0.0;
    double normalization = 0.0;

    double eval(double t) const;
    double deriv(double t) const;  ///< d/dt of the kernel
};

MollifierKernel bump_kernel(double epsilon);

/// (sqrt(a) * phi_eps)(t) by composite Simpson over the kernel support
/// (512 intervals); a is extended constantly outside [0, T].
/// Throws std::domain_error for t outside [0, T].
double mollify_sqrt(const coeff::CoefficientProfile& p, double eps, double t);

/// d/dt (sqrt(a) * phi_eps)(t) = (sqrt(a) * phi_eps')(t), same quadrature.
double mollify_sqrt_derivative(const coeff::CoefficientProfile& p, double eps, double t);

enum class Variant { Plain, Shifted };

/// Values of the regularized eigenvalue pair and their time derivatives on a
/// uniform grid.
struct PairSamples {
    double t0 = 0.0, dt = 0.0;
    std::vector<double> lambda1, lambda2, dlambda1, dlambda2;
    std::size_t size() const { return lambda1.size(); }
};

/// Smooth regularizations of the eigenvalues -/+ sqrt(a(t)) of A(t):
///   plain:   lambda1 = -(sqrt(a)*phi_eps),        lambda2 = +(sqrt(a)*phi_eps)
///   shifted: lambda1 = -(sqrt(a)*phi_eps)+eps^al, lambda2 = +(sqrt(a)*phi_eps)+2 eps^al
/// with al the profile's alpha.  Derivatives come from convolution with the
/// kernel derivative, never from finite differences.
class RegularizedPair {
public:
    RegularizedPair(coeff::CoefficientProfile profile, double eps, Variant variant);

    double epsilon() const { return eps_; }
    Variant variant() const { return variant_; }
    double shift() const { return shift_; }
    const coeff::CoefficientProfile& profile() const { return profile_; }

    double lambda1(double t) const;
    double lambda2(double t) const;
    double lambda1_dt(double t) const;
    double lambda2_dt(double t) const;

    /// Evaluates the pair on the grid t0 + i*dt, i in [0, count).  All grid
    /// points share one lattice of sqrt(a) samples, which makes dense
    /// evaluation tractable at small eps.
    PairSamples sample_on_grid(double t0, double dt, std::size_t count) const;

private:
    coeff::CoefficientProfile profile_;
    double eps_;
    Variant variant_;
    double shift_;
};

RegularizedPair regularized_pair(const coeff::CoefficientProfile& p, double eps, Variant variant);

struct BoundReport {
    double alpha = 0.0;  ///< Hoelder order of sqrt(a) used as the target exponent
    std::vector<double> eps_grid;
    std::vector<double> sup_err_lambda1;  ///< sup_t |lambda1^eps + sqrt(a)|
    std::vector<double> sup_err_lambda2;  ///< sup_t |lambda2^eps - sqrt(a)|
    std::vector<double> sup_dlambda2;     ///< sup_t |d/dt lambda2^eps|
    std::vector<double> min_det;          ///< min_t (lambda2 - lambda1)

    double c1 = 0.0, c2 = 0.0, k = 0.0;   ///< fitted constants
    double exponent_lambda1 = 0.0;        ///< fitted slope of log sup err vs log eps
    double exponent_lambda2 = 0.0;
    double exponent_dlambda2 = 0.0;
    bool exact = false;  ///< all sup errors below noise floor (constant a)
    bool pass_lambda1 = false, pass_lambda2 = false, pass_dlambda2 = false;
    bool det_ok = false;
    double exponent_tolerance = 0.15;
};

/// Measures the mollification error bounds over an eps grid and fits their
/// eps-scaling exponents; fails fitted exponents deviating from
/// (alpha, alpha, alpha-1) by more than 0.15.
/// Throws InsufficientDataError for fewer than 3 eps values.
BoundReport verify_mollification_bounds(const coeff::CoefficientProfile& p,
                                        const std::vector<double>& eps_grid, int t_grid_size,
                                        Variant variant = Variant::Plain);

struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wavelab::mollify
