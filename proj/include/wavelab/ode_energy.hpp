#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wavelab/coefficients.hpp"
#include "wavelab/mollify.hpp"

namespace wavelab::ode {

using complexd = std::complex<double>;

/// One node of the first-order system V = (i*beta*v, v').
struct StateVector {
    complexd v_component;   ///< i*beta*v(t)
    complexd dv_component;  ///< v'(t)
    double beta = 0.0;
    double t = 0.0;

    /// |V|^2 = beta^2 |v|^2 + |v'|^2, the base energy.
    double norm_sq() const { return std::norm(v_component) + std::norm(dv_component); }
};

/// Uniform-step solution record of V' = i*beta*A(t)V on [0, T].
struct Trajectory {
    double beta = 0.0;
    double T = 0.0;
    double dt = 0.0;
    int steps_per_period = 0;
    std::string method = "rk4";
    std::vector<double> times;
    std::vector<complexd> v_comp;   ///< i*beta*v at each node
    std::vector<complexd> dv_comp;  ///< v' at each node

    std::size_t size() const { return times.size(); }
    StateVector node(std::size_t i) const {
        return StateVector{v_comp[i], dv_comp[i], beta, times[i]};
    }
    /// v(t_i) recovered from the first component.
    complexd v_of(std::size_t i) const { return v_comp[i] / (complexd(0.0, 1.0) * beta); }
};

enum class EnergyKind { Base, Symmetrizer, Quasi, Transformed };

struct EnergyTrace {
    EnergyKind kind = EnergyKind::Base;
    double eps = 0.0;         ///< Quasi only
    double s = 0.0;           ///< Transformed only
    double decay_rate = 0.0;  ///< Transformed only: K in rho(t) = -K t
    std::vector<double> times;
    std::vector<double> values;
};

/// Minimal complex 2x2 matrix; enough for the symmetrizer algebra.
struct Mat2 {
    complexd a{}, b{}, c{}, d{};  // [[a, b], [c, d]]

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 adjoint() const;
    complexd det() const { return a * d - b * c; }
};

/// Exact 2x2 spectral norm via the closed-form singular value.
double spectral_norm(const Mat2& m);

/// Classical RK4 on the reduced system V' = i*beta*A(t)V with
/// A = [[0, 1], [a(t), 0]], initial state (i*beta*v0, v1).  Uniform step
/// chosen so beta*sqrt(sup a)*h <= 2*pi/steps_per_period, capped at T/1000.
Trajectory solve(const coeff::CoefficientProfile& p, double beta, complexd v0, complexd v1,
                 int steps_per_period);

/// Final state only (no trajectory storage).
StateVector solve_final(const coeff::CoefficientProfile& p, double beta, complexd v0, complexd v1,
                        int steps_per_period);

/// max_t E(t)/E(0) of the base energy along the solve, streamed.
double sup_energy_ratio(const coeff::CoefficientProfile& p, double beta, complexd v0, complexd v1,
                        int steps_per_period);

/// E(t) = beta^2 |v|^2 + |v'|^2.
EnergyTrace base_energy(const Trajectory& traj);

/// E(t) = (S(t)V, V) with S = diag(2a, 2): 2a(t)beta^2|v|^2 + 2|v'|^2.
EnergyTrace symmetrizer_energy(const Trajectory& traj, const coeff::CoefficientProfile& p);

/// S A - A* S for S = diag(2a, 2); identically zero.
Mat2 symmetrizer_commutator(double a_value);

/// Q_eps A - A* Q_eps for Q_eps = S + 2 eps^2 diag(1, 0); equals
/// 2 eps^2 [[0, 1], [-1, 0]] exactly (computed in simplified form).
Mat2 quasi_symmetrizer_commutator(double a_value, double eps);

/// E_eps(t) = (Q_eps V, V) = 2(a(t)+eps^2)beta^2|v|^2 + 2|v'|^2.
EnergyTrace quasi_energy(const Trajectory& traj, const coeff::CoefficientProfile& p, double eps);

struct DegenerateTransformError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// |W(t)|^2 with W = e^{rho(t) beta^{1/s}} det H(t) H(t)^{-1} V(t),
/// rho(t) = -K t (rho(0) = 0), H = [[1, 1], [lambda1, lambda2]].
/// Throws DegenerateTransformError if det H degenerates at a node.
EnergyTrace transformed_energy(const Trajectory& traj, const mollify::RegularizedPair& pair,
                               double s, double K);

/// Smallest constant decay rate K making the |W|^2 growth bound nonpositive:
///   sup_t [ 2||H^-1 H_t|| + 2|(det H)_t / det H| + beta ||H^-1 A H - (H^-1 A H)*|| ]
///   / (2 beta^{1/s})
/// over a uniform grid with t_grid intervals.
double minimal_decay_rate(const coeff::CoefficientProfile& p, const mollify::RegularizedPair& pair,
                          double beta, double s, int t_grid);

struct RecoveryCheck {
    double max_ratio = 0.0;  ///< max over nodes of |V(t)| / bound(t)
    bool ok = false;
};

/// Checks |V(t)| <= e^{K t beta^{1/s}} ||H(t)|| |W(0)| / det H(t) at every
/// node, with W(0) computed from the initial state.
RecoveryCheck check_recovery_bound(const Trajectory& traj, const mollify::RegularizedPair& pair,
                                   double s, double K);

}  // namespace wavelab::ode
