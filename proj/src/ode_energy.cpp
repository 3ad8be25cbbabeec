#include "wavelab/ode_energy.hpp"

#include <cmath>
#include <numbers>

namespace wavelab::ode {

namespace {

struct Vec2 {
    complexd x, y;
};

inline Vec2 rhs(double beta, double a, const Vec2& v) {
    // i*beta*A(t)V with A = [[0,1],[a,0]]
    const complexd ib(0.0, beta);
    return Vec2{ib * v.y, ib * (a * v.x)};
}

struct StepPlan {
    std::size_t steps;
    double dt;
};

StepPlan plan_steps(const coeff::CoefficientProfile& p, double beta, int steps_per_period) {
    if (!(beta > 0.0)) throw std::invalid_argument("solve: beta must be positive");
    if (steps_per_period < 16)
        throw std::invalid_argument("solve: steps_per_period must be >= 16");
    const double speed = std::max(std::sqrt(p.sup_bound), 1.0);
    const double h_wave = 2.0 * std::numbers::pi / (steps_per_period * beta * speed);
    const double h = std::min(p.T / 1000.0, h_wave);
    const auto steps = static_cast<std::size_t>(std::ceil(p.T / h - 1e-12));
    return StepPlan{steps, p.T / static_cast<double>(steps)};
}

// Fixed-step RK4 over [0, T]; calls observer(node_index, t, V) at every node
// including the initial one.  a(t) is evaluated twice per step (the half and
// full points); the full-point value carries to the next step.
template <typename Observer>
void integrate(const coeff::CoefficientProfile& p, double beta, complexd v0, complexd v1,
               int steps_per_period, Observer&& observer) {
    const StepPlan plan = plan_steps(p, beta, steps_per_period);
    const double dt = plan.dt;
    Vec2 v{complexd(0.0, beta) * v0, v1};
    observer(std::size_t{0}, 0.0, v.x, v.y);
    double a_left = p.eval(0.0);
    for (std::size_t i = 0; i < plan.steps; ++i) {
        const double t = dt * static_cast<double>(i);
        const double a_mid = p.eval(t + 0.5 * dt);
        const double a_right = p.eval(t + dt);
        const Vec2 k1 = rhs(beta, a_left, v);
        const Vec2 k2 = rhs(beta, a_mid, Vec2{v.x + 0.5 * dt * k1.x, v.y + 0.5 * dt * k1.y});
        const Vec2 k3 = rhs(beta, a_mid, Vec2{v.x + 0.5 * dt * k2.x, v.y + 0.5 * dt * k2.y});
        const Vec2 k4 = rhs(beta, a_right, Vec2{v.x + dt * k3.x, v.y + dt * k3.y});
        v.x += dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        v.y += dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
        a_left = a_right;
        observer(i + 1, dt * static_cast<double>(i + 1), v.x, v.y);
    }
}

Mat2 coefficient_matrix(double a, double eps = 0.0) {
    // Q_eps = diag(2a + 2eps^2, 2); eps = 0 gives the symmetrizer S
    Mat2 q;
    q.a = 2.0 * a + 2.0 * eps * eps;
    q.d = 2.0;
    return q;
}

}  // namespace

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::operator-(const Mat2& o) const { return Mat2{a - o.a, b - o.b, c - o.c, d - o.d}; }

Mat2 Mat2::adjoint() const { return Mat2{std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

double spectral_norm(const Mat2& m) {
    const double fro2 = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
    const double det2 = std::norm(m.det());
    const double disc = std::max(fro2 * fro2 - 4.0 * det2, 0.0);
    return std::sqrt(0.5 * (fro2 + std::sqrt(disc)));
}

Trajectory solve(const coeff::CoefficientProfile& p, double beta, complexd v0, complexd v1,
                 int steps_per_period) {
    const StepPlan plan = plan_steps(p, beta, steps_per_period);
    Trajectory traj;
    traj.beta = beta;
    traj.T = p.T;
    traj.dt = plan.dt;
    traj.steps_per_period = steps_per_period;
    traj.times.reserve(plan.steps + 1);
    traj.v_comp.reserve(plan.steps + 1);
    traj.dv_comp.reserve(plan.steps + 1);
    integrate(p, beta, v0, v1, steps_per_period,
              [&traj](std::size_t, double t, complexd x, complexd y) {
                  traj.times.push_back(t);
                  traj.v_comp.push_back(x);
                  traj.dv_comp.push_back(y);
              });
    return traj;
}

StateVector solve_final(const coeff::CoefficientProfile& p, double beta, complexd v0, complexd v1,
                        int steps_per_period) {
    StateVector last;
    last.beta = beta;
    integrate(p, beta, v0, v1, steps_per_period,
              [&last](std::size_t, double t, complexd x, complexd y) {
                  last.t = t;
                  last.v_component = x;
                  last.dv_component = y;
              });
    return last;
}

double sup_energy_ratio(const coeff::CoefficientProfile& p, double beta, complexd v0, complexd v1,
                        int steps_per_period) {
    double e0 = 0.0, emax = 0.0;
    integrate(p, beta, v0, v1, steps_per_period,
              [&](std::size_t i, double, complexd x, complexd y) {
                  const double e = std::norm(x) + std::norm(y);
                  if (i == 0) e0 = e;
                  if (e > emax) emax = e;
              });
    if (e0 <= 0.0) throw std::invalid_argument("sup_energy_ratio: zero initial energy");
    return emax / e0;
}

EnergyTrace base_energy(const Trajectory& traj) {
    EnergyTrace trace;
    trace.kind = EnergyKind::Base;
    trace.times = traj.times;
    trace.values.resize(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i)
        trace.values[i] = std::norm(traj.v_comp[i]) + std::norm(traj.dv_comp[i]);
    return trace;
}

EnergyTrace symmetrizer_energy(const Trajectory& traj, const coeff::CoefficientProfile& p) {
    EnergyTrace trace;
    trace.kind = EnergyKind::Symmetrizer;
    trace.times = traj.times;
    trace.values.resize(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double a = p.eval(traj.times[i]);
        trace.values[i] = 2.0 * a * std::norm(traj.v_comp[i]) + 2.0 * std::norm(traj.dv_comp[i]);
    }
    return trace;
}

Mat2 symmetrizer_commutator(double a_value) {
    const Mat2 s = coefficient_matrix(a_value);
    Mat2 a;
    a.b = 1.0;
    a.c = a_value;
    return s * a - a.adjoint() * s;
}

Mat2 quasi_symmetrizer_commutator(double /*a_value*/, double eps) {
    if (!(eps > 0.0))
        throw std::invalid_argument("quasi_symmetrizer_commutator: eps must be positive");
    // (Q_eps A)_{01} - (A* Q_eps)_{01} = (2a + 2eps^2) - 2a: the a-terms cancel
    // identically, leaving the constant rotation 2 eps^2 [[0,1],[-1,0]].
    const double r = 2.0 * eps * eps;
    Mat2 out;
    out.b = r;
    out.c = -r;
    return out;
}

EnergyTrace quasi_energy(const Trajectory& traj, const coeff::CoefficientProfile& p, double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("quasi_energy: eps must lie in (0,1]");
    EnergyTrace trace;
    trace.kind = EnergyKind::Quasi;
    trace.eps = eps;
    trace.times = traj.times;
    trace.values.resize(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double a = p.eval(traj.times[i]);
        trace.values[i] = 2.0 * (a + eps * eps) * std::norm(traj.v_comp[i]) +
                          2.0 * std::norm(traj.dv_comp[i]);
    }
    return trace;
}

EnergyTrace transformed_energy(const Trajectory& traj, const mollify::RegularizedPair& pair,
                               double s, double K) {
    if (!(s >= 1.0)) throw std::invalid_argument("transformed_energy: s must be >= 1");
    if (K < 0.0) throw std::invalid_argument("transformed_energy: K must be nonnegative");
    const auto samples = pair.sample_on_grid(0.0, traj.dt, traj.size());
    const double rate = std::pow(traj.beta, 1.0 / s);

    EnergyTrace trace;
    trace.kind = EnergyKind::Transformed;
    trace.s = s;
    trace.decay_rate = K;
    trace.times = traj.times;
    trace.values.resize(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double l1 = samples.lambda1[i], l2 = samples.lambda2[i];
        const double det = l2 - l1;
        if (!(det > 1e-300))
            throw DegenerateTransformError("transformed_energy: singular H(t)");
        // W = e^{rho beta^{1/s}} adj(H) V, adj(H) = [[lambda2, -1], [-lambda1, 1]]
        const complexd w1 = l2 * traj.v_comp[i] - traj.dv_comp[i];
        const complexd w2 = -l1 * traj.v_comp[i] + traj.dv_comp[i];
        const double damp = std::exp(-2.0 * K * traj.times[i] * rate);
        trace.values[i] = (std::norm(w1) + std::norm(w2)) * damp;
    }
    return trace;
}

double minimal_decay_rate(const coeff::CoefficientProfile& p, const mollify::RegularizedPair& pair,
                          double beta, double s, int t_grid) {
    if (!(beta > 0.0)) throw std::invalid_argument("minimal_decay_rate: beta must be positive");
    if (!(s >= 1.0)) throw std::invalid_argument("minimal_decay_rate: s must be >= 1");
    if (t_grid < 2) throw std::invalid_argument("minimal_decay_rate: t_grid must be >= 2");

    const double dt = p.T / t_grid;
    const auto samples = pair.sample_on_grid(0.0, dt, static_cast<std::size_t>(t_grid) + 1);
    double sup = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double l1 = samples.lambda1[i], l2 = samples.lambda2[i];
        const double dl1 = samples.dlambda1[i], dl2 = samples.dlambda2[i];
        const double det = l2 - l1;
        if (!(det > 1e-300))
            throw DegenerateTransformError("minimal_decay_rate: singular H(t)");
        // H^-1 H_t = (1/det) [[-dl1, -dl2], [dl1, dl2]] has rank one, so its
        // spectral norm equals its Frobenius norm.
        const double n1 = std::sqrt(2.0 * (dl1 * dl1 + dl2 * dl2)) / det;
        const double n2 = std::fabs(dl2 - dl1) / det;
        // H^-1 A H - (H^-1 A H)* = ((l1^2 + l2^2 - 2a)/det) [[0,1],[-1,0]]
        const double a = p.eval(dt * static_cast<double>(i));
        const double n3 = std::fabs(l1 * l1 + l2 * l2 - 2.0 * a) / det;
        sup = std::max(sup, 2.0 * n1 + 2.0 * n2 + beta * n3);
    }
    return sup / (2.0 * std::pow(beta, 1.0 / s));
}

RecoveryCheck check_recovery_bound(const Trajectory& traj, const mollify::RegularizedPair& pair,
                                   double s, double K) {
    const auto samples = pair.sample_on_grid(0.0, traj.dt, traj.size());
    const double rate = std::pow(traj.beta, 1.0 / s);

    // |W(0)| from the initial state
    const double l1_0 = samples.lambda1[0], l2_0 = samples.lambda2[0];
    const complexd w1_0 = l2_0 * traj.v_comp[0] - traj.dv_comp[0];
    const complexd w2_0 = -l1_0 * traj.v_comp[0] + traj.dv_comp[0];
    const double w0 = std::sqrt(std::norm(w1_0) + std::norm(w2_0));

    RecoveryCheck check;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double det = samples.lambda2[i] - samples.lambda1[i];
        Mat2 h;
        h.a = 1.0;
        h.b = 1.0;
        h.c = samples.lambda1[i];
        h.d = samples.lambda2[i];
        const double bound =
            std::exp(K * traj.times[i] * rate) * spectral_norm(h) * w0 / det;
        const double v_norm = std::sqrt(traj.node(i).norm_sq());
        const double ratio = v_norm / bound;
        if (ratio > check.max_ratio) check.max_ratio = ratio;
    }
    check.ok = check.max_ratio <= 1.0 + 1e-9;
    return check;
}

}  // namespace wavelab::ode
