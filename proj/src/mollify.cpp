#include "wavelab/mollify.hpp"

#include <cmath>
#include <stdexcept>

#include "wavelab/util.hpp"

namespace wavelab::mollify {

namespace {

constexpr int kSingleShotIntervals = 512;  // Simpson intervals for one-off evaluations
constexpr int kLatticeIntervals = 256;     // minimum Simpson intervals across the support

double unit_bump(double x) {
    const double u = 1.0 - x * x;
    if (u <= 1e-8) return 0.0;
    return std::exp(-1.0 / u);
}

double unit_bump_deriv(double x) {
    const double u = 1.0 - x * x;
    if (u <= 1e-8) return 0.0;
    return unit_bump(x) * (-2.0 * x) / (u * u);
}

// 1 / integral of the unnormalized unit bump, with the integral evaluated by
// the same Simpson rule the single-shot convolutions use; constants are then
// reproduced exactly by that rule.
double unit_bump_norm() {
    static const double value = [] {
        const int n = kSingleShotIntervals;
        const double h = 2.0 / n;
        double s = unit_bump(-1.0) + unit_bump(1.0);
        for (int j = 1; j < n; ++j) s += unit_bump(-1.0 + j * h) * ((j & 1) ? 4.0 : 2.0);
        return 1.0 / (s * h / 3.0);
    }();
    return value;
}

double clamped_sqrt(const coeff::CoefficientProfile& p, double t) {
    if (t < 0.0) t = 0.0;
    if (t > p.T) t = p.T;
    return p.sqrt_eval(t);
}

double convolve_single(const coeff::CoefficientProfile& p, const MollifierKernel& kernel,
                       double t, bool derivative) {
    const int n = kSingleShotIntervals;
    const double eps = kernel.epsilon;
    const double h = 2.0 * eps / n;
    double acc = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double tau = -eps + j * h;
        const double w = (j == 0 || j == n) ? 1.0 : ((j & 1) ? 4.0 : 2.0);
        const double k = derivative ? kernel.deriv(tau) : kernel.eval(tau);
        if (k == 0.0) continue;
        acc += w * k * clamped_sqrt(p, t - tau);
    }
    return acc * h / 3.0;
}

void check_eps(double eps) {
    if (!(eps > 0.0) || eps > 1.0)
        throw std::invalid_argument("mollify: eps must lie in (0, 1]");
}

}  // namespace

double MollifierKernel::eval(double t) const {
    const double x = t / epsilon;
    if (std::fabs(x) >= 1.0) return 0.0;
    return normalization * unit_bump(x) / epsilon;
}

double MollifierKernel::deriv(double t) const {
    const double x = t / epsilon;
    if (std::fabs(x) >= 1.0) return 0.0;
    return normalization * unit_bump_deriv(x) / (epsilon * epsilon);
}

MollifierKernel bump_kernel(double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("bump_kernel: epsilon must be positive");
    return MollifierKernel{epsilon, unit_bump_norm()};
}

double mollify_sqrt(const coeff::CoefficientProfile& p, double eps, double t) {
    check_eps(eps);
    if (t < 0.0 || t > p.T) throw std::domain_error("mollify_sqrt: t outside [0, T]");
    return convolve_single(p, bump_kernel(eps), t, false);
}

double mollify_sqrt_derivative(const coeff::CoefficientProfile& p, double eps, double t) {
    check_eps(eps);
    if (t < 0.0 || t > p.T) throw std::domain_error("mollify_sqrt_derivative: t outside [0, T]");
    return convolve_single(p, bump_kernel(eps), t, true);
}

RegularizedPair::RegularizedPair(coeff::CoefficientProfile profile, double eps, Variant variant)
    : profile_(std::move(profile)), eps_(eps), variant_(variant), shift_(0.0) {
    check_eps(eps);
    if (variant_ == Variant::Shifted) {
        if (!profile_.alpha)
            throw std::invalid_argument("regularized_pair: shifted variant requires alpha");
        shift_ = std::pow(eps_, *profile_.alpha);
    }
}

double RegularizedPair::lambda2(double t) const {
    const double m = convolve_single(profile_, bump_kernel(eps_), t, false);
    return variant_ == Variant::Shifted ? m + 2.0 * shift_ : m;
}

double RegularizedPair::lambda1(double t) const {
    const double m = convolve_single(profile_, bump_kernel(eps_), t, false);
    return variant_ == Variant::Shifted ? -m + shift_ : -m;
}

double RegularizedPair::lambda2_dt(double t) const {
    return convolve_single(profile_, bump_kernel(eps_), t, true);
}

double RegularizedPair::lambda1_dt(double t) const { return -lambda2_dt(t); }

PairSamples RegularizedPair::sample_on_grid(double t0, double dt, std::size_t count) const {
    if (count == 0 || !(dt > 0.0))
        throw std::invalid_argument("sample_on_grid: need count >= 1 and dt > 0");
    const MollifierKernel kernel = bump_kernel(eps_);

    // Sub-divide dt so the quadrature lattice is a refinement of the sample
    // grid: sqrt(a) values are then shared between all sample points.
    const std::size_t m =
        static_cast<std::size_t>(std::ceil(kLatticeIntervals * dt / (2.0 * eps_)));
    const double h = dt / static_cast<double>(std::max<std::size_t>(m, 1));
    const std::size_t half = static_cast<std::size_t>(std::ceil(eps_ / h));  // J*h >= eps

    // Simpson weights over the covering window [-J*h, J*h] (2J intervals; the
    // kernel vanishes at and beyond the window ends).
    const std::size_t window = 2 * half + 1;
    std::vector<double> wk(window), wdk(window);
    for (std::size_t j = 0; j < window; ++j) {
        const double tau = (static_cast<double>(j) - static_cast<double>(half)) * h;
        const double c = (j == 0 || j == window - 1) ? 1.0 : ((j & 1) ? 4.0 : 2.0);
        wk[j] = c * kernel.eval(tau) * h / 3.0;
        wdk[j] = c * kernel.deriv(tau) * h / 3.0;
    }

    const std::size_t lattice_size = (count - 1) * m + 2 * half + 1;
    std::vector<double> sq(lattice_size);
    for (std::size_t i = 0; i < lattice_size; ++i) {
        const double t = t0 - static_cast<double>(half) * h + static_cast<double>(i) * h;
        sq[i] = clamped_sqrt(profile_, t);
    }

    PairSamples out;
    out.t0 = t0;
    out.dt = dt;
    out.lambda1.resize(count);
    out.lambda2.resize(count);
    out.dlambda1.resize(count);
    out.dlambda2.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        // tau_j = (j - half)*h, sample index of t_i - tau_j is i*m + 2*half - j
        const std::size_t base = i * m + 2 * half;
        double mval = 0.0, dval = 0.0;
        for (std::size_t j = 0; j < window; ++j) {
            const double s = sq[base - j];
            mval += wk[j] * s;
            dval += wdk[j] * s;
        }
        if (variant_ == Variant::Shifted) {
            out.lambda1[i] = -mval + shift_;
            out.lambda2[i] = mval + 2.0 * shift_;
        } else {
            out.lambda1[i] = -mval;
            out.lambda2[i] = mval;
        }
        out.dlambda1[i] = -dval;
        out.dlambda2[i] = dval;
    }
    return out;
}

RegularizedPair regularized_pair(const coeff::CoefficientProfile& p, double eps, Variant variant) {
    return RegularizedPair(p, eps, variant);
}

BoundReport verify_mollification_bounds(const coeff::CoefficientProfile& p,
                                        const std::vector<double>& eps_grid, int t_grid_size,
                                        Variant variant) {
    if (eps_grid.size() < 3)
        throw InsufficientDataError("verify_mollification_bounds: need at least 3 eps values");
    for (double e : eps_grid) check_eps(e);
    if (t_grid_size < 2)
        throw std::invalid_argument("verify_mollification_bounds: t_grid_size must be >= 2");

    BoundReport report;
    report.alpha = p.sqrt_seminorm_order;  // the order governing sqrt(a)
    report.eps_grid = eps_grid;

    const double dt = p.T / t_grid_size;
    std::vector<double> sq(static_cast<std::size_t>(t_grid_size) + 1);
    for (int i = 0; i <= t_grid_size; ++i)
        sq[static_cast<std::size_t>(i)] = p.sqrt_eval(dt * i);

    for (double eps : eps_grid) {
        const RegularizedPair pair(p, eps, variant);
        const PairSamples s = pair.sample_on_grid(0.0, dt, static_cast<std::size_t>(t_grid_size) + 1);
        double e1 = 0.0, e2 = 0.0, de = 0.0;
        double det_min = s.lambda2[0] - s.lambda1[0];
        for (std::size_t i = 0; i < s.size(); ++i) {
            e1 = std::max(e1, std::fabs(s.lambda1[i] + sq[i]));
            e2 = std::max(e2, std::fabs(s.lambda2[i] - sq[i]));
            de = std::max(de, std::fabs(s.dlambda2[i]));
            det_min = std::min(det_min, s.lambda2[i] - s.lambda1[i]);
        }
        report.sup_err_lambda1.push_back(e1);
        report.sup_err_lambda2.push_back(e2);
        report.sup_dlambda2.push_back(de);
        report.min_det.push_back(det_min);
    }

    // Determinant floor: 2*sqrt(a0) for the plain variant, eps^alpha for the
    // shifted one (both hold by construction; measured for the report).
    report.det_ok = true;
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        const double floor_i = variant == Variant::Shifted
                                   ? std::pow(eps_grid[i], p.alpha ? *p.alpha : report.alpha)
                                   : 2.0 * std::sqrt(p.a0) * (1.0 - 1e-9);
        if (report.min_det[i] < floor_i) report.det_ok = false;
    }

    constexpr double noise_floor = 1e-8;
    double worst = 0.0;
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        worst = std::max(worst, report.sup_err_lambda1[i]);
        worst = std::max(worst, report.sup_err_lambda2[i]);
    }
    if (worst < noise_floor) {
        // constant coefficient: errors are pure quadrature noise
        report.exact = true;
        report.exponent_lambda1 = report.alpha;
        report.exponent_lambda2 = report.alpha;
        report.exponent_dlambda2 = report.alpha - 1.0;
        report.pass_lambda1 = report.pass_lambda2 = report.pass_dlambda2 = true;
        return report;
    }

    std::vector<double> lx, l1, l2, ld;
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        lx.push_back(std::log(eps_grid[i]));
        l1.push_back(std::log(std::max(report.sup_err_lambda1[i], 1e-300)));
        l2.push_back(std::log(std::max(report.sup_err_lambda2[i], 1e-300)));
        ld.push_back(std::log(std::max(report.sup_dlambda2[i], 1e-300)));
    }
    const auto f1 = util::least_squares(lx, l1);
    const auto f2 = util::least_squares(lx, l2);
    const auto fd = util::least_squares(lx, ld);
    report.exponent_lambda1 = f1.slope;
    report.exponent_lambda2 = f2.slope;
    report.exponent_dlambda2 = fd.slope;
    report.c1 = std::exp(f1.intercept);
    report.c2 = std::exp(f2.intercept);
    report.k = std::exp(fd.intercept);
    report.pass_lambda1 = std::fabs(f1.slope - report.alpha) <= report.exponent_tolerance;
    report.pass_lambda2 = std::fabs(f2.slope - report.alpha) <= report.exponent_tolerance;
    report.pass_dlambda2 = std::fabs(fd.slope - (report.alpha - 1.0)) <= report.exponent_tolerance;
    return report;
}

}  // namespace wavelab::mollify
