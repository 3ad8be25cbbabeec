#include "wavelab/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab::coeff {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::LipPositive: return "lip+";
        case CaseTag::HoelderPositive: return "hoelder+";
        case CaseTag::SmoothDegenerate: return "smooth0";
        case CaseTag::HoelderDegenerate: return "hoelder0";
    }
    return "?";
}

CaseTag case_tag_from_string(const std::string& name) {
    if (name == "lip+") return CaseTag::LipPositive;
    if (name == "hoelder+") return CaseTag::HoelderPositive;
    if (name == "smooth0") return CaseTag::SmoothDegenerate;
    if (name == "hoelder0") return CaseTag::HoelderDegenerate;
    throw std::invalid_argument("unknown case tag: " + name);
}

double CoefficientProfile::sqrt_eval(double t) const {
    const double a = eval_fn(t);
    return a > 0.0 ? std::sqrt(a) : 0.0;
}

CoefficientProfile make_constant(double c, double T) {
    require(c > 0.0, "make_constant: c must be positive");
    require(T > 0.0, "make_constant: T must be positive");
    CoefficientProfile p;
    p.case_tag = CaseTag::LipPositive;
    p.a0 = c;
    p.sup_bound = c;
    p.T = T;
    p.seminorm_order = 1.0;
    p.seminorm_bound = 0.0;
    p.sqrt_seminorm_order = 1.0;
    p.sqrt_seminorm_bound = 0.0;
    p.generator = "constant";
    p.params = {{"c", c}, {"T", T}};
    p.eval_fn = [c](double) { return c; };
    return p;
}

CoefficientProfile make_lipschitz(double a0, double amplitude, double freq, double T,
                                  double phase) {
    require(a0 > 0.0, "make_lipschitz: a0 must be positive");
    require(amplitude >= 0.0, "make_lipschitz: amplitude must be nonnegative");
    require(freq > 0.0, "make_lipschitz: freq must be positive");
    require(T > 0.0, "make_lipschitz: T must be positive");
    CoefficientProfile p;
    p.case_tag = CaseTag::LipPositive;
    p.a0 = a0;
    p.sup_bound = a0 + amplitude;
    p.T = T;
    p.seminorm_order = 1.0;
    p.seminorm_bound = amplitude * freq;  // |a'| = amplitude*freq*|sin(2(freq t + phase))|
    p.sqrt_seminorm_order = 1.0;
    p.sqrt_seminorm_bound = amplitude * freq / (2.0 * std::sqrt(a0));
    p.generator = "lipschitz";
    p.params = {{"a0", a0}, {"amplitude", amplitude}, {"freq", freq}, {"phase", phase}, {"T", T}};
    p.eval_fn = [a0, amplitude, freq, phase](double t) {
        const double s = std::sin(freq * t + phase);
        return a0 + amplitude * s * s;
    };
    return p;
}

CoefficientProfile make_weierstrass(double a0, double alpha, double amp, int base, double T) {
    require(a0 > 0.0, "make_weierstrass: a0 must be positive");
    require(alpha > 0.0 && alpha < 1.0, "make_weierstrass: alpha must lie in (0,1)");
    require(amp >= 0.0, "make_weierstrass: amp must be nonnegative");
    require(base >= 2, "make_weierstrass: base must be an integer >= 2");
    require(T > 0.0, "make_weierstrass: T must be positive");

    // base^(-alpha*N) < 1e-12  <=>  N > 12*ln(10)/(alpha*ln(base))
    const double lb = std::log(static_cast<double>(base));
    const int trunc = static_cast<int>(std::floor(12.0 * std::log(10.0) / (alpha * lb))) + 1;
    require(trunc * lb < 700.0, "make_weierstrass: alpha too small to realize in double precision");

    std::vector<double> freqs(trunc + 1), weights(trunc + 1);
    double atom_sum = 0.0;
    for (int k = 0; k <= trunc; ++k) {
        freqs[k] = std::pow(static_cast<double>(base), k);
        weights[k] = amp * std::pow(static_cast<double>(base), -alpha * k) * 0.5;
        atom_sum += 2.0 * weights[k];
    }

    CoefficientProfile p;
    p.case_tag = CaseTag::HoelderPositive;
    p.a0 = a0;
    p.sup_bound = a0 + atom_sum;
    p.alpha = alpha;
    p.T = T;
    p.seminorm_order = alpha;
    // |f(t)-f(s)| <= amp*(b^(1-alpha)/(2(b^(1-alpha)-1)) + 1/(1-b^-alpha)) |t-s|^alpha,
    // splitting the lacunary sum at the scale of |t-s|.
    const double b1a = std::pow(static_cast<double>(base), 1.0 - alpha);
    const double bma = std::pow(static_cast<double>(base), -alpha);
    p.seminorm_bound = amp * (b1a / (2.0 * (b1a - 1.0)) + 1.0 / (1.0 - bma));
    p.sqrt_seminorm_order = alpha;
    p.sqrt_seminorm_bound = p.seminorm_bound / (2.0 * std::sqrt(a0));
    p.generator = "weierstrass";
    p.params = {{"a0", a0}, {"alpha", alpha}, {"amp", amp},
                {"base", static_cast<double>(base)}, {"T", T}};
    p.eval_fn = [a0, freqs, weights](double t) {
        double acc = 0.0;
        for (std::size_t k = 0; k < freqs.size(); ++k)
            acc += weights[k] * (1.0 + std::cos(freqs[k] * t));
        return a0 + acc;
    };
    return p;
}

CoefficientProfile make_smooth_degenerate(double omega, double T, int assumed_l) {
    require(omega > 0.0, "make_smooth_degenerate: omega must be positive");
    require(T > 0.0, "make_smooth_degenerate: T must be positive");
    require(assumed_l >= 2, "make_smooth_degenerate: assumed l must be >= 2");
    CoefficientProfile p;
    p.case_tag = CaseTag::SmoothDegenerate;
    p.a0 = 0.0;
    p.sup_bound = 1.0;
    p.smoothness_l = assumed_l;
    p.T = T;
    p.seminorm_order = 1.0;
    p.seminorm_bound = omega;  // |d sin^2(omega t)/dt| = omega|sin(2 omega t)|
    p.sqrt_seminorm_order = 1.0;
    p.sqrt_seminorm_bound = omega;  // sqrt(a) = |sin(omega t)|
    p.generator = "smooth-degenerate";
    p.params = {{"omega", omega}, {"l", static_cast<double>(assumed_l)}, {"T", T}};
    p.eval_fn = [omega](double t) {
        const double s = std::sin(omega * t);
        return s * s;
    };
    return p;
}

CoefficientProfile make_hoelder_degenerate(double alpha, double omega, double T) {
    require(alpha > 0.0 && alpha < 2.0, "make_hoelder_degenerate: alpha must lie in (0,2)");
    require(omega > 0.0, "make_hoelder_degenerate: omega must be positive");
    require(T > 0.0, "make_hoelder_degenerate: T must be positive");
    CoefficientProfile p;
    p.case_tag = CaseTag::HoelderDegenerate;
    p.a0 = 0.0;
    p.sup_bound = 1.0;
    p.alpha = alpha;
    p.T = T;
    if (alpha <= 1.0) {
        // ||sin x|^a - |sin y|^a| <= ||sin x|-|sin y||^a <= |x-y|^a
        p.seminorm_order = alpha;
        p.seminorm_bound = std::pow(omega, alpha);
    } else {
        // C^1 for alpha > 1: |a'| <= alpha*omega; the difference quotient at
        // order alpha is grid-dependent, so the certified pair is Lipschitz.
        p.seminorm_order = 1.0;
        p.seminorm_bound = alpha * omega;
    }
    p.sqrt_seminorm_order = 0.5 * alpha;
    p.sqrt_seminorm_bound = std::pow(omega, 0.5 * alpha);
    p.generator = "hoelder-degenerate";
    p.params = {{"alpha", alpha}, {"omega", omega}, {"T", T}};
    p.eval_fn = [alpha, omega](double t) {
        const double s = std::fabs(std::sin(omega * t));
        return std::pow(s, alpha);
    };
    return p;
}

double estimate_hoelder_seminorm(const std::function<double(double)>& f, double T, double alpha,
                                 int grid_size) {
    require(grid_size >= 2, "estimate_hoelder_seminorm: grid_size must be >= 2");
    const int n = grid_size;
    const double h = T / (n - 1);
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = f(h * i);

    double best = 0.0;
    // pair distance cap T/8  <=>  stride <= (n-1)/8
    for (long long stride = 1; stride * 8 <= n - 1; stride *= 2) {
        const double dist = std::pow(h * static_cast<double>(stride), alpha);
        for (long long i = 0; i + stride < n; ++i) {
            const double q =
                std::fabs(values[static_cast<std::size_t>(i + stride)] -
                          values[static_cast<std::size_t>(i)]) / dist;
            if (q > best) best = q;
        }
    }
    return best;
}

double estimate_hoelder_seminorm(const CoefficientProfile& p, double alpha, int grid_size) {
    return estimate_hoelder_seminorm(p.eval_fn, p.T, alpha, grid_size);
}

double estimate_sqrt_hoelder_seminorm(const CoefficientProfile& p, double alpha, int grid_size) {
    return estimate_hoelder_seminorm([&p](double t) { return p.sqrt_eval(t); }, p.T, alpha,
                                     grid_size);
}

}  // namespace wavelab::coeff
