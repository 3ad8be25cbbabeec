#include "wavelab/growth_fit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "wavelab/mollify.hpp"
#include "wavelab/ode_energy.hpp"
#include "wavelab/util.hpp"

namespace wavelab::growth {

std::vector<SweepRecord> beta_sweep(const coeff::CoefficientProfile& p,
                                    const std::vector<double>& betas,
                                    const SweepOptions& options) {
    if (betas.empty()) throw std::invalid_argument("beta_sweep: empty beta grid");
    for (double b : betas)
        if (!(b > 0.0)) throw std::invalid_argument("beta_sweep: betas must be positive");

    std::vector<double> sorted = betas;
    std::sort(sorted.begin(), sorted.end());

    std::vector<SweepRecord> records(sorted.size());
    util::parallel_for(sorted.size(), options.threads, [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        const double beta = sorted[i];
        SweepRecord rec;
        rec.beta = beta;
        rec.e_ratio =
            ode::sup_energy_ratio(p, beta, options.v0, options.v1, options.steps_per_period);
        if (options.with_k_min) {
            const double eps = std::min(1.0, 1.0 / beta);
            const mollify::RegularizedPair pair(p, eps, mollify::Variant::Plain);
            rec.k_min = ode::minimal_decay_rate(p, pair, beta, options.k_min_s,
                                                options.k_min_t_grid);
        }
        rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
        records[i] = rec;
    });
    return records;
}

GrowthFit fit_growth(const std::vector<SweepRecord>& records) {
    constexpr double floor = 1.0 + 1e-3;
    std::vector<const SweepRecord*> qualifying;
    for (const auto& r : records)
        if (std::isfinite(r.e_ratio) && r.e_ratio > floor) qualifying.push_back(&r);

    GrowthFit fit;
    if (qualifying.size() < 5) {
        fit.bounded = true;
        return fit;
    }
    // ratios above the floor but without spread across the grid carry no
    // growth trend either (e.g. a constant amplification factor)
    double lo = qualifying.front()->e_ratio, hi = lo;
    for (const auto* r : qualifying) {
        lo = std::min(lo, r->e_ratio);
        hi = std::max(hi, r->e_ratio);
    }
    if (hi / lo <= floor) {
        fit.bounded = true;
        return fit;
    }
    std::sort(qualifying.begin(), qualifying.end(),
              [](const SweepRecord* a, const SweepRecord* b) { return a->beta < b->beta; });
    const std::size_t half = (qualifying.size() + 1) / 2;
    std::vector<double> lx, ly;
    for (std::size_t i = qualifying.size() - half; i < qualifying.size(); ++i) {
        lx.push_back(std::log(qualifying[i]->beta));
        ly.push_back(std::log(std::log(qualifying[i]->e_ratio)));
    }
    const auto ls = util::least_squares(lx, ly);
    fit.exponent = ls.slope;
    fit.intercept = ls.intercept;
    fit.stderr_slope = ls.stderr_slope;
    fit.n_used = ls.n;
    return fit;
}

double fit_growth_exponent(const std::vector<SweepRecord>& records) {
    return fit_growth(records).exponent;
}

double theoretical_exponent(coeff::CaseTag tag, std::optional<double> alpha,
                            std::optional<int> l) {
    switch (tag) {
        case coeff::CaseTag::LipPositive:
            return 0.0;
        case coeff::CaseTag::HoelderPositive:
            if (!alpha || !(*alpha > 0.0 && *alpha < 1.0))
                throw std::invalid_argument("theoretical_exponent: hoelder+ needs alpha in (0,1)");
            return 1.0 - *alpha;
        case coeff::CaseTag::SmoothDegenerate:
            if (!l || *l < 2)
                throw std::invalid_argument("theoretical_exponent: smooth0 needs l >= 2");
            return 2.0 / (2.0 + static_cast<double>(*l));
        case coeff::CaseTag::HoelderDegenerate:
            if (!alpha || !(*alpha > 0.0 && *alpha < 2.0))
                throw std::invalid_argument("theoretical_exponent: hoelder0 needs alpha in (0,2)");
            return 1.0 / (1.0 + *alpha);
    }
    throw std::invalid_argument("theoretical_exponent: unknown case tag");
}

GrowthVerdict verdict(const std::vector<SweepRecord>& records, coeff::CaseTag tag,
                      std::optional<double> alpha, std::optional<int> l, double tolerance) {
    const GrowthFit fit = fit_growth(records);
    GrowthVerdict v;
    v.fitted_exponent = fit.exponent;
    v.bounded = fit.bounded;
    v.theoretical_bound = theoretical_exponent(tag, alpha, l);
    v.tolerance = tolerance;
    v.case_tag = tag;
    v.alpha = alpha;
    v.l = l;
    v.pass = fit.exponent <= v.theoretical_bound + tolerance;
    return v;
}

}  // namespace wavelab::growth
