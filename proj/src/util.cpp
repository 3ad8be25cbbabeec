#include "wavelab/util.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace wavelab::util {

double sorted_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double acc = 0.0;
    for (double t : terms) acc += t;
    return acc;
}

double log_sum_exp(std::vector<double> log_terms) {
    if (log_terms.empty()) return -std::numeric_limits<double>::infinity();
    std::sort(log_terms.begin(), log_terms.end());
    const double m = log_terms.back();
    if (!std::isfinite(m)) return m;
    double acc = 0.0;
    for (double lt : log_terms) acc += std::exp(lt - m);
    return m + std::log(acc);
}

LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("least_squares: need >= 2 matching points");
    const int n = static_cast<int>(xs.size());
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
    mx /= n; my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx <= 0.0) throw std::invalid_argument("least_squares: degenerate abscissae");
    LinearFit fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (n > 2) {
        double ss_res = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
            ss_res += r * r;
        }
        fit.stderr_slope = std::sqrt(ss_res / (n - 2) / sxx);
    }
    return fit;
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2)
        throw std::invalid_argument("geometric_grid: need hi > lo > 0 and count >= 2");
    std::vector<double> g(count);
    const double r = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) g[i] = lo * std::exp(r * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    int workers = threads;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<std::size_t>(workers, n));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, &errors, n, w, workers]() {
            try {
                for (std::size_t i = static_cast<std::size_t>(w); i < n; i += workers) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace wavelab::util
