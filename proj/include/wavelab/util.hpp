#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace wavelab::util {

// SplitMix64 (Steele/Lea/Flood). The single documented RNG of the project:
// every random phase is derived from a 64-bit run seed and a stream index
// through this mixer, so results reproduce bit-for-bit across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Deterministic double in [0, 1) from (seed, stream index).
inline double unit_double(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t z = splitmix64(splitmix64(seed) ^ splitmix64(index));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

/// Order-independent sum: sorts a copy of the terms before accumulating,
/// so the result is invariant under permutation of the inputs.
double sorted_sum(std::vector<double> terms);

/// log(sum(exp(log_terms))) with the same permutation-invariance guarantee.
/// Returns -inf for an empty input.
double log_sum_exp(std::vector<double> log_terms);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    int n = 0;
};

/// Ordinary least squares y ~ intercept + slope*x.  Requires xs.size() >= 2.
LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys);

/// Geometric grid with `count` points from lo to hi inclusive (count >= 2, lo,hi > 0).
std::vector<double> geometric_grid(double lo, double hi, int count);

/// Runs fn(i) for i in [0, n).  With threads > 1 the iterations are divided
/// among workers; fn must only write to its own slot so results do not
/// depend on scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace wavelab::util
