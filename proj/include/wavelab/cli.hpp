#pragma once

#include <cstdint>
#include <string>

#include "wavelab/coefficients.hpp"
#include "wavelab/io.hpp"

namespace wavelab::cli {

/// A fully resolved run request: subcommand + parsed config + CLI overrides.
/// Two runs from the same config and seed produce identical result files
/// (wall-time columns aside).
struct ExperimentConfig {
    std::string command;        ///< coeff|solve|mollify-verify|sweep|fit|spectral|suite
    io::KeyValueFile config;    ///< flat key-value parameters
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    int threads = 0;            ///< 0 = hardware default
    double tolerance_scale = 1.0;
};

/// Builds a coefficient profile from config keys under `prefix`
/// (profile.kind plus generator parameters; see README for the key set).
coeff::CoefficientProfile profile_from_config(const io::KeyValueFile& kv,
                                              const std::string& prefix = "profile.");

/// Executes the subcommand; writes result files under out_dir.
/// Returns the process exit status (0 iff all requested checks passed).
int run(const ExperimentConfig& experiment);

}  // namespace wavelab::cli
