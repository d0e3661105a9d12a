#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace kdv {

/// Raised when a stochastic representation does not exist for the supplied
/// inputs (indefinite quadratic form, eigenvalue at or below -1, ...). The
/// CLI reports these as skipped checks rather than failures.
struct representation_invalid : std::runtime_error {
    explicit representation_invalid(const std::string& what) : std::runtime_error(what) {}
};

/// Reproducibility contract: identical McConfig yields bit-identical
/// estimates, independent of how many worker threads execute the paths.
struct McConfig {
    std::int64_t paths = 100000;
    std::int64_t steps = 1000;
    std::uint64_t seed = 1;
    bool antithetic = false;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;       // sample standard deviation / sqrt(samples)
    std::int64_t paths_used = 0;  // path evaluations (pairs count twice)
};

struct ComplexMcEstimate {
    std::complex<double> mean;
    double std_error_re = 0.0;
    double std_error_im = 0.0;
    std::int64_t paths_used = 0;
};

/// Worker threads used by the MC drivers; defaults to the hardware count.
/// Results never depend on this value.
void set_mc_threads(int threads);
int mc_threads();

/// Evaluates sample(i) for i in [0, samples) and returns mean/stderr.
/// Paths are reduced in fixed chunks with compensated summation, then chunks
/// are combined in index order, so the estimate is independent of the worker
/// count and of scheduling.
McEstimate mc_run(std::int64_t samples, const std::function<double(std::int64_t)>& sample);
ComplexMcEstimate mc_run_complex(
    std::int64_t samples, const std::function<std::complex<double>(std::int64_t)>& sample);

}  // namespace kdv
