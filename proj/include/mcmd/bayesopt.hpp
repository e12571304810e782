#pragma once

#include <cstdint>
#include <vector>

#include "mcmd/acquisition.hpp"

namespace mcmd {

struct IterationRecord {
    int index = 0;              // 1-based
    Vector input;
    double observed = 0.0;      // y = f(x) + noise
    double instant_regret = 0.0;   // f* - f(x), noiseless
    double cumulative_regret = 0.0;
};

// Per-iteration record of one optimization run.
struct RunTrace {
    std::string method;
    std::uint64_t seed = 0;
    std::vector<IterationRecord> iterations;
    // How many times the nonlinear acquisition search ran; stays 0 for
    // Thompson sampling, which only ever samples from the maximum estimate.
    long acquisition_maximizations = 0;
    // The objective failed mid-run; the trace holds the completed prefix.
    bool aborted = false;
};

// Objective callbacks are pure given the point; measurement noise is
// injected by the harness, never by the objective.
using Objective = std::function<double(const Vector&)>;

using IterationObserver =
    std::function<void(int iteration, const GPPosterior&, const RunTrace&)>;

// Thompson sampling step: approximate the maximum distribution with the
// particle algorithm, then draw one point from it. No acquisition function
// is optimized anywhere on this path.
Vector thompson_suggest(const GPPosterior& gp, const MCMDConfig& cfg,
                        const Domain& domain, Rng& rng);

// The sequential loop: suggest, observe y = f(x) + N(0, noise_std^2),
// recondition the posterior, and account regret against f_star (using the
// noiseless f value). An objective exception aborts with a partial trace.
RunTrace run_optimization(const Objective& objective, double noise_std,
                          const Domain& domain, const KernelSpec& prior,
                          const AcquisitionSpec& spec, int n_iters,
                          double f_star, Rng& rng,
                          const IterationObserver& observer = {});

} // namespace mcmd
