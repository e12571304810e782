#pragma once

#include <functional>
#include <optional>

#include "mcmd/gp.hpp"

namespace mcmd {

// Weighted population of input-space points approximating the distribution
// of the GP maximizer.
struct ParticleSet {
    Matrix positions;   // d x n
    Vector weights;     // n, all >= 0, sum > 0

    int size() const { return static_cast<int>(weights.size()); }
    void validate() const;
};

struct MCMDConfig {
    int n_particles = 1000;
    int n_challengers = 1;
    // Mixture coefficient of the defensive proposal
    // q'(x) = alpha * p_max(x) + (1 - alpha) * q(x).
    double alpha = 0.5;
    // k_x; its length scales set the KDE bandwidth (the kernel is evaluated
    // normalized as a probability density, so its amplitude is irrelevant).
    KernelSpec kde_kernel;
    int rounds = 10;
    // Optional early stop: quit once the TV distance between successive
    // rounds' KDE curves on a uniform diagnostic grid drops below this.
    std::optional<double> tv_stop_tol;
    int tv_grid_size = 64;

    void validate() const;
};

// Squared exponential with length scale 2% of the domain edge per dimension.
KernelSpec default_kde_kernel(const Domain& domain);
MCMDConfig default_mcmd_config(const Domain& domain);

// KDE-backed density over the input domain; sampleable and evaluable.
struct MaxDistEstimate {
    ParticleSet particles;
    KernelSpec kde_kernel;
};

// k_x(x, center) normalized as a probability density over R^d.
double kde_kernel_density(const KernelSpec& kde_kernel, const Vector& x,
                          const Vector& center);

// n_particles i.i.d. uniform positions, all weights 1.
ParticleSet init_particles(const Domain& domain, int n_particles, Rng& rng);

struct ChallengerProposal {
    Matrix points;    // d x n_challengers
    Vector weights;   // importance weights q / q'
};

// Draw cfg.n_challengers challengers from the defensive mixture proposal.
// Each challenger anchors on a particle picked proportionally to weight; with
// probability alpha it is drawn from k_x around the anchor, otherwise
// uniformly from the domain. Its weight uses only the selected anchor:
//   w = q(x_c) / (alpha * k_x(x_c, anchor) + (1 - alpha) * q(x_c)).
ChallengerProposal propose_challengers(const ParticleSet& particles,
                                       const MCMDConfig& cfg,
                                       const Domain& domain, Rng& rng);

// Challenge every particle exactly once against a fresh set of challengers:
// one joint GP draw over {particle, challengers}; the largest sampled value
// wins, with strict inequality required to displace the incumbent. Proposals
// anchor on the round-start snapshot, so per-particle work is independent.
ParticleSet challenge_round(const GPPosterior& gp, const ParticleSet& particles,
                            const MCMDConfig& cfg, const Domain& domain,
                            Rng& rng);

// Low-variance resampling on one uniform offset: particle i is copied c_i
// times with c_i in {floor(n w_i), ceil(n w_i)} for normalized weights w_i.
// Copies carry weight 1. out_count 0 keeps the input count.
ParticleSet systematic_resample(const ParticleSet& particles, Rng& rng,
                                int out_count = 0);

// Self-normalized KDE: sum_i w_i k_x(x, x_i) / sum_i w_i.
double kde_density(const MaxDistEstimate& est, const Vector& x);
Vector kde_density_grid(const MaxDistEstimate& est, const Matrix& grid);

// Pick a particle proportionally to weight, then draw from k_x around it.
// Out-of-domain draws are retried up to 10 times, then clamped to the box.
Vector sample_from_estimate(const MaxDistEstimate& est, const Domain& domain,
                            Rng& rng);

// Called after each round's challenges with the current weighted particles.
using RoundObserver = std::function<void(int round, const ParticleSet&)>;

// The full particle algorithm: initialize uniformly, then per round apply
// systematic resampling followed by one challenge pass over all particles.
MaxDistEstimate run_mcmd(const GPPosterior& gp, const MCMDConfig& cfg,
                         const Domain& domain, Rng& rng,
                         const RoundObserver& observer = {});

} // namespace mcmd
