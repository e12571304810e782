#include "mcmd/maxdist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcmd/mathutil.hpp"

namespace mcmd {

void ParticleSet::validate() const {
    if (positions.cols() != weights.size())
        throw std::invalid_argument("ParticleSet: positions/weights size mismatch");
    double total = 0.0;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
        if (!std::isfinite(weights[i]) || weights[i] < 0.0)
            throw std::invalid_argument("ParticleSet: weights must be finite and >= 0");
        total += weights[i];
    }
    if (!(total > 0.0))
        throw std::invalid_argument("ParticleSet: weights sum to zero");
}

void MCMDConfig::validate() const {
    if (n_particles < 2) throw std::invalid_argument("MCMDConfig: n_particles must be >= 2");
    if (n_challengers < 1) throw std::invalid_argument("MCMDConfig: n_challengers must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("MCMDConfig: alpha must lie in [0, 1]");
    if (rounds < 1) throw std::invalid_argument("MCMDConfig: rounds must be >= 1");
    kde_kernel.validate();
}

KernelSpec default_kde_kernel(const Domain& domain) {
    Vector scales(domain.dim());
    for (int k = 0; k < domain.dim(); ++k) scales[k] = 0.02 * domain.edge(k);
    return squared_exponential(1.0, std::move(scales));
}

MCMDConfig default_mcmd_config(const Domain& domain) {
    MCMDConfig cfg;
    cfg.kde_kernel = default_kde_kernel(domain);
    return cfg;
}

double kde_kernel_density(const KernelSpec& kde_kernel, const Vector& x,
                          const Vector& center) {
    const int d = kde_kernel.dim();
    double quad = 0.0;
    double norm = 1.0;
    for (int k = 0; k < d; ++k) {
        double z = (x[k] - center[k]) / kde_kernel.length_scales[k];
        quad += z * z;
        norm *= kSqrt2Pi * kde_kernel.length_scales[k];
    }
    return std::exp(-0.5 * quad) / norm;
}

ParticleSet init_particles(const Domain& domain, int n_particles, Rng& rng) {
    if (n_particles < 2)
        throw std::invalid_argument("init_particles: n_particles must be >= 2");
    ParticleSet set;
    set.positions = Matrix(domain.dim(), n_particles);
    set.weights = Vector::Ones(n_particles);
    for (int i = 0; i < n_particles; ++i) set.positions.col(i) = uniform_in(domain, rng);
    return set;
}

namespace {

Vector cumulative_weights(const Vector& weights) {
    Vector cum(weights.size());
    double run = 0.0;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
        run += weights[i];
        cum[i] = run;
    }
    return cum;
}

int pick_by_cumulative(const Vector& cum, Rng& rng) {
    double u = uniform01(rng) * cum[cum.size() - 1];
    const double* begin = cum.data();
    const double* end = begin + cum.size();
    auto it = std::upper_bound(begin, end, u);
    if (it == end) --it;
    return static_cast<int>(it - begin);
}

// Gaussian step around the anchor; out-of-domain draws are retried up to
// 10 times from the same kernel, then clamped to the box.
Vector draw_near_anchor(const Vector& anchor, const KernelSpec& kde_kernel,
                        const Domain& domain, Rng& rng) {
    Vector x(anchor.size());
    for (int attempt = 0; attempt < 10; ++attempt) {
        for (Eigen::Index k = 0; k < x.size(); ++k)
            x[k] = anchor[k] + kde_kernel.length_scales[k] * std_normal(rng);
        if (domain.contains(x)) return x;
    }
    return domain.clamp(x);
}

struct ProposalContext {
    const ParticleSet& snapshot;
    const Vector& cum;
    const MCMDConfig& cfg;
    const Domain& domain;
};

ChallengerProposal propose_from(const ProposalContext& ctx, Rng& rng) {
    const auto& cfg = ctx.cfg;
    ChallengerProposal out;
    out.points = Matrix(ctx.domain.dim(), cfg.n_challengers);
    out.weights = Vector(cfg.n_challengers);
    const double q = ctx.domain.flat_density();
    for (int j = 0; j < cfg.n_challengers; ++j) {
        int anchor = pick_by_cumulative(ctx.cum, rng);
        Vector x;
        if (uniform01(rng) < cfg.alpha) {
            x = draw_near_anchor(ctx.snapshot.positions.col(anchor), cfg.kde_kernel,
                                 ctx.domain, rng);
        } else {
            x = uniform_in(ctx.domain, rng);
        }
        double kx = kde_kernel_density(cfg.kde_kernel, x, ctx.snapshot.positions.col(anchor));
        out.weights[j] = q / (cfg.alpha * kx + (1.0 - cfg.alpha) * q);
        out.points.col(j) = x;
    }
    return out;
}

} // namespace

ChallengerProposal propose_challengers(const ParticleSet& particles,
                                       const MCMDConfig& cfg,
                                       const Domain& domain, Rng& rng) {
    particles.validate();
    Vector cum = cumulative_weights(particles.weights);
    return propose_from({particles, cum, cfg, domain}, rng);
}

ParticleSet challenge_round(const GPPosterior& gp, const ParticleSet& particles,
                            const MCMDConfig& cfg, const Domain& domain,
                            Rng& rng) {
    particles.validate();
    const int n = particles.size();
    // Anchors come from the round-start snapshot; replacements made while the
    // round progresses never feed back into this round's proposals.
    ParticleSet snapshot = particles;
    Vector cum = cumulative_weights(snapshot.weights);
    ParticleSet result = particles;

    const std::uint64_t round_seed = rng();
    for (int i = 0; i < n; ++i) {
        Rng task_rng(mix_seed(round_seed, static_cast<std::uint64_t>(i)));
        ChallengerProposal proposal =
            propose_from({snapshot, cum, cfg, domain}, task_rng);

        Matrix pts(domain.dim(), 1 + cfg.n_challengers);
        pts.col(0) = snapshot.positions.col(i);
        pts.rightCols(cfg.n_challengers) = proposal.points;
        Vector values = sample_joint(gp, pts, task_rng);

        // Strictly larger wins; a challenger at exactly the incumbent's
        // position shares its function value and therefore can never win.
        int winner = -1;
        double best = values[0];
        for (int j = 0; j < cfg.n_challengers; ++j) {
            if (values[1 + j] > best &&
                proposal.points.col(j) != snapshot.positions.col(i)) {
                best = values[1 + j];
                winner = j;
            }
        }
        if (winner >= 0) {
            result.positions.col(i) = proposal.points.col(winner);
            result.weights[i] = proposal.weights[winner];
        }
    }
    return result;
}

ParticleSet systematic_resample(const ParticleSet& particles, Rng& rng,
                                int out_count) {
    particles.validate();
    const int n = particles.size();
    const int out = out_count > 0 ? out_count : n;
    const double total = particles.weights.sum();
    const double step = total / out;
    const double offset = uniform01(rng) * step;

    ParticleSet result;
    result.positions = Matrix(particles.positions.rows(), out);
    result.weights = Vector::Ones(out);

    Vector cum = cumulative_weights(particles.weights);
    int src = 0;
    for (int j = 0; j < out; ++j) {
        double u = offset + step * j;
        while (src < n - 1 && u >= cum[src]) ++src;
        result.positions.col(j) = particles.positions.col(src);
    }
    return result;
}

double kde_density(const MaxDistEstimate& est, const Vector& x) {
    const auto& p = est.particles;
    double total = 0.0;
    double mass = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        total += p.weights[i] * kde_kernel_density(est.kde_kernel, x, p.positions.col(i));
        mass += p.weights[i];
    }
    return total / mass;
}

Vector kde_density_grid(const MaxDistEstimate& est, const Matrix& grid) {
    Vector out(grid.cols());
    for (Eigen::Index g = 0; g < grid.cols(); ++g)
        out[g] = kde_density(est, grid.col(g));
    return out;
}

Vector sample_from_estimate(const MaxDistEstimate& est, const Domain& domain,
                            Rng& rng) {
    est.particles.validate();
    Vector cum = cumulative_weights(est.particles.weights);
    int i = pick_by_cumulative(cum, rng);
    return draw_near_anchor(est.particles.positions.col(i), est.kde_kernel, domain, rng);
}

namespace {

Vector normalized_grid_density(const MaxDistEstimate& est, const Matrix& grid) {
    Vector d = kde_density_grid(est, grid);
    double s = d.sum();
    if (s > 0.0) d /= s;
    return d;
}

} // namespace

MaxDistEstimate run_mcmd(const GPPosterior& gp, const MCMDConfig& cfg,
                         const Domain& domain, Rng& rng,
                         const RoundObserver& observer) {
    cfg.validate();
    MaxDistEstimate est{init_particles(domain, cfg.n_particles, rng), cfg.kde_kernel};

    Matrix diag_grid;
    Vector prev_density;
    if (cfg.tv_stop_tol) {
        // Fixed scatter so successive rounds are compared on the same grid.
        diag_grid = Matrix(domain.dim(), cfg.tv_grid_size);
        Rng grid_rng(mix_seed(0x6d636d64ULL, 7));
        for (int g = 0; g < cfg.tv_grid_size; ++g)
            diag_grid.col(g) = uniform_in(domain, grid_rng);
        prev_density = normalized_grid_density(est, diag_grid);
    }

    for (int round = 1; round <= cfg.rounds; ++round) {
        est.particles = systematic_resample(est.particles, rng);
        est.particles = challenge_round(gp, est.particles, cfg, domain, rng);
        if (observer) observer(round, est.particles);

        if (cfg.tv_stop_tol) {
            Vector density = normalized_grid_density(est, diag_grid);
            double tv = 0.5 * (density - prev_density).cwiseAbs().sum();
            prev_density = std::move(density);
            if (tv < *cfg.tv_stop_tol) break;
        }
    }
    return est;
}

} // namespace mcmd
