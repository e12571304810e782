#pragma once

#include "mcmd/gp.hpp"

// Independent ground-truth generators used by tests and diagnostics. These
// deliberately take their own code paths (histograms, dense linear solves)
// so they can double-check the particle machinery.
namespace mcmd::oracles {

// Probability mass of the argmax over a fixed grid of candidate points.
struct DiscreteMaxDist {
    Matrix grid;            // d x n
    Vector probabilities;   // n, nonnegative, sums to 1

    int size() const { return static_cast<int>(probabilities.size()); }
    void validate() const;
};

// P(i, j) = Pr(f(x_i) > f(x_j)) under the GP posterior; diagonal fixed at 1/2.
struct PairwiseWinMatrix {
    Matrix P;
    void validate() const;
};

// Histogram of argmax indices over n_samples joint draws (ties go to the
// lowest index). Converges to the true maximum distribution on the grid.
DiscreteMaxDist brute_force_max_distribution(const GPPosterior& gp,
                                             const Matrix& grid,
                                             long n_samples, Rng& rng);

// P_ij = Phi((mu_i - mu_j) / sqrt(S_ii + S_jj - 2 S_ij)). A degenerate
// denominator (<= 1e-12) collapses to the pointwise limit: 1/2 on equal
// means, else 0 or 1 by the sign of mu_i - mu_j.
PairwiseWinMatrix pairwise_win_matrix(const GPPosterior& gp, const Matrix& grid);

// Stationary particle fractions of the n_c = 1, alpha = 0 challenge process:
// the p solving (P - diag(1_n P)) p = 0 with 1^T p = 1, by least squares on
// the stacked system. Entries below -1e-12 are rejected; tiny negatives are
// clipped to zero and the result renormalized.
DiscreteMaxDist discrete_limit_distribution(const PairwiseWinMatrix& win,
                                            const Matrix& grid);

// Infinity norm of (P - diag(1_n P)) p.
double balance_residual(const PairwiseWinMatrix& win, const Vector& p);

struct DistributionComparison {
    double tv_distance;     // (1/2) sum |a_i - b_i|
    double kl_divergence;   // KL(a || b), probabilities floored at 1e-12
    double entropy_a;       // Shannon entropy, nats
    double entropy_b;
};

DistributionComparison compare_distributions(const DiscreteMaxDist& a,
                                             const DiscreteMaxDist& b);

double tv_distance(const Vector& a, const Vector& b);
double shannon_entropy(const Vector& p);

} // namespace mcmd::oracles
