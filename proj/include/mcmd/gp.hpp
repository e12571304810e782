#pragma once

#include <Eigen/Cholesky>

#include <utility>

#include "mcmd/kernel.hpp"

namespace mcmd {

// Noisy measurements y_i = f(x_i) + eps with eps ~ N(0, noise_std^2).
struct Dataset {
    Matrix inputs;    // d x n
    Vector outputs;   // n
    double noise_std = 0.0;

    int size() const { return static_cast<int>(outputs.size()); }
    void validate() const;
};

Dataset empty_dataset(int dim);

// Lower Cholesky factor of a covariance matrix, with escalating diagonal
// jitter: start at 1e-10 * signal_variance, escalate x10 up to
// 1e-4 * signal_variance, then throw.
Matrix cholesky_with_jitter(const Matrix& cov, double signal_variance);

// GP posterior conditioned on a dataset. Immutable once built; concurrent
// predict/sample calls are safe as long as each caller brings its own Rng.
class GPPosterior {
public:
    GPPosterior(KernelSpec kernel, Dataset data);

    const KernelSpec& kernel() const { return kernel_; }
    const Dataset& data() const { return data_; }
    int dim() const { return kernel_.dim(); }

    // mu* = m* + K*^T (K + noise^2 I)^-1 (y - m)
    // Sigma** = K** - K*^T (K + noise^2 I)^-1 K*
    std::pair<Vector, Matrix> predict(const Matrix& points) const;

    // Mean and variance only; skips the cross-covariance terms.
    std::pair<Vector, Vector> predict_marginals(const Matrix& points) const;
    std::pair<double, double> predict_point(const Vector& x) const;

private:
    KernelSpec kernel_;
    Dataset data_;
    Matrix chol_;    // lower factor of K + noise^2 I (+ jitter); empty when n = 0
    Vector alpha_;   // (K + noise^2 I)^-1 (y - m)
};

// Caches the posterior mean and a covariance factor at a fixed point set so
// repeated joint draws cost one matrix-vector product each.
class JointSampler {
public:
    JointSampler(const GPPosterior& gp, Matrix points);

    const Vector& mean() const { return mean_; }
    const Matrix& covariance() const { return cov_; }
    Vector draw(Rng& rng) const;

private:
    Vector mean_;
    Matrix cov_;
    Matrix chol_;
};

// One draw of f(points) ~ N(mu*, Sigma**).
Vector sample_joint(const GPPosterior& gp, const Matrix& points, Rng& rng);

} // namespace mcmd
