#include "mcmd/oracles.hpp"

#include <Eigen/QR>

#include <cmath>
#include <stdexcept>

#include "mcmd/mathutil.hpp"

namespace mcmd::oracles {

void DiscreteMaxDist::validate() const {
    if (grid.cols() != probabilities.size())
        throw std::invalid_argument("DiscreteMaxDist: grid/probability size mismatch");
    double total = 0.0;
    for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] < 0.0)
            throw std::invalid_argument("DiscreteMaxDist: negative probability");
        total += probabilities[i];
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("DiscreteMaxDist: probabilities do not sum to 1");
}

void PairwiseWinMatrix::validate() const {
    const Eigen::Index n = P.rows();
    if (P.cols() != n) throw std::invalid_argument("PairwiseWinMatrix: not square");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(P(i, i) - 0.5) > 1e-12)
            throw std::invalid_argument("PairwiseWinMatrix: diagonal must be 1/2");
        for (Eigen::Index j = 0; j < n; ++j) {
            if (P(i, j) < 0.0 || P(i, j) > 1.0)
                throw std::invalid_argument("PairwiseWinMatrix: entry outside [0, 1]");
            if (i != j && std::abs(P(i, j) + P(j, i) - 1.0) > 1e-12)
                throw std::invalid_argument("PairwiseWinMatrix: antisymmetry violated");
        }
    }
}

DiscreteMaxDist brute_force_max_distribution(const GPPosterior& gp,
                                             const Matrix& grid,
                                             long n_samples, Rng& rng) {
    if (grid.cols() < 1)
        throw std::invalid_argument("brute_force_max_distribution: empty grid");
    if (n_samples < 1)
        throw std::invalid_argument("brute_force_max_distribution: n_samples must be >= 1");

    JointSampler sampler(gp, grid);
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(grid.cols());
    for (long s = 0; s < n_samples; ++s) {
        Vector values = sampler.draw(rng);
        // Ties go to the lowest index.
        int arg = 0;
        for (Eigen::Index i = 1; i < values.size(); ++i)
            if (values[i] > values[arg]) arg = static_cast<int>(i);
        counts[arg] += 1;
    }
    DiscreteMaxDist out{grid, counts.cast<double>() / static_cast<double>(n_samples)};
    out.validate();
    return out;
}

PairwiseWinMatrix pairwise_win_matrix(const GPPosterior& gp, const Matrix& grid) {
    auto [mu, cov] = gp.predict(grid);
    const Eigen::Index n = grid.cols();
    Matrix P(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        P(i, i) = 0.5;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double var = cov(i, i) + cov(j, j) - 2.0 * cov(i, j);
            double diff = mu[i] - mu[j];
            double pij;
            if (var <= 1e-12) {
                pij = diff == 0.0 ? 0.5 : (diff > 0.0 ? 1.0 : 0.0);
            } else {
                pij = normal_cdf(diff / std::sqrt(var));
            }
            P(i, j) = pij;
            P(j, i) = 1.0 - pij;
        }
    }
    PairwiseWinMatrix out{std::move(P)};
    out.validate();
    return out;
}

namespace {

Matrix balance_operator(const Matrix& P) {
    // (1_n P)_ii is the i-th column sum of P.
    Matrix M = P;
    M.diagonal() -= P.colwise().sum().transpose();
    return M;
}

} // namespace

DiscreteMaxDist discrete_limit_distribution(const PairwiseWinMatrix& win,
                                            const Matrix& grid) {
    win.validate();
    const Eigen::Index n = win.P.rows();
    if (grid.cols() != n)
        throw std::invalid_argument("discrete_limit_distribution: grid size mismatch");

    // Stack the balance system with the normalization row and least-square it;
    // robust to the rank-1 null space of the balance operator alone.
    Matrix stacked(n + 1, n);
    stacked.topRows(n) = balance_operator(win.P);
    stacked.row(n).setOnes();
    Vector rhs = Vector::Zero(n + 1);
    rhs[n] = 1.0;

    Eigen::ColPivHouseholderQR<Matrix> qr(stacked);
    if (qr.rank() < n)
        throw std::runtime_error("discrete_limit_distribution: balance system is rank-deficient");
    Vector p = qr.solve(rhs);

    for (Eigen::Index i = 0; i < n; ++i) {
        if (p[i] < -1e-12)
            throw std::runtime_error("discrete_limit_distribution: negative probability");
        if (p[i] < 0.0) p[i] = 0.0;
    }
    p /= p.sum();

    DiscreteMaxDist out{grid, std::move(p)};
    out.validate();
    return out;
}

double balance_residual(const PairwiseWinMatrix& win, const Vector& p) {
    return (balance_operator(win.P) * p).cwiseAbs().maxCoeff();
}

double tv_distance(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("tv_distance: size mismatch");
    return 0.5 * (a - b).cwiseAbs().sum();
}

double shannon_entropy(const Vector& p) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) h -= p[i] * std::log(p[i]);
    return h;
}

DistributionComparison compare_distributions(const DiscreteMaxDist& a,
                                             const DiscreteMaxDist& b) {
    if (a.grid.rows() != b.grid.rows() || a.grid.cols() != b.grid.cols() ||
        a.grid != b.grid)
        throw std::invalid_argument("compare_distributions: grids differ");

    const double floor = 1e-12;
    double kl = 0.0;
    for (Eigen::Index i = 0; i < a.probabilities.size(); ++i) {
        double pa = std::max(a.probabilities[i], floor);
        double pb = std::max(b.probabilities[i], floor);
        kl += pa * std::log(pa / pb);
    }
    return {tv_distance(a.probabilities, b.probabilities), kl,
            shannon_entropy(a.probabilities), shannon_entropy(b.probabilities)};
}

} // namespace mcmd::oracles
