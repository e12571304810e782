#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcmd/bench/fixtures.hpp"
#include "mcmd/oracles.hpp"

using namespace mcmd;
using namespace mcmd::oracles;

namespace {

Matrix points1(std::initializer_list<double> xs) {
    Matrix m(1, static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) m(0, i++) = x;
    return m;
}

PairwiseWinMatrix win_from(std::initializer_list<std::initializer_list<double>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Matrix P(n, n);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (double v : row) P(i, j++) = v;
        ++i;
    }
    PairwiseWinMatrix out{std::move(P)};
    out.validate();
    return out;
}

} // namespace

TEST_CASE("a deterministic GP maximizer gets all the brute-force mass") {
    Dataset data;
    data.inputs = points1({0.0, 1.0, 2.0});
    data.outputs = Vector(3);
    data.outputs << 0.1, 0.9, -0.4;
    data.noise_std = 1e-6;
    GPPosterior gp(squared_exponential_1d(1.0, 0.4), data);

    Rng rng(1);
    auto dist = brute_force_max_distribution(gp, data.inputs, 2000, rng);
    CHECK(dist.probabilities[1] > 0.999);
}

TEST_CASE("two symmetric grid points split the mass evenly") {
    // Far apart under a short length scale: equal means and variances with
    // negligible cross-covariance.
    GPPosterior gp(squared_exponential_1d(1.0, 0.1), empty_dataset(1));
    Matrix grid = points1({-2.0, 2.0});
    const long n = 100000;
    Rng rng(2);
    auto dist = brute_force_max_distribution(gp, grid, n, rng);
    double se = std::sqrt(0.25 / double(n));
    CHECK(std::abs(dist.probabilities[0] - 0.5) < 3.0 * se);
}

TEST_CASE("brute-force histograms converge between sample sizes") {
    auto fx = bench::example_gp_fixture(1);
    Matrix grid = grid_1d(fx.domain, 20);
    Rng ra(3), rb(4);
    auto small = brute_force_max_distribution(fx.gp, grid, 100000, ra);
    auto large = brute_force_max_distribution(fx.gp, grid, 1000000, rb);
    CHECK(tv_distance(small.probabilities, large.probabilities) < 0.02);
}

TEST_CASE("pairwise win matrix: symmetric pairs sit at one half") {
    GPPosterior gp(squared_exponential_1d(1.0, 0.1), empty_dataset(1));
    auto win = pairwise_win_matrix(gp, points1({-2.0, 2.0}));
    CHECK(win.P(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(win.P(1, 0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pairwise win matrix: a one-sigma mean gap gives Phi(1)") {
    // One near-noiseless observation pins the first point at mean 1 with
    // variance ~0; a far-away second point keeps the prior (mean 0,
    // variance 1). The mean gap then equals the difference's standard
    // deviation, so P_01 = Phi(1).
    Dataset data;
    data.inputs = points1({0.0});
    data.outputs = Vector::Constant(1, 1.0);
    data.noise_std = 1e-7;
    GPPosterior gp(squared_exponential_1d(1.0, 0.3), data);

    Matrix grid = points1({0.0, 20.0});
    auto win = pairwise_win_matrix(gp, grid);
    CHECK(win.P(0, 1) == doctest::Approx(0.8413447460685429).epsilon(1e-9));
    CHECK(win.P(1, 0) == doctest::Approx(1.0 - 0.8413447460685429).epsilon(1e-9));

    // The generic z path agrees with a direct erfc evaluation.
    auto [mu, cov] = gp.predict(grid);
    double z = (mu[0] - mu[1]) /
               std::sqrt(cov(0, 0) + cov(1, 1) - 2.0 * cov(0, 1));
    CHECK(win.P(0, 1) ==
          doctest::Approx(0.5 * std::erfc(-z / std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("pairwise win matrix is antisymmetric on a randomized grid") {
    auto fx = bench::example_gp_fixture(5);
    Rng rng(5);
    Matrix grid(1, 6);
    for (int i = 0; i < 6; ++i) grid(0, i) = -3.0 + 6.0 * uniform01(rng);
    auto win = pairwise_win_matrix(fx.gp, grid);
    for (int i = 0; i < 6; ++i) {
        CHECK(win.P(i, i) == 0.5);
        for (int j = 0; j < 6; ++j)
            if (i != j) CHECK(win.P(i, j) + win.P(j, i) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("degenerate pairs collapse to the deterministic limit") {
    // Same-cell points under the stepped kernel are perfectly correlated:
    // the difference has zero variance and equal means, so P falls back to 1/2.
    auto fx = bench::stepped_posterior_fixture(2);
    Matrix grid = points1({0.2, 0.8});
    auto win = pairwise_win_matrix(fx.gp, grid);
    CHECK(win.P(0, 1) == 0.5);
    CHECK(win.P(1, 0) == 0.5);
}

TEST_CASE("two-point limit distribution is (beta, 1 - beta)") {
    Matrix grid = points1({0.0, 1.0});
    for (double beta : {0.1, 0.3, 0.5, 0.8, 0.97}) {
        auto win = win_from({{0.5, beta}, {1.0 - beta, 0.5}});
        auto p = discrete_limit_distribution(win, grid);
        CHECK(p.probabilities[0] == doctest::Approx(beta).epsilon(1e-9));
        CHECK(p.probabilities[1] == doctest::Approx(1.0 - beta).epsilon(1e-9));
    }
}

TEST_CASE("fully symmetric win matrices give the uniform limit") {
    for (int n : {2, 3, 5, 8}) {
        Matrix P = Matrix::Constant(n, n, 0.5);
        PairwiseWinMatrix win{P};
        Matrix grid(1, n);
        for (int i = 0; i < n; ++i) grid(0, i) = i;
        auto p = discrete_limit_distribution(win, grid);
        for (int i = 0; i < n; ++i)
            CHECK(p.probabilities[i] == doctest::Approx(1.0 / n).epsilon(1e-9));
    }
}

TEST_CASE("limit distributions satisfy the balance equation") {
    auto fx = bench::example_gp_fixture(7);
    Matrix grid = grid_1d(fx.domain, 20);
    auto win = pairwise_win_matrix(fx.gp, grid);
    auto p = discrete_limit_distribution(win, grid);
    CHECK(balance_residual(win, p.probabilities) < 1e-9);
    CHECK(p.probabilities.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.probabilities.minCoeff() >= 0.0);
}

TEST_CASE("the limit distribution is not the true maximum distribution") {
    auto fx = bench::example_gp_fixture(1);
    Matrix grid = grid_1d(fx.domain, 20);
    auto win = pairwise_win_matrix(fx.gp, grid);
    auto limit = discrete_limit_distribution(win, grid);
    Rng rng(6);
    auto brute = brute_force_max_distribution(fx.gp, grid, 1000000, rng);
    auto cmp = compare_distributions(limit, brute);
    CHECK(cmp.tv_distance > 0.01);
    // Less peaked: the limit carries at least as much entropy.
    CHECK(cmp.entropy_a >= cmp.entropy_b - 0.05);
}

TEST_CASE("comparing a distribution with itself yields zeros") {
    Matrix grid = points1({0.0, 1.0, 2.0});
    Vector p(3);
    p << 0.2, 0.5, 0.3;
    DiscreteMaxDist d{grid, p};
    auto cmp = compare_distributions(d, d);
    CHECK(cmp.tv_distance == 0.0);
    CHECK(cmp.kl_divergence == 0.0);
    CHECK(cmp.entropy_a == cmp.entropy_b);
}

TEST_CASE("disjoint point masses are at total variation one") {
    Matrix grid = points1({0.0, 1.0});
    Vector a(2), b(2);
    a << 1.0, 0.0;
    b << 0.0, 1.0;
    auto cmp = compare_distributions({grid, a}, {grid, b});
    CHECK(cmp.tv_distance == 1.0);
    CHECK(cmp.kl_divergence > 0.0);
}

TEST_CASE("uniform over four points has entropy ln 4") {
    Matrix grid = points1({0.0, 1.0, 2.0, 3.0});
    Vector p = Vector::Constant(4, 0.25);
    auto cmp = compare_distributions({grid, p}, {grid, p});
    CHECK(cmp.entropy_a == doctest::Approx(1.3862943611198906).epsilon(1e-12));
}

TEST_CASE("mismatched grids are rejected") {
    Vector p2 = Vector::Constant(2, 0.5);
    DiscreteMaxDist a{points1({0.0, 1.0}), p2};
    DiscreteMaxDist b{points1({0.0, 2.0}), p2};
    CHECK_THROWS_AS(compare_distributions(a, b), std::invalid_argument);
    DiscreteMaxDist c{points1({0.0, 1.0, 2.0}), Vector::Constant(3, 1.0 / 3)};
    CHECK_THROWS_AS(compare_distributions(a, c), std::invalid_argument);
}

TEST_CASE("invalid win matrices are rejected") {
    Matrix P = Matrix::Constant(2, 2, 0.5);
    P(0, 1) = 0.7;
    P(1, 0) = 0.4;   // antisymmetry broken
    PairwiseWinMatrix bad{P};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    Matrix Q = Matrix::Constant(2, 2, 0.5);
    Q(0, 0) = 0.9;   // diagonal off
    PairwiseWinMatrix bad2{Q};
    CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_CASE("brute force validates its inputs") {
    GPPosterior gp(squared_exponential_1d(1.0, 0.5), empty_dataset(1));
    Rng rng(8);
    CHECK_THROWS_AS(brute_force_max_distribution(gp, Matrix(1, 0), 10, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_max_distribution(gp, points1({0.0}), 0, rng),
                    std::invalid_argument);
}
