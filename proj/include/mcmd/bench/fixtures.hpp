#pragma once

#include "mcmd/gp.hpp"

namespace mcmd::bench {

struct GpFixture {
    Domain domain;
    GPPosterior gp;
};

// The 1-D demo setup: n_measurements noisy observations of the example
// function at uniform-random locations in [-3, 3] with sigma_n = 0.3, under a
// squared-exponential prior (signal variance 1, length scale 0.5).
GpFixture example_gp_fixture(std::uint64_t seed, int n_measurements = 20,
                             double signal_variance = 1.0,
                             double length_scale = 0.5, double noise_std = 0.3,
                             double prior_mean = 0.0);

// Discrete GPs over the unit cells of [0, n_cells]; draws are constant
// within each cell (stepped kernel), so particle fractions per cell are the
// discrete distribution the limit-distribution oracle talks about.
Matrix cell_centers(int n_cells);

// Symmetric: no data, every cell exchangeable.
GpFixture stepped_prior_fixture(int n_cells);

// Asymmetric: conditioned on a few noisy observations.
GpFixture stepped_posterior_fixture(int n_cells);

} // namespace mcmd::bench
