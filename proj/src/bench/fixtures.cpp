#include "mcmd/bench/fixtures.hpp"

#include "mcmd/bench/objectives.hpp"

namespace mcmd::bench {

GpFixture example_gp_fixture(std::uint64_t seed, int n_measurements,
                             double signal_variance, double length_scale,
                             double noise_std, double prior_mean) {
    Domain domain = domain_1d(-3.0, 3.0);
    KernelSpec prior = squared_exponential_1d(signal_variance, length_scale, prior_mean);

    Rng rng(mix_seed(seed, 0x0f17));
    Dataset data;
    data.inputs = Matrix(1, n_measurements);
    data.outputs = Vector(n_measurements);
    data.noise_std = noise_std;
    for (int i = 0; i < n_measurements; ++i) {
        Vector x = uniform_in(domain, rng);
        data.inputs.col(i) = x;
        data.outputs[i] = example_function(x[0]) + data.noise_std * std_normal(rng);
    }
    return {domain, GPPosterior(prior, std::move(data))};
}

Matrix cell_centers(int n_cells) {
    Matrix g(1, n_cells);
    for (int i = 0; i < n_cells; ++i) g(0, i) = i + 0.5;
    return g;
}

namespace {

KernelSpec stepped_kernel() {
    KernelSpec spec;
    spec.family = KernelFamily::SteppedSquaredExponential;
    spec.signal_variance = 1.0;
    spec.length_scales = Vector::Constant(1, 1.4);
    spec.prior_mean = 0.0;
    return spec;
}

} // namespace

GpFixture stepped_prior_fixture(int n_cells) {
    Domain domain = domain_1d(0.0, static_cast<double>(n_cells));
    return {domain, GPPosterior(stepped_kernel(), empty_dataset(1))};
}

GpFixture stepped_posterior_fixture(int n_cells) {
    Domain domain = domain_1d(0.0, static_cast<double>(n_cells));

    // A few noisy observations; enough to make the cells clearly unequal
    // while every cell keeps a nonzero chance of being the maximum.
    Dataset data;
    data.noise_std = 0.4;
    if (n_cells < 3) {
        data.inputs = Matrix(1, 2);
        data.inputs << 0.5, n_cells - 0.5;
        data.outputs = Vector(2);
        data.outputs << 0.3, 0.9;
    } else {
        data.inputs = Matrix(1, 3);
        data.inputs << 0.5, 2.5, n_cells - 0.5;
        data.outputs = Vector(3);
        data.outputs << 0.3, 0.9, -0.4;
    }
    return {domain, GPPosterior(stepped_kernel(), std::move(data))};
}

} // namespace mcmd::bench
