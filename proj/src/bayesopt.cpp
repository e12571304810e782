#include "mcmd/bayesopt.hpp"

#include <stdexcept>

namespace mcmd {

Vector thompson_suggest(const GPPosterior& gp, const MCMDConfig& cfg,
                        const Domain& domain, Rng& rng) {
    MaxDistEstimate est = run_mcmd(gp, cfg, domain, rng);
    return sample_from_estimate(est, domain, rng);
}

RunTrace run_optimization(const Objective& objective, double noise_std,
                          const Domain& domain, const KernelSpec& prior,
                          const AcquisitionSpec& spec, int n_iters,
                          double f_star, Rng& rng,
                          const IterationObserver& observer) {
    if (n_iters < 1) throw std::invalid_argument("run_optimization: n_iters must be >= 1");
    if (!(noise_std >= 0.0))
        throw std::invalid_argument("run_optimization: noise std must be >= 0");
    spec.validate();

    RunTrace trace;
    trace.method = spec.label();

    Dataset data = empty_dataset(domain.dim());
    data.noise_std = noise_std;
    double cumulative = 0.0;

    for (int k = 1; k <= n_iters; ++k) {
        GPPosterior gp(prior, data);

        Vector x;
        if (spec.kind == AcquisitionKind::Thompson) {
            x = thompson_suggest(gp, spec.mcmd, domain, rng);
        } else {
            x = maximize_acquisition(gp, spec, domain, rng);
            trace.acquisition_maximizations += 1;
        }

        double f;
        try {
            f = objective(x);
        } catch (...) {
            trace.aborted = true;
            return trace;
        }
        double y = f + (noise_std > 0.0 ? noise_std * std_normal(rng) : 0.0);

        IterationRecord rec;
        rec.index = k;
        rec.input = x;
        rec.observed = y;
        rec.instant_regret = f_star - f;
        cumulative += rec.instant_regret;
        rec.cumulative_regret = cumulative;
        trace.iterations.push_back(std::move(rec));

        data.inputs.conservativeResize(domain.dim(), data.inputs.cols() + 1);
        data.inputs.col(data.inputs.cols() - 1) = x;
        data.outputs.conservativeResize(data.outputs.size() + 1);
        data.outputs[data.outputs.size() - 1] = y;

        if (observer) {
            GPPosterior updated(prior, data);
            observer(k, updated, trace);
        }
    }
    return trace;
}

} // namespace mcmd
