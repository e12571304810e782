#include "mcmd/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcmd/mathutil.hpp"

namespace mcmd {

std::string acquisition_name(AcquisitionKind kind) {
    switch (kind) {
        case AcquisitionKind::Thompson: return "thompson";
        case AcquisitionKind::UCB: return "ucb";
        case AcquisitionKind::PI: return "pi";
        case AcquisitionKind::EI: return "ei";
        case AcquisitionKind::EV: return "ev";
    }
    throw std::logic_error("acquisition_name: unknown kind");
}

AcquisitionKind acquisition_from_name(const std::string& name) {
    if (name == "thompson") return AcquisitionKind::Thompson;
    if (name == "ucb") return AcquisitionKind::UCB;
    if (name == "pi") return AcquisitionKind::PI;
    if (name == "ei") return AcquisitionKind::EI;
    if (name == "ev") return AcquisitionKind::EV;
    throw std::invalid_argument("unknown acquisition: " + name);
}

void AcquisitionSpec::validate() const {
    if (!(kappa >= 0.0)) throw std::invalid_argument("AcquisitionSpec: kappa must be >= 0");
    if (!(xi >= 0.0)) throw std::invalid_argument("AcquisitionSpec: xi must be >= 0");
}

double ucb_value(double mu, double sigma, double kappa) { return mu + kappa * sigma; }

double pi_value(double mu, double sigma, double y_best, double xi) {
    double gap = mu - y_best - xi;
    if (sigma <= 0.0) return gap > 0.0 ? 1.0 : (gap < 0.0 ? 0.0 : 0.5);
    return normal_cdf(gap / sigma);
}

double ei_value(double mu, double sigma, double y_best, double xi) {
    double gap = mu - y_best - xi;
    if (sigma <= 0.0) return std::max(0.0, gap);
    double z = gap / sigma;
    return std::max(0.0, gap * normal_cdf(z) + sigma * normal_pdf(z));
}

double best_observed(const GPPosterior& gp) {
    if (gp.data().size() == 0) return gp.kernel().prior_mean;
    return gp.data().outputs.maxCoeff();
}

double acq_ucb(const GPPosterior& gp, const Vector& x, double kappa) {
    auto [mu, var] = gp.predict_point(x);
    return ucb_value(mu, std::sqrt(var), kappa);
}

double acq_ev(const GPPosterior& gp, const Vector& x) {
    return gp.predict_point(x).first;
}

double acq_pi(const GPPosterior& gp, const Vector& x, double y_best, double xi) {
    auto [mu, var] = gp.predict_point(x);
    return pi_value(mu, std::sqrt(var), y_best, xi);
}

double acq_ei(const GPPosterior& gp, const Vector& x, double y_best, double xi) {
    auto [mu, var] = gp.predict_point(x);
    return ei_value(mu, std::sqrt(var), y_best, xi);
}

namespace {

constexpr int kCoarsePerDim = 20;
constexpr int kCoarseCap = 400;
constexpr int kRefineStarts = 5;
constexpr int kRefineEvals = 100;

double evaluate(const GPPosterior& gp, const AcquisitionSpec& spec, double y_best,
                const Vector& x) {
    switch (spec.kind) {
        case AcquisitionKind::UCB: return acq_ucb(gp, x, spec.kappa);
        case AcquisitionKind::PI: return acq_pi(gp, x, y_best, spec.xi);
        case AcquisitionKind::EI: return acq_ei(gp, x, y_best, spec.xi);
        case AcquisitionKind::EV: return acq_ev(gp, x);
        case AcquisitionKind::Thompson: break;
    }
    throw std::invalid_argument("maximize_acquisition: Thompson has no acquisition");
}

// Coarse candidates: an even grid in 1-D, a Latin hypercube otherwise.
Matrix coarse_candidates(const Domain& domain, Rng& rng) {
    const int d = domain.dim();
    long count = 1;
    for (int k = 0; k < d && count < kCoarseCap; ++k) count *= kCoarsePerDim;
    count = std::min<long>(count, kCoarseCap);

    Matrix points(d, count);
    if (d == 1) {
        points.row(0) =
            linspace(domain.lower[0], domain.upper[0], static_cast<int>(count)).transpose();
        return points;
    }
    for (int k = 0; k < d; ++k) {
        std::vector<int> strata(count);
        for (long i = 0; i < count; ++i) strata[i] = static_cast<int>(i);
        std::shuffle(strata.begin(), strata.end(), rng);
        for (long i = 0; i < count; ++i) {
            double u = (strata[i] + uniform01(rng)) / static_cast<double>(count);
            points(k, i) = domain.lower[k] + u * domain.edge(k);
        }
    }
    return points;
}

// Coordinate search with shrinking steps from the given start; keeps within
// an evaluation budget and never leaves the domain.
std::pair<Vector, double> refine(const GPPosterior& gp, const AcquisitionSpec& spec,
                                 double y_best, const Domain& domain, Vector x,
                                 double value) {
    const int d = domain.dim();
    Vector step(d);
    for (int k = 0; k < d; ++k) step[k] = domain.edge(k) / (2.0 * kCoarsePerDim);

    int evals = 0;
    while (evals < kRefineEvals) {
        bool improved = false;
        for (int k = 0; k < d && evals < kRefineEvals; ++k) {
            for (double direction : {+1.0, -1.0}) {
                if (evals >= kRefineEvals) break;
                Vector candidate = x;
                candidate[k] =
                    std::clamp(candidate[k] + direction * step[k], domain.lower[k], domain.upper[k]);
                if (candidate[k] == x[k]) continue;
                double v = evaluate(gp, spec, y_best, candidate);
                ++evals;
                if (v > value) {
                    value = v;
                    x = candidate;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            step *= 0.5;
            if (step.maxCoeff() < 1e-12) break;
        }
    }
    return {x, value};
}

} // namespace

Vector maximize_acquisition(const GPPosterior& gp, const AcquisitionSpec& spec,
                            const Domain& domain, Rng& rng) {
    spec.validate();
    if (spec.kind == AcquisitionKind::Thompson)
        throw std::invalid_argument("maximize_acquisition: Thompson does not use one");

    const double y_best = best_observed(gp);
    Matrix candidates = coarse_candidates(domain, rng);

    std::vector<std::pair<double, int>> scored(candidates.cols());
    for (Eigen::Index i = 0; i < candidates.cols(); ++i)
        scored[i] = {evaluate(gp, spec, y_best, candidates.col(i)), static_cast<int>(i)};
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        return a.first > b.first || (a.first == b.first && a.second < b.second);
    });

    Vector best_x = candidates.col(scored[0].second);
    double best_v = scored[0].first;
    const int starts = std::min<int>(kRefineStarts, static_cast<int>(scored.size()));
    for (int s = 0; s < starts; ++s) {
        auto [x, v] = refine(gp, spec, y_best, domain,
                             candidates.col(scored[s].second), scored[s].first);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    return best_x;
}

} // namespace mcmd
