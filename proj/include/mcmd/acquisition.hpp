#pragma once

#include <string>

#include "mcmd/maxdist.hpp"

namespace mcmd {

enum class AcquisitionKind { Thompson, UCB, PI, EI, EV };

std::string acquisition_name(AcquisitionKind kind);
AcquisitionKind acquisition_from_name(const std::string& name);

struct AcquisitionSpec {
    AcquisitionKind kind = AcquisitionKind::Thompson;
    double kappa = 2.0;   // ucb
    double xi = 0.0;      // pi, ei
    MCMDConfig mcmd;      // thompson

    std::string label() const { return acquisition_name(kind); }
    void validate() const;
};

// Closed forms on (mu, sigma). sigma = 0 takes the deterministic limit:
// PI becomes a step around y_best + xi, EI the hinge max(0, mu - y_best - xi).
double ucb_value(double mu, double sigma, double kappa);
double pi_value(double mu, double sigma, double y_best, double xi);
double ei_value(double mu, double sigma, double y_best, double xi);

// The highest observation so far; the prior mean when there is no data yet.
double best_observed(const GPPosterior& gp);

double acq_ucb(const GPPosterior& gp, const Vector& x, double kappa);
double acq_ev(const GPPosterior& gp, const Vector& x);
double acq_pi(const GPPosterior& gp, const Vector& x, double y_best, double xi);
double acq_ei(const GPPosterior& gp, const Vector& x, double y_best, double xi);

// Multi-start maximization: coarse candidates (an even grid in 1-D, Latin
// hypercube above), then the best few refined by coordinate search with
// shrinking steps. Always returns an evaluated in-domain point, never worse
// than the best coarse candidate. spec.kind must not be Thompson.
Vector maximize_acquisition(const GPPosterior& gp, const AcquisitionSpec& spec,
                            const Domain& domain, Rng& rng);

} // namespace mcmd
