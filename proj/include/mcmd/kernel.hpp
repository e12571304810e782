#pragma once

#include "mcmd/domain.hpp"

namespace mcmd {

enum class KernelFamily {
    SquaredExponential,
    // Inputs are snapped to unit-cell centers (floor(x_k) + 1/2) before the
    // squared-exponential form is applied. Function draws are then constant
    // within each integer cell, which turns the continuous machinery into an
    // exactly discrete GP over cells; used by the discrete benchmark fixtures.
    SteppedSquaredExponential,
};

// Covariance function family plus hyperparameters, and a constant prior mean.
struct KernelSpec {
    KernelFamily family = KernelFamily::SquaredExponential;
    double signal_variance = 1.0;
    Vector length_scales;   // one per input dimension, all > 0
    double prior_mean = 0.0;

    int dim() const { return static_cast<int>(length_scales.size()); }
    void validate() const;
};

KernelSpec squared_exponential(double signal_variance, Vector length_scales,
                               double prior_mean = 0.0);
KernelSpec squared_exponential_1d(double signal_variance, double length_scale,
                                  double prior_mean = 0.0);

double kernel_value(const KernelSpec& spec, const Vector& a, const Vector& b);

// Entry (i, j) = k(A_i, B_j); symmetric and PSD when A and B coincide.
Matrix kernel_eval(const KernelSpec& spec, const Matrix& A, const Matrix& B);

} // namespace mcmd
