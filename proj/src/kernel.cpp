#include "mcmd/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace mcmd {

namespace {

inline double snap_to_cell(double v) { return std::floor(v) + 0.5; }

inline double scaled_sqdist(const KernelSpec& spec, const Vector& a, const Vector& b) {
    double s = 0.0;
    for (int k = 0; k < spec.dim(); ++k) {
        double va = a[k];
        double vb = b[k];
        if (spec.family == KernelFamily::SteppedSquaredExponential) {
            va = snap_to_cell(va);
            vb = snap_to_cell(vb);
        }
        double d = (va - vb) / spec.length_scales[k];
        s += d * d;
    }
    return s;
}

} // namespace

void KernelSpec::validate() const {
    if (!(signal_variance > 0.0))
        throw std::invalid_argument("KernelSpec: signal variance must be > 0");
    if (length_scales.size() == 0)
        throw std::invalid_argument("KernelSpec: no length scales");
    for (int k = 0; k < dim(); ++k) {
        if (!(length_scales[k] > 0.0))
            throw std::invalid_argument("KernelSpec: length scales must be > 0");
    }
}

KernelSpec squared_exponential(double signal_variance, Vector length_scales,
                               double prior_mean) {
    KernelSpec spec;
    spec.family = KernelFamily::SquaredExponential;
    spec.signal_variance = signal_variance;
    spec.length_scales = std::move(length_scales);
    spec.prior_mean = prior_mean;
    spec.validate();
    return spec;
}

KernelSpec squared_exponential_1d(double signal_variance, double length_scale,
                                  double prior_mean) {
    Vector ls(1);
    ls << length_scale;
    return squared_exponential(signal_variance, std::move(ls), prior_mean);
}

double kernel_value(const KernelSpec& spec, const Vector& a, const Vector& b) {
    if (a.size() != spec.dim() || b.size() != spec.dim())
        throw std::invalid_argument("kernel_value: point dimension mismatch");
    return spec.signal_variance * std::exp(-0.5 * scaled_sqdist(spec, a, b));
}

Matrix kernel_eval(const KernelSpec& spec, const Matrix& A, const Matrix& B) {
    if (A.rows() != spec.dim() || B.rows() != spec.dim())
        throw std::invalid_argument("kernel_eval: point dimension mismatch");

    // Scale (and snap) once; the explicit pairwise differences keep the
    // result exactly symmetric with k(x, x) = signal variance.
    Matrix sa = A;
    Matrix sb = B;
    if (spec.family == KernelFamily::SteppedSquaredExponential) {
        sa = sa.array().floor() + 0.5;
        sb = sb.array().floor() + 0.5;
    }
    for (int k = 0; k < spec.dim(); ++k) {
        sa.row(k) /= spec.length_scales[k];
        sb.row(k) /= spec.length_scales[k];
    }
    Matrix out(sa.cols(), sb.cols());
    for (Eigen::Index j = 0; j < sb.cols(); ++j) {
        for (Eigen::Index i = 0; i < sa.cols(); ++i) {
            double sq = (sa.col(i) - sb.col(j)).squaredNorm();
            out(i, j) = spec.signal_variance * std::exp(-0.5 * sq);
        }
    }
    return out;
}

} // namespace mcmd
