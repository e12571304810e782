#include "mcmd/gp.hpp"

#include <cmath>
#include <stdexcept>

namespace mcmd {

void Dataset::validate() const {
    if (inputs.cols() != outputs.size())
        throw std::invalid_argument("Dataset: |X| != |y|");
    if (!(noise_std >= 0.0))
        throw std::invalid_argument("Dataset: noise std must be >= 0");
}

Dataset empty_dataset(int dim) {
    Dataset data;
    data.inputs = Matrix(dim, 0);
    data.outputs = Vector(0);
    data.noise_std = 0.0;
    return data;
}

Matrix cholesky_with_jitter(const Matrix& cov, double signal_variance) {
    const double floor = 1e-10 * signal_variance;
    const double ceiling = 1e-4 * signal_variance;
    Matrix sym = 0.5 * (cov + cov.transpose());
    for (double jitter = floor; jitter <= ceiling * (1.0 + 1e-12); jitter *= 10.0) {
        Matrix shifted = sym;
        shifted.diagonal().array() += jitter;
        Eigen::LLT<Matrix> llt(shifted);
        if (llt.info() == Eigen::Success) return llt.matrixL();
    }
    throw std::runtime_error("cholesky_with_jitter: matrix not PD after maximum jitter");
}

namespace {

// Exact duplicates with zero noise make conditioning ill-posed; jitter would
// mask the problem instead of surfacing it.
void check_duplicates_with_zero_noise(const Dataset& data) {
    if (data.noise_std > 0.0) return;
    for (int i = 0; i < data.size(); ++i) {
        for (int j = i + 1; j < data.size(); ++j) {
            if (data.inputs.col(i) == data.inputs.col(j))
                throw std::invalid_argument(
                    "GPPosterior: duplicate inputs with zero measurement noise");
        }
    }
}

} // namespace

GPPosterior::GPPosterior(KernelSpec kernel, Dataset data)
    : kernel_(std::move(kernel)), data_(std::move(data)) {
    kernel_.validate();
    data_.validate();
    if (data_.size() > 0 && data_.inputs.rows() != kernel_.dim())
        throw std::invalid_argument("GPPosterior: data dimension mismatch");
    check_duplicates_with_zero_noise(data_);

    const int n = data_.size();
    if (n == 0) return;

    Matrix gram = kernel_eval(kernel_, data_.inputs, data_.inputs);
    gram.diagonal().array() += data_.noise_std * data_.noise_std;
    chol_ = cholesky_with_jitter(gram, kernel_.signal_variance);

    Vector residual = data_.outputs.array() - kernel_.prior_mean;
    alpha_ = chol_.transpose().triangularView<Eigen::Upper>().solve(
        chol_.triangularView<Eigen::Lower>().solve(residual));
}

std::pair<Vector, Matrix> GPPosterior::predict(const Matrix& points) const {
    if (points.rows() != kernel_.dim())
        throw std::invalid_argument("predict: point dimension mismatch");
    const Eigen::Index m = points.cols();
    Matrix prior_cov = kernel_eval(kernel_, points, points);
    Vector mean = Vector::Constant(m, kernel_.prior_mean);
    if (data_.size() == 0) return {std::move(mean), std::move(prior_cov)};

    Matrix cross = kernel_eval(kernel_, data_.inputs, points);   // n x m
    mean += cross.transpose() * alpha_;
    Matrix v = chol_.triangularView<Eigen::Lower>().solve(cross);
    Matrix cov = prior_cov - v.transpose() * v;
    cov = 0.5 * (cov + cov.transpose());
    return {std::move(mean), std::move(cov)};
}

std::pair<Vector, Vector> GPPosterior::predict_marginals(const Matrix& points) const {
    if (points.rows() != kernel_.dim())
        throw std::invalid_argument("predict_marginals: point dimension mismatch");
    const Eigen::Index m = points.cols();
    Vector mean = Vector::Constant(m, kernel_.prior_mean);
    Vector var = Vector::Constant(m, kernel_.signal_variance);
    if (data_.size() == 0) return {std::move(mean), std::move(var)};

    Matrix cross = kernel_eval(kernel_, data_.inputs, points);
    mean += cross.transpose() * alpha_;
    Matrix v = chol_.triangularView<Eigen::Lower>().solve(cross);
    var -= v.colwise().squaredNorm().transpose();
    var = var.cwiseMax(0.0);
    return {std::move(mean), std::move(var)};
}

std::pair<double, double> GPPosterior::predict_point(const Vector& x) const {
    auto [mean, var] = predict_marginals(x);
    return {mean[0], var[0]};
}

JointSampler::JointSampler(const GPPosterior& gp, Matrix points) {
    auto [mean, cov] = gp.predict(points);
    mean_ = std::move(mean);
    cov_ = std::move(cov);
    chol_ = cholesky_with_jitter(cov_, gp.kernel().signal_variance);
}

Vector JointSampler::draw(Rng& rng) const {
    Vector z(mean_.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = std_normal(rng);
    return mean_ + chol_ * z;
}

Vector sample_joint(const GPPosterior& gp, const Matrix& points, Rng& rng) {
    if (points.cols() < 1)
        throw std::invalid_argument("sample_joint: need at least one point");
    return JointSampler(gp, points).draw(rng);
}

} // namespace mcmd
