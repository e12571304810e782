#pragma once

#include <Eigen/Core>

#include "mcmd/rng.hpp"

namespace mcmd {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Point sets are d x n matrices, one point per column.

// Compact axis-aligned box; the input space of the optimization problem.
struct Domain {
    Vector lower;
    Vector upper;

    Domain(Vector lo, Vector hi);

    int dim() const { return static_cast<int>(lower.size()); }
    double edge(int k) const { return upper[k] - lower[k]; }
    double volume() const;
    // The flat base density q(x) = 1 / volume.
    double flat_density() const { return 1.0 / volume(); }
    bool contains(const Vector& x, double tol = 0.0) const;
    Vector clamp(Vector x) const;
};

Domain domain_1d(double lo, double hi);

Vector uniform_in(const Domain& domain, Rng& rng);

// n evenly spaced values including both endpoints (n >= 2).
Vector linspace(double lo, double hi, int n);

// Evenly spaced 1-D grid as a point set.
Matrix grid_1d(const Domain& domain, int n);

} // namespace mcmd
