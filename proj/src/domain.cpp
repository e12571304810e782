#include "mcmd/domain.hpp"

#include <stdexcept>

namespace mcmd {

Domain::Domain(Vector lo, Vector hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() == 0 || lower.size() != upper.size())
        throw std::invalid_argument("Domain: bound dimensions mismatch");
    for (int k = 0; k < dim(); ++k) {
        if (!(lower[k] < upper[k]))
            throw std::invalid_argument("Domain: requires lower[k] < upper[k]");
    }
}

double Domain::volume() const {
    double v = 1.0;
    for (int k = 0; k < dim(); ++k) v *= edge(k);
    return v;
}

bool Domain::contains(const Vector& x, double tol) const {
    if (x.size() != lower.size()) return false;
    for (int k = 0; k < dim(); ++k) {
        if (x[k] < lower[k] - tol || x[k] > upper[k] + tol) return false;
    }
    return true;
}

Vector Domain::clamp(Vector x) const {
    for (int k = 0; k < dim(); ++k) {
        if (x[k] < lower[k]) x[k] = lower[k];
        if (x[k] > upper[k]) x[k] = upper[k];
    }
    return x;
}

Domain domain_1d(double lo, double hi) {
    Vector l(1), u(1);
    l << lo;
    u << hi;
    return Domain(std::move(l), std::move(u));
}

Vector uniform_in(const Domain& domain, Rng& rng) {
    Vector x(domain.dim());
    for (int k = 0; k < domain.dim(); ++k)
        x[k] = std::uniform_real_distribution<double>(domain.lower[k], domain.upper[k])(rng);
    return x;
}

Vector linspace(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("linspace: n must be >= 2");
    Vector v(n);
    double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) v[i] = lo + step * i;
    v[n - 1] = hi;
    return v;
}

Matrix grid_1d(const Domain& domain, int n) {
    if (domain.dim() != 1) throw std::invalid_argument("grid_1d: domain is not 1-D");
    Matrix g(1, n);
    g.row(0) = linspace(domain.lower[0], domain.upper[0], n).transpose();
    return g;
}

} // namespace mcmd
