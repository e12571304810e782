#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mcmd/domain.hpp"

namespace mcmd::bench {

// Closed-form benchmark with a known maximum; the ground truth for regret.
struct BenchObjective {
    std::string name;
    Domain domain;
    std::function<double(const Vector&)> evaluate;
    double f_star = 0.0;
    std::vector<Vector> optimizers;

    // Every listed optimizer must attain f_star within 1e-9.
    void self_check() const;
};

// cos(3x) - x^2/9 + x/6 on [-3, 3]. Global maximum near x = 0.02 with a
// competing local maximum near x = 2.
double example_function(double x);

// Negative Branin on [-5, 10] x [0, 15]; three maximizers, all at -5/(4 pi).
double branin_negative(double x1, double x2);

// f_star for the 1-D example comes from a 1e-4-resolution grid scan plus a
// local polish of the best cell.
BenchObjective make_example_objective();
BenchObjective make_branin_objective();
// Flat landscape; every method has zero regret on it by definition.
BenchObjective make_constant_objective();

// Names: example-1d, branin, constant.
BenchObjective objective_by_name(const std::string& name);

} // namespace mcmd::bench
