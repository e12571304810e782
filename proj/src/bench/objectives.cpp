#include "mcmd/bench/objectives.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mcmd::bench {

void BenchObjective::self_check() const {
    for (const auto& x : optimizers) {
        double v = evaluate(x);
        if (std::abs(v - f_star) > 1e-9)
            throw std::runtime_error("BenchObjective " + name +
                                     ": declared optimizer misses f_star");
    }
}

double example_function(double x) {
    return std::cos(3.0 * x) - x * x / 9.0 + x / 6.0;
}

double branin_negative(double x1, double x2) {
    const double pi = std::numbers::pi;
    double inner = x2 - 51.0 * x1 * x1 / (40.0 * pi * pi) + 5.0 * x1 / pi - 6.0;
    return -inner * inner - 10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x1) - 10.0;
}

namespace {

Vector point1(double x) {
    Vector v(1);
    v << x;
    return v;
}

Vector point2(double x1, double x2) {
    Vector v(2);
    v << x1, x2;
    return v;
}

} // namespace

BenchObjective make_example_objective() {
    BenchObjective obj{
        "example-1d",
        domain_1d(-3.0, 3.0),
        [](const Vector& x) { return example_function(x[0]); },
        0.0,
        {},
    };

    // Grid scan at 1e-4 resolution, then a shrinking local polish of the
    // best cell; f_star is the value the recorded optimizer attains.
    const double lo = -3.0, hi = 3.0, resolution = 1e-4;
    const long cells = std::lround((hi - lo) / resolution);
    double best_x = lo, best_v = example_function(lo);
    for (long i = 1; i <= cells; ++i) {
        double x = lo + resolution * static_cast<double>(i);
        double v = example_function(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double step = resolution;
    while (step > 1e-14) {
        bool moved = false;
        for (double candidate : {best_x - step, best_x + step}) {
            if (candidate < lo || candidate > hi) continue;
            double v = example_function(candidate);
            if (v > best_v) {
                best_v = v;
                best_x = candidate;
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }

    obj.f_star = best_v;
    obj.optimizers = {point1(best_x)};
    obj.self_check();
    return obj;
}

BenchObjective make_branin_objective() {
    const double pi = std::numbers::pi;
    Vector lo(2), hi(2);
    lo << -5.0, 0.0;
    hi << 10.0, 15.0;
    BenchObjective obj{
        "branin",
        Domain(lo, hi),
        [](const Vector& x) { return branin_negative(x[0], x[1]); },
        -5.0 / (4.0 * pi),
        {point2(-pi, 491.0 / 40.0), point2(pi, 91.0 / 40.0), point2(3.0 * pi, 99.0 / 40.0)},
    };
    obj.self_check();
    return obj;
}

BenchObjective make_constant_objective() {
    BenchObjective obj{
        "constant",
        domain_1d(-1.0, 1.0),
        [](const Vector&) { return 0.5; },
        0.5,
        {point1(0.0), point1(0.25)},
    };
    obj.self_check();
    return obj;
}

BenchObjective objective_by_name(const std::string& name) {
    if (name == "example-1d") return make_example_objective();
    if (name == "branin") return make_branin_objective();
    if (name == "constant") return make_constant_objective();
    throw std::invalid_argument("unknown objective: " + name);
}

} // namespace mcmd::bench
