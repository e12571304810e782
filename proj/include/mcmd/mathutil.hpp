#pragma once

#include <cmath>

namespace mcmd {

inline constexpr double kSqrt2Pi = 2.5066282746310002;

// Standard normal CDF.
inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Standard normal PDF.
inline double normal_pdf(double z) { return std::exp(-0.5 * z * z) / kSqrt2Pi; }

} // namespace mcmd
