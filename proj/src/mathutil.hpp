#pragma once

#include <cmath>

namespace resgen {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kLogSqrt2Pi = 0.91893853320467274178;

inline double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }
inline double norm_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }
inline double norm_sf(double x) { return 0.5 * std::erfc(x * kInvSqrt2); }

/// Inverse of the standard normal CDF (Wichura's AS241, double precision).
double norm_quantile(double p);

/// exp(x^2) * erfc(x), stable for large positive x.
double erfcx(double x);

// Hazard-type ratios, stable over the whole real line.
double mills_lower(double t);  // phi(t) / Phi(t)
double mills_upper(double t);  // phi(t) / (1 - Phi(t))

double log_norm_cdf(double t);  // log Phi(t)
double log_norm_sf(double t);   // log (1 - Phi(t))

// One-sided truncated standard-normal moments.
inline double trunc_mean_below(double t) { return -mills_lower(t); }  // E[Z | Z <= t]
inline double trunc_mean_above(double t) { return mills_upper(t); }   // E[Z | Z >= t]
inline double trunc_m2_below(double t) { return 1.0 - t * mills_lower(t); }  // E[Z^2 | Z <= t]
inline double trunc_m2_above(double t) { return 1.0 + t * mills_upper(t); }  // E[Z^2 | Z >= t]

inline double logistic(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace resgen
