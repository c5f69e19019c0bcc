// Full-plane Riemann solver and self-similar sampler.
#pragma once

#include <limits>
#include <stdexcept>

#include "elasto/core.hpp"
#include "elasto/curves.hpp"

namespace elasto {

/// Raised when the 1-wave would travel faster than the 2-wave. Happens for
/// shocks whose jump in u exceeds 4k; no ordered shock/rarefaction solution
/// exists for such data.
class wave_overlap_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Shock speed (u_l + u_r)/2 + (-1)^j k.
double shock_speed(const State& left, const State& right, WaveFamily f, const Params& p);

/// Elementary j-wave joining left to right, which must lie on the j-curve
/// through left. Rarefaction when u_r > u_l, shock otherwise.
Wave make_wave(const State& left, const State& right, WaveFamily f, const Params& p);

/// Solution of the Riemann problem with data left (x < 0) and right (x > 0).
WaveStructure solve_riemann(const State& left, const State& right, const Params& p,
                            double tol = kClassifyTol);

/// State at xi inside a j-rarefaction whose left edge is anchor. The fan
/// constant is fixed by continuity at xi = lambda_j(anchor). Throws
/// std::out_of_range if xi lies outside [lambda_j(anchor), xi_hi].
State fan_state(const State& anchor, WaveFamily f, double xi, const Params& p,
                double xi_hi = std::numeric_limits<double>::infinity());

/// Value of the self-similar solution at xi = x/t. Right-continuous at
/// shocks; fans return their right flank for xi >= xi_hi.
State sample(const WaveStructure& ws, double xi, const Params& p);

}  // namespace elasto
