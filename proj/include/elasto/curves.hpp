// Wave-curve geometry through a fixed base state.
//
// Both wave curves through a base state are straight lines: the 1-curve
// keeps w_1 = sigma - k u fixed, the 2-curve keeps w_2 = sigma + k u fixed.
// The branch with u > u_b is the rarefaction half (R_j), u < u_b the shock
// half (S_j). Together the four half-lines split the plane into Gamma1..Gamma4.
#pragma once

#include <string>

#include "elasto/core.hpp"

namespace elasto {

inline constexpr double kClassifyTol = 1e-12;

enum class RegionLabel {
  Coincident,
  OnR1,
  OnS1,
  OnR2,
  OnS2,
  Gamma1,  // between R1 and R2: 1-rarefaction then 2-rarefaction
  Gamma2,  // between R2 and S1: 1-shock then 2-rarefaction
  Gamma3,  // between S1 and S2: 1-shock then 2-shock
  Gamma4,  // between S2 and R1: 1-rarefaction then 2-shock
};

std::string to_string(RegionLabel r);

/// d1 = w_1(query) - w_1(base), d2 = w_2(query) - w_2(base).
struct SignedDistances {
  double d1 = 0.0;
  double d2 = 0.0;
};

/// sigma on the j-wave curve through base at velocity u.
double wave_curve_sigma(const State& base, WaveFamily family, double u, const Params& p);

SignedDistances signed_distances(const State& base, const State& query, const Params& p);

struct Classification {
  RegionLabel label;
  SignedDistances distances;
};

/// Position of query relative to the wave curves through base. On-curve
/// labels win over Gamma regions when |d| <= tol * state_scale(base, query).
Classification classify(const State& base, const State& query, const Params& p,
                        double tol = kClassifyTol);

/// Intersection of the 1-curve through base with the 2-curve through target.
State intermediate_state(const State& base, const State& target, const Params& p);

}  // namespace elasto
