// Quarter-plane problem x > 0, t > 0 with constant initial state on x > 0 and
// a constant boundary state at x = 0, imposed in the Riemann sense: the trace
// at x = 0+ is the value at xi = 0 of the Riemann solution with the boundary
// state on the left and the initial state on the right.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "elasto/core.hpp"
#include "elasto/curves.hpp"
#include "elasto/riemann.hpp"

namespace elasto {

/// Sub-case of the explicit quarter-plane construction. The number is the
/// region/curve of the initial state relative to the boundary state
/// (1: R1, 2: R2, 3: S1, 4: S2, 5..8: Gamma1..Gamma4), the letter says how
/// much of the wave pattern lies in x > 0.
enum class CaseLabel {
  Constant,
  C1a, C1b, C1c,
  C2a, C2b, C2c,
  C3a, C3b,
  C4a, C4b,
  C5a, C5b, C5ci, C5cii, C5ciii,
  C6a, C6b, C6ci, C6cii,
  C7a, C7b, C7c,
  C8a, C8b, C8ci, C8cii,
};

std::string to_string(CaseLabel c);

struct QuarterPlaneSolution {
  State boundary;
  State initial;
  Classification region;
  WaveStructure structure;  // full-plane solution; only xi >= 0 is physical
  CaseLabel label = CaseLabel::Constant;
  bool sonic = false;       // some wave edge or shock sits exactly on x = 0
  State trace;              // limit x -> 0+
  std::vector<Wave> visible_waves;
};

QuarterPlaneSolution solve_ibvp(const State& boundary, const State& initial, const Params& p,
                                double tol = kClassifyTol);

/// Value at (x, t) with x >= 0, t > 0.
State sample(const QuarterPlaneSolution& sol, double x, double t, const Params& p);

State boundary_trace(const QuarterPlaneSolution& sol);

/// Membership in the set of admissible boundary traces for the given
/// boundary state: candidate is admissible iff it reproduces itself as the
/// trace of the problem with initial state = candidate.
bool er_contains(const State& boundary, const State& candidate, const Params& p,
                 double tol = kClassifyTol);

/// Brute-force audit of er_contains: every grid state whose trace matches
/// candidate within tol * scale. Data that overlap are skipped.
std::vector<State> er_preimages(const State& boundary, const State& candidate,
                                std::span<const State> grid, const Params& p,
                                double tol = 1e-9);

/// Closed-form solution for data on a level set of the j-invariant, written
/// in terms of the characteristic speeds lambda_j of the two data states.
/// Throws std::domain_error off the level set, for x <= 0 or t <= 0, and for
/// configurations it has no formula for (a zero boundary speed, or a shock
/// leaving through x = 0 from a nonnegative boundary speed).
State level_set_closed_form(WaveFamily j, const State& boundary, const State& initial,
                            const Params& p, double x, double t);

}  // namespace elasto
