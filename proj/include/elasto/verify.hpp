// Admissibility and consistency checks, independent of how a solution was
// constructed: Rankine-Hugoniot residuals under the Volpert product, Lax
// inequalities, fan continuity, and a grid-based weak-form audit.
#pragma once

#include <vector>

#include "elasto/boundary.hpp"
#include "elasto/core.hpp"

namespace elasto {

/// Left-hand sides of the two jump conditions for a discontinuity of speed s:
///   r_momentum = -s [u] + [u^2]/2 - [sigma]
///   r_stress   = -s [sigma] + {u} [sigma] - k^2 [u]
/// where {u} is the arithmetic mean across the jump (Volpert product).
struct RHResidual {
  double r_momentum = 0.0;
  double r_stress = 0.0;
};

RHResidual rh_residual(const State& left, const State& right, double speed, const Params& p);

/// lambda_j(right) - tol <= speed <= lambda_j(left) + tol.
bool lax_check(const State& left, const State& right, double speed, WaveFamily f,
               const Params& p, double tol = 1e-12);

struct VerificationSummary {
  double max_rh_residual = 0.0;       // max |residual| / scale over shocks
  bool lax_ok = true;
  double fan_continuity_error = 0.0;  // max mismatch between fan edge and flank
  bool fans_increasing = true;
  bool ordered = true;

  bool passed(double tol = 1e-12) const {
    return max_rh_residual <= tol && lax_ok && fan_continuity_error <= tol && fans_increasing &&
           ordered;
  }
};

VerificationSummary verify_structure(const WaveStructure& ws, const Params& p,
                                     double tol = 1e-12);

/// Space-time window and resolution for the weak-form audit. nx and nt count
/// intervals. Test functions are tensor-product bumps on the dyadic
/// sub-windows of levels 0..levels-1.
struct WeakGrid {
  double x_min = 0.0;
  double x_max = 1.0;
  double t_min = 0.5;
  double t_max = 1.5;
  int nx = 200;
  int nt = 200;
  int levels = 3;
};

struct WeakResidual {
  double momentum = 0.0;  // max over test functions of |weak residual, equation 1|
  double stress = 0.0;    // same for equation 2
};

/// Discrete weak residuals of both equations over the grid. Equation 1 in
/// conservative form with trapezoidal quadrature; equation 2 with the
/// conservative part by trapezoid and u sigma_x as the cell mean of u times
/// the cell increment of sigma. Rows are evaluated in parallel; the reduction
/// order is fixed, so the result is bit-identical to weak_residual_serial.
WeakResidual weak_residual(const WaveStructure& ws, const Params& p, const WeakGrid& grid);
WeakResidual weak_residual(const QuarterPlaneSolution& sol, const Params& p,
                           const WeakGrid& grid);

/// Single-threaded reference for weak_residual.
WeakResidual weak_residual_serial(const WaveStructure& ws, const Params& p,
                                  const WeakGrid& grid);

}  // namespace elasto
