// Vanishing-viscosity companion solver
//
//   u_t + u u_x - sigma_x = eps u_xx
//   sigma_t + u sigma_x - k^2 u_x = eps sigma_xx
//
// discretised with explicit central differences. Used as an independent
// oracle for the exact solver, never by it.
#pragma once

#include <iosfwd>
#include <vector>

#include "elasto/boundary.hpp"
#include "elasto/core.hpp"

namespace elasto {

struct ViscousConfig {
  double epsilon = 0.005;
  double x_min = 0.0;  // 0: quarter plane with Dirichlet data; < 0: full plane
  double x_max = 2.0;
  int nx = 2000;       // grid points, including both ends
  double t_end = 0.5;
  double cfl = 0.9;
};

void validate(const ViscousConfig& cfg);

struct ViscousField {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> sigma;
};

/// Evolves the regularised system from piecewise constant data: the
/// boundary state on x < 0 (held as Dirichlet value at x = 0 in quarter-plane
/// mode) and the initial state on x >= 0. Zero-gradient outflow at the open
/// ends. Cells are updated in parallel; the result is bit-identical to
/// viscous_solve_serial.
ViscousField viscous_solve(const State& boundary, const State& initial, const Params& p,
                           const ViscousConfig& cfg);

ViscousField viscous_solve_serial(const State& boundary, const State& initial, const Params& p,
                                  const ViscousConfig& cfg);

/// Fixed time step: min(cfl dx / max|lambda|, dx^2 / (4 eps)), with max|lambda|
/// bounded a priori through the range of the Riemann invariants of the data.
double viscous_time_step(const State& boundary, const State& initial, const Params& p,
                         const ViscousConfig& cfg);

/// Trapezoidal L1 norm of |u - u_exact| + |sigma - sigma_exact| over the
/// field's grid, the exact solution sampled at (x, t).
double l1_distance(const ViscousField& field, const QuarterPlaneSolution& exact, double t,
                   const Params& p);

/// Position where u first crosses level between x_from and x_to, by linear
/// interpolation between grid points. NaN if there is no crossing.
double crossing_position(const ViscousField& field, double level, double x_from, double x_to);

/// CSV with header x,u,sigma; values printed in shortest round-trip form.
void write_csv(std::ostream& os, const ViscousField& field);

}  // namespace elasto
