#include "elasto/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace elasto {

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::Constant: return "Constant";
    case CaseLabel::C1a: return "1a";
    case CaseLabel::C1b: return "1b";
    case CaseLabel::C1c: return "1c";
    case CaseLabel::C2a: return "2a";
    case CaseLabel::C2b: return "2b";
    case CaseLabel::C2c: return "2c";
    case CaseLabel::C3a: return "3a";
    case CaseLabel::C3b: return "3b";
    case CaseLabel::C4a: return "4a";
    case CaseLabel::C4b: return "4b";
    case CaseLabel::C5a: return "5a";
    case CaseLabel::C5b: return "5b";
    case CaseLabel::C5ci: return "5c-i";
    case CaseLabel::C5cii: return "5c-ii";
    case CaseLabel::C5ciii: return "5c-iii";
    case CaseLabel::C6a: return "6a";
    case CaseLabel::C6b: return "6b";
    case CaseLabel::C6ci: return "6c-i";
    case CaseLabel::C6cii: return "6c-ii";
    case CaseLabel::C7a: return "7a";
    case CaseLabel::C7b: return "7b";
    case CaseLabel::C7c: return "7c";
    case CaseLabel::C8a: return "8a";
    case CaseLabel::C8b: return "8b";
    case CaseLabel::C8ci: return "8c-i";
    case CaseLabel::C8cii: return "8c-ii";
  }
  return "?";
}

namespace {

// A zero speed counts as non-positive: with right-continuous sampling a
// wave edge at xi = 0 does not reach into x > 0.
bool positive(double speed) { return speed > 0.0; }

// Wave lying entirely in xi <= 0, partially, or entirely in xi > 0.
enum class Reach { Outside, Straddles, Inside };

Reach reach(const Wave& w) {
  if (positive(w.min_speed())) return Reach::Inside;
  if (!positive(w.max_speed())) return Reach::Outside;
  return Reach::Straddles;
}

CaseLabel assign_case(RegionLabel region, const WaveStructure& ws) {
  using C = CaseLabel;
  switch (region) {
    case RegionLabel::Coincident:
      return C::Constant;
    case RegionLabel::OnR1:
      switch (reach(*ws.wave1)) {
        case Reach::Inside: return C::C1a;
        case Reach::Outside: return C::C1b;
        case Reach::Straddles: return C::C1c;
      }
      break;
    case RegionLabel::OnR2:
      switch (reach(*ws.wave2)) {
        case Reach::Inside: return C::C2a;
        case Reach::Outside: return C::C2b;
        case Reach::Straddles: return C::C2c;
      }
      break;
    case RegionLabel::OnS1:
      return positive(ws.wave1->min_speed()) ? C::C3a : C::C3b;
    case RegionLabel::OnS2:
      return positive(ws.wave2->min_speed()) ? C::C4a : C::C4b;
    default:
      break;
  }

  // Two-wave regions. Cases 5..8 share the same skeleton: everything
  // visible, nothing visible, or the boundary cuts through the pattern.
  const Wave& w1 = *ws.wave1;
  const Wave& w2 = *ws.wave2;
  const bool all_in = positive(w1.min_speed());
  const bool all_out = !positive(w2.max_speed());
  const bool w1_reaches = positive(w1.max_speed());
  const bool w2_inside = positive(w2.min_speed());
  switch (region) {
    case RegionLabel::Gamma1:
      if (all_in) return C::C5a;
      if (all_out) return C::C5b;
      if (w1_reaches) return C::C5ci;
      return w2_inside ? C::C5cii : C::C5ciii;
    case RegionLabel::Gamma2:
      if (all_in) return C::C6a;
      if (all_out) return C::C6b;
      return w2_inside ? C::C6ci : C::C6cii;
    case RegionLabel::Gamma3:
      if (all_in) return C::C7a;
      if (all_out) return C::C7b;
      return C::C7c;
    case RegionLabel::Gamma4:
      if (all_in) return C::C8a;
      if (all_out) return C::C8b;
      return w1_reaches ? C::C8ci : C::C8cii;
    default:
      break;
  }
  return C::Constant;
}

bool touches_zero(const std::optional<Wave>& w) {
  return w && (w->min_speed() == 0.0 || w->max_speed() == 0.0);
}

void append_visible(const std::optional<Wave>& w, const Params& p, std::vector<Wave>& out) {
  if (!w || !positive(w->max_speed())) return;
  if (w->is_shock() || positive(w->min_speed())) {
    out.push_back(*w);
    return;
  }
  Wave clipped = *w;
  const auto& fan = std::get<Rarefaction>(w->kind);
  clipped.kind = Rarefaction{0.0, fan.xi_hi};
  clipped.left = fan_state(w->left, w->family, 0.0, p, fan.xi_hi);
  out.push_back(clipped);
}

}  // namespace

QuarterPlaneSolution solve_ibvp(const State& boundary, const State& initial, const Params& p,
                                double tol) {
  QuarterPlaneSolution sol;
  sol.boundary = boundary;
  sol.initial = initial;
  sol.region = classify(boundary, initial, p, tol);
  sol.structure = solve_riemann(boundary, initial, p, tol);
  sol.label = assign_case(sol.region.label, sol.structure);
  sol.sonic = touches_zero(sol.structure.wave1) || touches_zero(sol.structure.wave2);
  sol.trace = sample(sol.structure, 0.0, p);
  append_visible(sol.structure.wave1, p, sol.visible_waves);
  append_visible(sol.structure.wave2, p, sol.visible_waves);
  return sol;
}

State sample(const QuarterPlaneSolution& sol, double x, double t, const Params& p) {
  if (!(t > 0.0) || !(x >= 0.0)) {
    throw std::domain_error("quarter-plane sample needs x >= 0 and t > 0");
  }
  return sample(sol.structure, x / t, p);
}

State boundary_trace(const QuarterPlaneSolution& sol) { return sol.trace; }

namespace {

bool close(const State& a, const State& b, const Params& p, double tol) {
  const double eps = tol * state_scale(a, b, p);
  return std::abs(a.sigma - b.sigma) <= eps && p.k() * std::abs(a.u - b.u) <= eps;
}

}  // namespace

bool er_contains(const State& boundary, const State& candidate, const Params& p, double tol) {
  try {
    const QuarterPlaneSolution sol = solve_ibvp(boundary, candidate, p, tol);
    return close(sol.trace, candidate, p, tol);
  } catch (const wave_overlap_error&) {
    return false;
  }
}

std::vector<State> er_preimages(const State& boundary, const State& candidate,
                                std::span<const State> grid, const Params& p, double tol) {
  std::vector<State> hits;
  for (const State& s : grid) {
    try {
      const QuarterPlaneSolution sol = solve_ibvp(boundary, s, p);
      if (close(sol.trace, candidate, p, tol)) hits.push_back(s);
    } catch (const wave_overlap_error&) {
    }
  }
  return hits;
}

State level_set_closed_form(WaveFamily j, const State& boundary, const State& initial,
                            const Params& p, double x, double t) {
  validate(boundary, "boundary");
  validate(initial, "initial");
  if (!(x > 0.0) || !(t > 0.0)) throw std::domain_error("closed form needs x > 0 and t > 0");

  const double k = p.k();
  const double sgn = family_sign(j);
  const double c = riemann_invariant(boundary, j, p);
  const double mismatch = std::abs(riemann_invariant(initial, j, p) - c);
  if (mismatch > kClassifyTol * state_scale(boundary, initial, p)) {
    throw std::domain_error("initial state is not on the boundary state's level set of w_" +
                            to_string(j));
  }

  const double lb = characteristic_speed(boundary, j, p);
  const double l0 = characteristic_speed(initial, j, p);
  const double xi = x / t;
  auto fan = [&](double speed) {
    const double u = speed - sgn * k;
    return State{u, c - sgn * k * u};
  };

  if (l0 == lb && lb != 0.0) return initial;                 // equal data
  if (0.0 < lb && lb < l0) {                                 // fan fully inside
    if (xi < lb) return boundary;
    return xi < l0 ? fan(xi) : initial;
  }
  if (lb < 0.0 && 0.0 < l0) return xi < l0 ? fan(xi) : initial;  // fan cut by x = 0
  if (lb < 0.0 && l0 <= 0.0) return initial;                 // everything left
  if (l0 < lb && lb + l0 > 0.0) {                            // shock moving right
    const double s = 0.5 * (initial.u + boundary.u) + sgn * k;
    return xi < s ? boundary : initial;
  }
  std::ostringstream msg;
  msg << "no closed form for lambda_b = " << lb << ", lambda_0 = " << l0;
  throw std::domain_error(msg.str());
}

}  // namespace elasto
