// Hand-constructed inputs for every sub-case of the explicit quarter-plane
// construction, with the printed piecewise formulas transcribed verbatim and
// their continuity-repaired counterparts.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "elasto/boundary.hpp"

namespace elasto::testing {

// Piecewise solutions of the explicit construction, one per sub-case.
// printed = true transcribes the formulas exactly as they appear in the
// original derivation; printed = false applies the repairs that continuity and
// the jump conditions force (intermediate stress, 2-fan constant, shock speeds
// of the two-wave cases, Case 2c fan velocity, Case 6c-i left state).
inline State piecewise(CaseLabel c, const State& b, const State& i, double k, double x, double t,
                bool printed) {
  using C = CaseLabel;
  const double ub = b.u, sb = b.sigma, u0 = i.u, s0 = i.sigma;
  const double xi = x / t;
  const double us = (s0 - sb) / (2 * k) + (u0 + ub) / 2;
  const double ss = printed ? (s0 + sb) / 2 + k / 2 * (u0 + ub) : (s0 + sb) / 2 + k / 2 * (u0 - ub);
  const State star{us, ss};
  const double mean = (u0 + ub) / 2;
  const double sp1 = printed ? mean - k : (ub + us) / 2 - k;
  const double sp2 = printed ? mean + k : (us + u0) / 2 + k;

  const State fan1{xi + k, k * xi + sb - k * (ub - k)};
  const State fan2_from_b{xi - k, -k * xi + sb + k * (ub + k)};
  const State fan2_2c = printed ? State{xi + k, -k * xi + sb - k * (ub + k)} : fan2_from_b;
  const State fan2_star =
      printed ? State{xi - k, -k * xi + ss + k * (us - k)} : State{xi - k, -k * xi + ss + k * (us + k)};

  switch (c) {
    case C::Constant: return i;
    case C::C1a: return xi < ub - k ? b : xi < u0 - k ? fan1 : i;
    case C::C1b: return i;
    case C::C1c: return xi < u0 - k ? fan1 : i;
    case C::C2a: return xi < ub + k ? b : xi < u0 + k ? fan2_from_b : i;
    case C::C2b: return i;
    case C::C2c: return xi < u0 + k ? fan2_2c : i;
    case C::C3a: return xi < mean - k ? b : i;
    case C::C3b: return i;
    case C::C4a: return xi < mean + k ? b : i;
    case C::C4b: return i;
    case C::C5a:
      if (xi < ub - k) return b;
      [[fallthrough]];
    case C::C5ci:
      if (xi < us - k) return fan1;
      [[fallthrough]];
    case C::C5cii:
      if (xi < us + k) return star;
      [[fallthrough]];
    case C::C5ciii:
      return xi < u0 + k ? fan2_star : i;
    case C::C5b: return i;
    case C::C6a:
      if (xi < sp1) return b;
      if (xi < us + k) return star;
      return xi < u0 + k ? fan2_star : i;
    case C::C6b: return i;
    case C::C6ci:
      if (xi < us + k) return printed ? b : star;
      return xi < u0 + k ? fan2_star : i;
    case C::C6cii: return xi < u0 + k ? fan2_star : i;
    case C::C7a: return xi < sp1 ? b : xi < sp2 ? star : i;
    case C::C7b: return i;
    case C::C7c: return xi < sp2 ? star : i;
    case C::C8a:
      if (xi < ub - k) return b;
      [[fallthrough]];
    case C::C8ci:
      if (xi < us - k) return fan1;
      [[fallthrough]];
    case C::C8cii:
      return xi < sp2 ? star : i;
    case C::C8b: return i;
  }
  return i;
}

struct Golden {
  CaseLabel label;
  State boundary;
  State initial;
  bool printed_consistent;
};

// k = 1 throughout.
inline const std::vector<Golden> kGolden = {
    {CaseLabel::C1a, {2, 0}, {3, 1}, true},
    {CaseLabel::C1b, {-2, 0}, {-1.5, 0.5}, true},
    {CaseLabel::C1c, {0, 0}, {2, 2}, true},
    {CaseLabel::C2a, {0, 0}, {2, -2}, true},
    {CaseLabel::C2b, {-4, 0}, {-3, -1}, true},
    {CaseLabel::C2c, {-2, 0}, {0, -2}, false},
    {CaseLabel::C3a, {4, 0}, {3, -1}, true},
    {CaseLabel::C3b, {0, 0}, {-1, -1}, true},
    {CaseLabel::C4a, {0, 0}, {-1, 1}, true},
    {CaseLabel::C4b, {-3, 0}, {-4, 1}, true},
    {CaseLabel::C5a, {3, 0}, {5, 0}, false},
    {CaseLabel::C5b, {-5, 0}, {-3, 0}, true},
    {CaseLabel::C5ci, {0.5, 0}, {2.5, 0}, false},
    {CaseLabel::C5cii, {0, 0}, {1.5, -0.5}, false},
    {CaseLabel::C5ciii, {-3, 0}, {-0.5, -1.5}, false},
    {CaseLabel::C6a, {4, 0}, {4, -2}, false},
    {CaseLabel::C6b, {-3, 0}, {-3.5, -1.5}, true},
    {CaseLabel::C6ci, {0, 0}, {0.5, -1.5}, false},
    {CaseLabel::C6cii, {-1, 0}, {0, -2}, false},
    {CaseLabel::C7a, {2, 0}, {0, 0}, false},
    {CaseLabel::C7b, {-2, 0}, {-4, 0}, true},
    {CaseLabel::C7c, {0, 0}, {-1, 0}, false},
    {CaseLabel::C8a, {2, 0}, {2, 2}, false},
    {CaseLabel::C8b, {-4, 0}, {-4, 2}, true},
    {CaseLabel::C8ci, {0.5, 0}, {0.5, 2}, false},
    {CaseLabel::C8cii, {0, 0}, {0, 1}, false},
};

/// Largest mismatch between a fan formula evaluated at its edge speeds and
/// the constant state it should meet there.
inline double fan_edge_gap(CaseLabel c, const State& b, const State& i, double k, bool printed) {
  using C = CaseLabel;
  const double ub = b.u, sb = b.sigma, u0 = i.u, s0 = i.sigma;
  const double us = (s0 - sb) / (2 * k) + (u0 + ub) / 2;
  const double ss = printed ? (s0 + sb) / 2 + k / 2 * (u0 + ub) : (s0 + sb) / 2 + k / 2 * (u0 - ub);
  const State star{us, ss};
  auto gap = [](const State& a, const State& e) {
    return std::max(std::abs(a.u - e.u), std::abs(a.sigma - e.sigma));
  };
  auto fan1 = [&](double xi) { return State{xi + k, k * xi + sb - k * (ub - k)}; };
  auto fan2_b = [&](double xi) {
    if (printed && c == C::C2c) return State{xi + k, -k * xi + sb - k * (ub + k)};
    return State{xi - k, -k * xi + sb + k * (ub + k)};
  };
  auto fan2_star = [&](double xi) {
    return printed ? State{xi - k, -k * xi + ss + k * (us - k)}
                   : State{xi - k, -k * xi + ss + k * (us + k)};
  };
  double g = 0.0;
  switch (c) {
    case C::C1a: case C::C1c:
      g = std::max(gap(fan1(ub - k), b), gap(fan1(u0 - k), i));
      break;
    case C::C2a: case C::C2c:
      g = std::max(gap(fan2_b(ub + k), b), gap(fan2_b(u0 + k), i));
      break;
    case C::C5a: case C::C5ci: case C::C8a: case C::C8ci:
      g = std::max(gap(fan1(ub - k), b), gap(fan1(us - k), star));
      break;
    default:
      break;
  }
  if (c == C::C5a || c == C::C5ci || c == C::C5cii || c == C::C5ciii || c == C::C6a ||
      c == C::C6ci || c == C::C6cii) {
    g = std::max({g, gap(fan2_star(us + k), star), gap(fan2_star(u0 + k), i)});
  }
  return g;
}

}  // namespace elasto::testing
