// Generators and independent oracles shared by the unit and acceptance tests.
// Nothing here calls into the solver; expected values are computed from the
// defining equations directly.
#pragma once

#include <array>
#include <cmath>
#include <random>

#include "elasto/core.hpp"
#include "elasto/curves.hpp"

namespace elasto::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// k log-uniform on [0.1, 10].
inline double random_k(Rng& rng) { return std::exp(uniform(rng, std::log(0.1), std::log(10.0))); }

inline State random_state(Rng& rng, double u_range, double s_range) {
  return {uniform(rng, -u_range, u_range), uniform(rng, -s_range, s_range)};
}

/// Gaussian elimination with partial pivoting on a 2x2 system.
inline std::array<double, 2> solve2(std::array<std::array<double, 2>, 2> a,
                                    std::array<double, 2> b) {
  if (std::abs(a[1][0]) > std::abs(a[0][0])) {
    std::swap(a[0], a[1]);
    std::swap(b[0], b[1]);
  }
  const double f = a[1][0] / a[0][0];
  a[1][1] -= f * a[0][1];
  b[1] -= f * b[0];
  const double y = b[1] / a[1][1];
  const double x = (b[0] - a[0][1] * y) / a[0][0];
  return {x, y};
}

/// Intersection of sigma = sigma_b + k (u - u_b) with sigma = sigma_t - k (u - u_t),
/// written as  -k u + sigma = sigma_b - k u_b  and  k u + sigma = sigma_t + k u_t.
inline State brute_force_intersection(const State& base, const State& target, double k) {
  const auto x = solve2({{{-k, 1.0}, {k, 1.0}}},
                        {base.sigma - k * base.u, target.sigma + k * target.u});
  return {x[0], x[1]};
}

inline double rel_diff(const State& a, const State& b, double scale) {
  return std::max(std::abs(a.u - b.u), std::abs(a.sigma - b.sigma)) / scale;
}

/// Data constructed inside a requested region. The 1-wave has u-jump a and
/// the 2-wave u-jump b, both positive; signs follow from the region.
struct Problem {
  double k;
  State boundary;
  State initial;
  RegionLabel region;
};

inline Problem construct(RegionLabel region, const State& b, double k, double a_jump,
                         double b_jump) {
  State mid = b;
  State init = b;
  auto along1 = [&](const State& from, double du) {
    return State{from.u + du, from.sigma + k * du};
  };
  auto along2 = [&](const State& from, double du) {
    return State{from.u + du, from.sigma - k * du};
  };
  switch (region) {
    case RegionLabel::Coincident: break;
    case RegionLabel::OnR1: init = along1(b, a_jump); break;
    case RegionLabel::OnS1: init = along1(b, -a_jump); break;
    case RegionLabel::OnR2: init = along2(b, b_jump); break;
    case RegionLabel::OnS2: init = along2(b, -b_jump); break;
    case RegionLabel::Gamma1: mid = along1(b, a_jump); init = along2(mid, b_jump); break;
    case RegionLabel::Gamma2: mid = along1(b, -a_jump); init = along2(mid, b_jump); break;
    case RegionLabel::Gamma3: mid = along1(b, -a_jump); init = along2(mid, -b_jump); break;
    case RegionLabel::Gamma4: mid = along1(b, a_jump); init = along2(mid, -b_jump); break;
  }
  return {k, b, init, region};
}

inline constexpr std::array<RegionLabel, 9> kAllRegions = {
    RegionLabel::Coincident, RegionLabel::OnR1,   RegionLabel::OnS1,
    RegionLabel::OnR2,       RegionLabel::OnS2,   RegionLabel::Gamma1,
    RegionLabel::Gamma2,     RegionLabel::Gamma3, RegionLabel::Gamma4};

/// Random problem in the given region with jumps in [0.02k, 1.9k], which
/// keeps every construction free of wave overlap (the bound is 4k).
inline Problem random_problem(Rng& rng, RegionLabel region) {
  const double k = random_k(rng);
  const State b{uniform(rng, -3.0 * k, 3.0 * k), uniform(rng, -5.0 * k * k, 5.0 * k * k)};
  return construct(region, b, k, uniform(rng, 0.02, 1.9) * k, uniform(rng, 0.02, 1.9) * k);
}

}  // namespace elasto::testing
