#include "elasto/curves.hpp"

#include <cmath>

namespace elasto {

std::string to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::Coincident: return "Coincident";
    case RegionLabel::OnR1: return "OnR1";
    case RegionLabel::OnS1: return "OnS1";
    case RegionLabel::OnR2: return "OnR2";
    case RegionLabel::OnS2: return "OnS2";
    case RegionLabel::Gamma1: return "Gamma1";
    case RegionLabel::Gamma2: return "Gamma2";
    case RegionLabel::Gamma3: return "Gamma3";
    case RegionLabel::Gamma4: return "Gamma4";
  }
  return "?";
}

double wave_curve_sigma(const State& base, WaveFamily family, double u, const Params& p) {
  validate(base, "base");
  return base.sigma - family_sign(family) * p.k() * (u - base.u);
}

SignedDistances signed_distances(const State& base, const State& query, const Params& p) {
  const double du = query.u - base.u;
  const double ds = query.sigma - base.sigma;
  return {ds - p.k() * du, ds + p.k() * du};
}

Classification classify(const State& base, const State& query, const Params& p, double tol) {
  validate(base, "base");
  validate(query, "query");
  if (!(tol >= 0.0)) throw validation_error("classification tolerance must be >= 0");

  const SignedDistances d = signed_distances(base, query, p);
  const double eps = tol * state_scale(base, query, p);
  const bool on1 = std::abs(d.d1) <= eps;
  const bool on2 = std::abs(d.d2) <= eps;

  RegionLabel label;
  if (on1 && on2) {
    label = RegionLabel::Coincident;
  } else if (on1) {
    // Off the 2-curve, so u_q - u_b = d2 / 2k is resolved away from zero.
    label = d.d2 > 0.0 ? RegionLabel::OnR1 : RegionLabel::OnS1;
  } else if (on2) {
    label = d.d1 < 0.0 ? RegionLabel::OnR2 : RegionLabel::OnS2;
  } else if (d.d1 < 0.0) {
    label = d.d2 > 0.0 ? RegionLabel::Gamma1 : RegionLabel::Gamma2;
  } else {
    label = d.d2 < 0.0 ? RegionLabel::Gamma3 : RegionLabel::Gamma4;
  }
  return {label, d};
}

State intermediate_state(const State& base, const State& target, const Params& p) {
  validate(base, "base");
  validate(target, "target");
  const double k = p.k();
  const double u = (target.sigma - base.sigma) / (2.0 * k) + 0.5 * (target.u + base.u);
  const double sigma = 0.5 * (target.sigma + base.sigma) + 0.5 * k * (target.u - base.u);
  return {u, sigma};
}

}  // namespace elasto
