#include "elasto/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace elasto {

double shock_speed(const State& left, const State& right, WaveFamily f, const Params& p) {
  return 0.5 * (left.u + right.u) + family_sign(f) * p.k();
}

Wave make_wave(const State& left, const State& right, WaveFamily f, const Params& p) {
  Wave w;
  w.family = f;
  w.left = left;
  w.right = right;
  if (right.u > left.u) {
    w.kind = Rarefaction{characteristic_speed(left, f, p), characteristic_speed(right, f, p)};
  } else {
    w.kind = Shock{shock_speed(left, right, f, p)};
  }
  return w;
}

WaveStructure solve_riemann(const State& left, const State& right, const Params& p, double tol) {
  const Classification c = classify(left, right, p, tol);

  WaveStructure ws;
  ws.left = left;
  ws.right = right;
  switch (c.label) {
    case RegionLabel::Coincident:
      ws.middle = right;
      return ws;
    case RegionLabel::OnR1:
    case RegionLabel::OnS1:
      ws.middle = right;
      break;
    case RegionLabel::OnR2:
    case RegionLabel::OnS2:
      ws.middle = left;
      break;
    default:
      ws.middle = intermediate_state(left, right, p);
      break;
  }

  const bool has1 = c.label != RegionLabel::OnR2 && c.label != RegionLabel::OnS2;
  const bool has2 = c.label != RegionLabel::OnR1 && c.label != RegionLabel::OnS1;
  if (has1) ws.wave1 = make_wave(ws.left, ws.middle, WaveFamily::One, p);
  if (has2) ws.wave2 = make_wave(ws.middle, ws.right, WaveFamily::Two, p);

  if (ws.wave1 && ws.wave2) {
    const double hi1 = ws.wave1->max_speed();
    const double lo2 = ws.wave2->min_speed();
    const double slack = tol * std::max({1.0, std::abs(hi1), std::abs(lo2)});
    if (hi1 > lo2 + slack) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "1-wave (max speed " << hi1 << ") overtakes 2-wave (min speed " << lo2
          << "); shock jump exceeds 4k";
      throw wave_overlap_error(msg.str());
    }
  }
  return ws;
}

State fan_state(const State& anchor, WaveFamily f, double xi, const Params& p, double xi_hi) {
  const double xi_lo = characteristic_speed(anchor, f, p);
  if (!(xi >= xi_lo) || !(xi <= xi_hi)) {
    std::ostringstream msg;
    msg << "xi = " << xi << " outside fan interval [" << xi_lo << ", " << xi_hi << "]";
    throw std::out_of_range(msg.str());
  }
  // Along r_j: du = dxi, dsigma = -(-1)^j k dxi.
  const double dxi = xi - xi_lo;
  return {anchor.u + dxi, anchor.sigma - family_sign(f) * p.k() * dxi};
}

namespace {

// Returns true and sets out when xi falls on or before the wave's right edge.
bool sample_wave(const Wave& w, double xi, const Params& p, State& out) {
  if (const auto* s = std::get_if<Shock>(&w.kind)) {
    if (xi < s->speed) {
      out = w.left;
      return true;
    }
    return false;
  }
  const auto& r = std::get<Rarefaction>(w.kind);
  if (xi < r.xi_lo) {
    out = w.left;
    return true;
  }
  if (xi < r.xi_hi) {
    out = fan_state(w.left, w.family, xi, p, r.xi_hi);
    return true;
  }
  return false;
}

}  // namespace

State sample(const WaveStructure& ws, double xi, const Params& p) {
  State out;
  if (ws.wave1 && sample_wave(*ws.wave1, xi, p, out)) return out;
  if (ws.wave2 && sample_wave(*ws.wave2, xi, p, out)) return out;
  return ws.right;
}

}  // namespace elasto
