#include "elasto/core.hpp"

#include <algorithm>
#include <cmath>

namespace elasto {

Params::Params(double k) : k_(k) {
  if (!std::isfinite(k) || !(k > 0.0)) {
    throw validation_error("k must be finite and positive, got " + std::to_string(k));
  }
}

void validate(const State& s, const char* what) {
  if (!std::isfinite(s.u) || !std::isfinite(s.sigma)) {
    throw validation_error(std::string(what) + " has a non-finite component");
  }
}

std::pair<double, double> characteristic_speeds(const State& s, const Params& p) {
  return {characteristic_speed(s, WaveFamily::One, p),
          characteristic_speed(s, WaveFamily::Two, p)};
}

State eigenvector(WaveFamily f, const Params& p) {
  return {1.0, -family_sign(f) * p.k()};
}

std::pair<double, double> riemann_invariants(const State& s, const Params& p) {
  return {riemann_invariant(s, WaveFamily::One, p), riemann_invariant(s, WaveFamily::Two, p)};
}

double riemann_invariant(const State& s, WaveFamily f, const Params& p) {
  return s.sigma + family_sign(f) * p.k() * s.u;
}

State state_from_invariants(double w1, double w2, const Params& p) {
  return {(w2 - w1) / (2.0 * p.k()), 0.5 * (w1 + w2)};
}

double state_scale(const State& a, const State& b, const Params& p) {
  const double k = p.k();
  return std::max({1.0, std::abs(a.sigma), std::abs(b.sigma), k * std::abs(a.u),
                   k * std::abs(b.u)});
}

double Wave::strength() const { return std::abs(right.u - left.u); }

double Wave::min_speed() const {
  if (const auto* s = std::get_if<Shock>(&kind)) return s->speed;
  return std::get<Rarefaction>(kind).xi_lo;
}

double Wave::max_speed() const {
  if (const auto* s = std::get_if<Shock>(&kind)) return s->speed;
  return std::get<Rarefaction>(kind).xi_hi;
}

std::string to_string(WaveFamily f) { return f == WaveFamily::One ? "1" : "2"; }

}  // namespace elasto
