// Domain types and characteristic algebra of the elastodynamics system
//
//   u_t + u u_x - sigma_x = 0
//   sigma_t + u sigma_x - k^2 u_x = 0
//
// Characteristic speeds are lambda_j = u + (-1)^j k, right eigenvectors
// r_1 = (1, k), r_2 = (1, -k), Riemann invariants w_1 = sigma - k u and
// w_2 = sigma + k u.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace elasto {

/// Raised when a non-finite value or a non-positive wave speed reaches the API.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for inconsistent solver or grid configuration.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// System parameters. The elastic wave speed k is strictly positive.
class Params {
 public:
  explicit Params(double k);
  double k() const { return k_; }

 private:
  double k_;
};

/// A point (u, sigma) of the state plane: velocity and stress.
struct State {
  double u = 0.0;
  double sigma = 0.0;

  friend bool operator==(const State&, const State&) = default;
};

/// Throws validation_error unless both components are finite.
void validate(const State& s, const char* what = "state");

enum class WaveFamily { One, Two };

/// (-1)^j for family j: -1 for the 1-family, +1 for the 2-family.
constexpr double family_sign(WaveFamily f) {
  return f == WaveFamily::One ? -1.0 : 1.0;
}

constexpr int family_index(WaveFamily f) { return f == WaveFamily::One ? 1 : 2; }

/// lambda_j(s) = u + (-1)^j k.
inline double characteristic_speed(const State& s, WaveFamily f, const Params& p) {
  return s.u + family_sign(f) * p.k();
}

/// (lambda_1, lambda_2) = (u - k, u + k).
std::pair<double, double> characteristic_speeds(const State& s, const Params& p);

/// Right eigenvector r_j = (1, -(-1)^j k) of A(u, sigma).
State eigenvector(WaveFamily f, const Params& p);

/// (w_1, w_2) = (sigma - k u, sigma + k u).
std::pair<double, double> riemann_invariants(const State& s, const Params& p);

/// w_j(s); the quantity left unchanged across a j-wave.
double riemann_invariant(const State& s, WaveFamily f, const Params& p);

/// Inverse of riemann_invariants: u = (w2 - w1) / 2k, sigma = (w1 + w2) / 2.
State state_from_invariants(double w1, double w2, const Params& p);

/// max(1, |sigma|, k|u|) over the given states; the reference magnitude for
/// relative tolerances.
double state_scale(const State& a, const State& b, const Params& p);

// Waves ----------------------------------------------------------------------

struct Shock {
  double speed = 0.0;
};

struct Rarefaction {
  double xi_lo = 0.0;
  double xi_hi = 0.0;
};

/// One elementary wave with its flanking constant states.
struct Wave {
  WaveFamily family = WaveFamily::One;
  std::variant<Shock, Rarefaction> kind;
  State left;
  State right;

  bool is_shock() const { return std::holds_alternative<Shock>(kind); }
  bool is_rarefaction() const { return std::holds_alternative<Rarefaction>(kind); }
  double strength() const;
  /// Lowest / highest value of xi = x/t occupied by the wave.
  double min_speed() const;
  double max_speed() const;
};

/// Self-similar solution left | wave1 | middle | wave2 | right. Absent waves
/// are empty optionals, never zero-strength Wave values.
struct WaveStructure {
  State left;
  std::optional<Wave> wave1;
  State middle;
  std::optional<Wave> wave2;
  State right;
};

std::string to_string(WaveFamily f);

}  // namespace elasto
