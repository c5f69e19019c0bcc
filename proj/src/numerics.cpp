#include "elasto/numerics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace elasto {

void validate(const ViscousConfig& cfg) {
  auto fail = [](const std::string& what) { throw config_error("viscous config: " + what); };
  if (!std::isfinite(cfg.epsilon) || !(cfg.epsilon > 0.0)) fail("epsilon must be > 0");
  if (!std::isfinite(cfg.x_min) || !std::isfinite(cfg.x_max)) fail("x range must be finite");
  if (!(cfg.x_max > 0.0)) fail("x_max must be > 0");
  if (!(cfg.x_min <= 0.0)) fail("x_min must be 0 (quarter plane) or negative (full plane)");
  if (cfg.nx < 16) fail("nx must be >= 16");
  if (!std::isfinite(cfg.t_end) || !(cfg.t_end > 0.0)) fail("t_end must be > 0");
  if (!(cfg.cfl > 0.0 && cfg.cfl < 1.0)) fail("cfl must lie in (0, 1)");
}

double viscous_time_step(const State& boundary, const State& initial, const Params& p,
                         const ViscousConfig& cfg) {
  validate(cfg);
  const double k = p.k();
  // Both invariants obey a maximum principle, so u stays inside this range.
  const auto [w1b, w2b] = riemann_invariants(boundary, p);
  const auto [w1i, w2i] = riemann_invariants(initial, p);
  const double w1_lo = std::min(w1b, w1i), w1_hi = std::max(w1b, w1i);
  const double w2_lo = std::min(w2b, w2i), w2_hi = std::max(w2b, w2i);
  const double u_max = std::max(std::abs(w2_hi - w1_lo), std::abs(w2_lo - w1_hi)) / (2.0 * k);
  const double lam_max = u_max + k;
  const double dx = (cfg.x_max - cfg.x_min) / (cfg.nx - 1);
  return std::min(cfg.cfl * dx / lam_max, dx * dx / (4.0 * cfg.epsilon));
}

namespace {

struct Grid {
  std::vector<double> u, s, u_new, s_new;
};

// One explicit step on interior point i. Equation 1 is differenced in
// conservative form; in equation 2 the neighbour average of u multiplies the
// central sigma difference, which keeps the scheme diagonal in (w1, w2).
inline void update_point(const Grid& g, int i, double lam, double mu, double k2, double* u_out,
                         double* s_out) {
  const double ul = g.u[i - 1], uc = g.u[i], ur = g.u[i + 1];
  const double sl = g.s[i - 1], sc = g.s[i], sr = g.s[i + 1];
  const double u_avg = 0.5 * (ul + ur);
  const double du = ur - ul;
  const double ds = sr - sl;
  *u_out = uc - lam * (u_avg * du - ds) + mu * (ul - 2.0 * uc + ur);
  *s_out = sc - lam * (u_avg * ds - k2 * du) + mu * (sl - 2.0 * sc + sr);
}

template <bool Parallel>
ViscousField run(const State& boundary, const State& initial, const Params& p,
                 const ViscousConfig& cfg) {
  const double dt_max = viscous_time_step(boundary, initial, p, cfg);
  const int n = cfg.nx;
  const double dx = (cfg.x_max - cfg.x_min) / (n - 1);
  const bool quarter = cfg.x_min == 0.0;
  const double k2 = p.k() * p.k();

  ViscousField field;
  field.x.resize(n);
  Grid g;
  g.u.resize(n);
  g.s.resize(n);
  for (int i = 0; i < n; ++i) {
    field.x[i] = cfg.x_min + i * dx;
    const State& st = (quarter ? i == 0 : field.x[i] < 0.0) ? boundary : initial;
    g.u[i] = st.u;
    g.s[i] = st.sigma;
  }
  g.u_new = g.u;
  g.s_new = g.s;

  const long steps = static_cast<long>(std::ceil(cfg.t_end / dt_max));
  const double dt = cfg.t_end / static_cast<double>(steps);
  const double lam = 0.5 * dt / dx;
  const double mu = cfg.epsilon * dt / (dx * dx);
  const double lam_limit = dx / dt;

  for (long step = 1; step <= steps; ++step) {
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (int i = 1; i < n - 1; ++i) {
        update_point(g, i, lam, mu, k2, &g.u_new[i], &g.s_new[i]);
      }
    } else {
      for (int i = 1; i < n - 1; ++i) {
        update_point(g, i, lam, mu, k2, &g.u_new[i], &g.s_new[i]);
      }
    }

    if (quarter) {
      g.u_new[0] = boundary.u;
      g.s_new[0] = boundary.sigma;
    } else {
      g.u_new[0] = g.u_new[1];
      g.s_new[0] = g.s_new[1];
    }
    g.u_new[n - 1] = g.u_new[n - 2];
    g.s_new[n - 1] = g.s_new[n - 2];
    std::swap(g.u, g.u_new);
    std::swap(g.s, g.s_new);

    if (step % 64 == 0 || step == steps) {
      double u_abs = 0.0;
      for (double v : g.u) u_abs = std::max(u_abs, std::abs(v));
      const double lam_now = u_abs + p.k();
      if (!(lam_now <= lam_limit)) {
        std::ostringstream msg;
        msg << "CFL violated at step " << step << ": |lambda| = " << lam_now
            << " exceeds dx/dt = " << lam_limit;
        throw std::runtime_error(msg.str());
      }
    }
  }

  field.t = cfg.t_end;
  field.u = std::move(g.u);
  field.sigma = std::move(g.s);
  return field;
}

}  // namespace

ViscousField viscous_solve(const State& boundary, const State& initial, const Params& p,
                           const ViscousConfig& cfg) {
  validate(boundary, "boundary");
  validate(initial, "initial");
  return run<true>(boundary, initial, p, cfg);
}

ViscousField viscous_solve_serial(const State& boundary, const State& initial, const Params& p,
                                  const ViscousConfig& cfg) {
  validate(boundary, "boundary");
  validate(initial, "initial");
  return run<false>(boundary, initial, p, cfg);
}

double l1_distance(const ViscousField& field, const QuarterPlaneSolution& exact, double t,
                   const Params& p) {
  const std::size_t n = field.x.size();
  if (n < 2 || field.u.size() != n || field.sigma.size() != n) {
    throw config_error("l1_distance: field arrays missing or of unequal length");
  }
  if (!(t > 0.0)) throw config_error("l1_distance: t must be > 0");
  double sum = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const State e = sample(exact.structure, field.x[i] / t, p);
    const double err = std::abs(field.u[i] - e.u) + std::abs(field.sigma[i] - e.sigma);
    if (i > 0) sum += 0.5 * (err + prev) * (field.x[i] - field.x[i - 1]);
    prev = err;
  }
  return sum;
}

double crossing_position(const ViscousField& field, double level, double x_from, double x_to) {
  for (std::size_t i = 1; i < field.x.size(); ++i) {
    const double xa = field.x[i - 1], xb = field.x[i];
    if (xb < x_from || xa > x_to) continue;
    const double a = field.u[i - 1] - level, b = field.u[i] - level;
    if (a == 0.0) return xa;
    if ((a < 0.0) != (b < 0.0)) return xa + (xb - xa) * a / (a - b);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

namespace {

void put(std::ostream& os, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  os.write(buf, res.ptr - buf);
}

}  // namespace

void write_csv(std::ostream& os, const ViscousField& field) {
  os << "x,u,sigma\n";
  for (std::size_t i = 0; i < field.x.size(); ++i) {
    put(os, field.x[i]);
    os << ',';
    put(os, field.u[i]);
    os << ',';
    put(os, field.sigma[i]);
    os << '\n';
  }
}

}  // namespace elasto
