#include "elasto/verify.hpp"

#include <algorithm>
#include <cmath>

#include "elasto/riemann.hpp"

namespace elasto {

RHResidual rh_residual(const State& left, const State& right, double speed, const Params& p) {
  const double du = right.u - left.u;
  const double ds = right.sigma - left.sigma;
  const double mean_u = 0.5 * (right.u + left.u);
  const double k2 = p.k() * p.k();
  return {-speed * du + 0.5 * (right.u * right.u - left.u * left.u) - ds,
          -speed * ds + mean_u * ds - k2 * du};
}

bool lax_check(const State& left, const State& right, double speed, WaveFamily f,
               const Params& p, double tol) {
  return characteristic_speed(right, f, p) - tol <= speed &&
         speed <= characteristic_speed(left, f, p) + tol;
}

namespace {

void check_wave(const Wave& w, const Params& p, double tol, VerificationSummary& out) {
  const double scale = state_scale(w.left, w.right, p);
  if (const auto* s = std::get_if<Shock>(&w.kind)) {
    const RHResidual r = rh_residual(w.left, w.right, s->speed, p);
    // r_stress carries one more factor of velocity than r_momentum.
    const double vel = std::max({1.0, p.k(), std::abs(w.left.u), std::abs(w.right.u)});
    out.max_rh_residual = std::max(
        {out.max_rh_residual, std::abs(r.r_momentum) / scale, std::abs(r.r_stress) / (scale * vel)});
    out.lax_ok = out.lax_ok && lax_check(w.left, w.right, s->speed, w.family, p, tol);
    return;
  }
  const auto& fan = std::get<Rarefaction>(w.kind);
  out.fans_increasing = out.fans_increasing && fan.xi_lo < fan.xi_hi &&
                        fan.xi_lo == characteristic_speed(w.left, w.family, p);
  const State edge = fan_state(w.left, w.family, fan.xi_hi, p, fan.xi_hi);
  const double err = std::max(std::abs(edge.u - w.right.u), std::abs(edge.sigma - w.right.sigma));
  out.fan_continuity_error = std::max(out.fan_continuity_error, err / scale);
  const double lam_hi = characteristic_speed(w.right, w.family, p);
  out.fan_continuity_error =
      std::max(out.fan_continuity_error, std::abs(lam_hi - fan.xi_hi) / scale);
}

}  // namespace

VerificationSummary verify_structure(const WaveStructure& ws, const Params& p, double tol) {
  VerificationSummary out;
  if (ws.wave1) check_wave(*ws.wave1, p, tol, out);
  if (ws.wave2) check_wave(*ws.wave2, p, tol, out);
  if (ws.wave1 && ws.wave2) {
    const double hi1 = ws.wave1->max_speed();
    const double lo2 = ws.wave2->min_speed();
    out.ordered = hi1 <= lo2 + tol * std::max({1.0, std::abs(hi1), std::abs(lo2)});
  }
  return out;
}

// Weak-form audit -------------------------------------------------------------

namespace {

// exp(1 - 1/(1 - z^2)) on |z| < 1, peak value 1.
struct Bump {
  double value = 0.0;
  double slope = 0.0;
};

Bump bump(double z) {
  if (std::abs(z) >= 1.0) return {};
  const double q = 1.0 - z * z;
  const double b = std::exp(1.0 - 1.0 / q);
  return {b, -2.0 * z / (q * q) * b};
}

struct TestFunction {
  double xc, hx, tc, ht;  // centre and half-widths
};

std::vector<TestFunction> dyadic_tests(const WeakGrid& g) {
  std::vector<TestFunction> tests;
  for (int level = 0; level < g.levels; ++level) {
    const int m = 1 << level;
    const double wx = (g.x_max - g.x_min) / m;
    const double wt = (g.t_max - g.t_min) / m;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        tests.push_back({g.x_min + (a + 0.5) * wx, 0.5 * wx, g.t_min + (b + 0.5) * wt, 0.5 * wt});
      }
    }
  }
  return tests;
}

void check_grid(const WeakGrid& g) {
  if (!(g.t_min > 0.0)) throw config_error("weak grid: t_min must be > 0");
  if (!(g.t_max > g.t_min)) throw config_error("weak grid: t_max must exceed t_min");
  if (!(g.x_max > g.x_min)) throw config_error("weak grid: x_max must exceed x_min");
  if (g.nx < 2 || g.nt < 2) throw config_error("weak grid: nx and nt must be >= 2");
  if (g.levels < 1 || g.levels > 8) throw config_error("weak grid: levels must be in [1, 8]");
}

// Contribution of time row n to every test function: entries [2m] and
// [2m+1] hold the momentum and stress sums, already multiplied by dx but not
// by the time weight.
void row_sums(const WaveStructure& ws, const Params& p, const WeakGrid& g,
              const std::vector<TestFunction>& tests, int n, std::vector<double>& u,
              std::vector<double>& s, double* out) {
  const double dx = (g.x_max - g.x_min) / g.nx;
  const double dt = (g.t_max - g.t_min) / g.nt;
  const double t = g.t_min + n * dt;
  const double k2 = p.k() * p.k();
  for (int i = 0; i <= g.nx; ++i) {
    const State st = sample(ws, (g.x_min + i * dx) / t, p);
    u[i] = st.u;
    s[i] = st.sigma;
  }
  for (std::size_t m = 0; m < tests.size(); ++m) {
    const TestFunction& tf = tests[m];
    const Bump bt = bump((t - tf.tc) / tf.ht);
    double mom = 0.0;
    double str = 0.0;
    if (bt.value != 0.0) {
      for (int i = 0; i <= g.nx; ++i) {
        const double x = g.x_min + i * dx;
        const Bump bx = bump((x - tf.xc) / tf.hx);
        const double w = (i == 0 || i == g.nx) ? 0.5 : 1.0;
        const double phi_t = bx.value * bt.slope / tf.ht;
        const double phi_x = bx.slope / tf.hx * bt.value;
        mom += w * (u[i] * phi_t + (0.5 * u[i] * u[i] - s[i]) * phi_x);
        str += w * (-s[i] * phi_t + k2 * u[i] * phi_x);
      }
      mom *= dx;
      str *= dx;
      for (int i = 0; i < g.nx; ++i) {
        const double xm = g.x_min + (i + 0.5) * dx;
        const double phi = bump((xm - tf.xc) / tf.hx).value * bt.value;
        str += phi * 0.5 * (u[i] + u[i + 1]) * (s[i + 1] - s[i]);
      }
    }
    out[2 * m] = mom;
    out[2 * m + 1] = str;
  }
}

WeakResidual reduce(const WeakGrid& g, std::size_t ntests, const std::vector<double>& rows) {
  const double dt = (g.t_max - g.t_min) / g.nt;
  WeakResidual r;
  for (std::size_t m = 0; m < ntests; ++m) {
    double mom = 0.0;
    double str = 0.0;
    for (int n = 0; n <= g.nt; ++n) {
      const double w = (n == 0 || n == g.nt) ? 0.5 : 1.0;
      mom += w * rows[(static_cast<std::size_t>(n) * ntests + m) * 2];
      str += w * rows[(static_cast<std::size_t>(n) * ntests + m) * 2 + 1];
    }
    r.momentum = std::max(r.momentum, std::abs(mom * dt));
    r.stress = std::max(r.stress, std::abs(str * dt));
  }
  return r;
}

}  // namespace

WeakResidual weak_residual(const WaveStructure& ws, const Params& p, const WeakGrid& g) {
  check_grid(g);
  const auto tests = dyadic_tests(g);
  const std::size_t width = tests.size() * 2;
  std::vector<double> rows(static_cast<std::size_t>(g.nt + 1) * width);
#pragma omp parallel
  {
    std::vector<double> u(g.nx + 1), s(g.nx + 1);
#pragma omp for schedule(static)
    for (int n = 0; n <= g.nt; ++n) {
      row_sums(ws, p, g, tests, n, u, s, rows.data() + static_cast<std::size_t>(n) * width);
    }
  }
  return reduce(g, tests.size(), rows);
}

WeakResidual weak_residual(const QuarterPlaneSolution& sol, const Params& p, const WeakGrid& g) {
  return weak_residual(sol.structure, p, g);
}

WeakResidual weak_residual_serial(const WaveStructure& ws, const Params& p, const WeakGrid& g) {
  check_grid(g);
  const auto tests = dyadic_tests(g);
  const std::size_t width = tests.size() * 2;
  std::vector<double> rows(static_cast<std::size_t>(g.nt + 1) * width);
  std::vector<double> u(g.nx + 1), s(g.nx + 1);
  for (int n = 0; n <= g.nt; ++n) {
    row_sums(ws, p, g, tests, n, u, s, rows.data() + static_cast<std::size_t>(n) * width);
  }
  return reduce(g, tests.size(), rows);
}

}  // namespace elasto
