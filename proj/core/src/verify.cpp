#include "eulerflux/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "eulerflux/exact_riemann.hpp"
#include "eulerflux/means.hpp"
#include "eulerflux/tables.hpp"

namespace eulerflux {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string format(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

struct StateSampler {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> exp_dist{-3.0, 3.0};
  std::uniform_real_distribution<double> v_dist{-10.0, 10.0};

  explicit StateSampler(uint64_t seed) : rng(seed) {}

  PrimitiveState operator()() {
    return {std::pow(10.0, exp_dist(rng)), v_dist(rng), v_dist(rng),
            std::pow(10.0, exp_dist(rng))};
  }
};

// Entropy-variable jump and potential jump in extended precision; keeps the
// verifier's own rounding well below the certified tolerance.
long double defect_extended(const FluxVector& f, const PrimitiveState& qm,
                            const PrimitiveState& qp, Axis dir, const GasModel& g,
                            long double* scale) {
  const auto w_ld = [&](const PrimitiveState& q) {
    const long double rho = q.rho, vx = q.vx, vy = q.vy, p = q.p;
    const long double gamma = g.gamma;
    const long double s = std::log(p) - gamma * std::log(rho);
    const long double rp = rho / p;
    return std::array<long double, 4>{
        gamma / (gamma - 1.0L) - s / (gamma - 1.0L) - 0.5L * rp * (vx * vx + vy * vy),
        rp * vx, rp * vy, -rp};
  };
  const auto wm = w_ld(qm), wp = w_ld(qp);
  const long double jpsi = dir == Axis::x
                               ? (long double)qp.rho * qp.vx - (long double)qm.rho * qm.vx
                               : (long double)qp.rho * qp.vy - (long double)qm.rho * qm.vy;
  long double defect = -jpsi;
  long double sc = std::abs(jpsi);
  for (int i = 0; i < 4; ++i) {
    const long double dw = wp[i] - wm[i];
    defect += dw * (long double)f[i];
    sc += std::abs(dw * (long double)f[i]);
  }
  if (scale) *scale = sc + 1e-300L;
  return defect;
}

CriterionResult criterion_ec_certificate() {
  const auto t0 = Clock::now();
  const GasModel g{1.4};
  StateSampler sample(20240901);
  long double worst = 0.0L;
  std::string worst_kind;
  for (int trial = 0; trial < 10000; ++trial) {
    const PrimitiveState qm = sample();
    const PrimitiveState qp = sample();
    for (VolumeFluxKind kind : ec_volume_flux_kinds()) {
      for (Axis dir : {Axis::x, Axis::y}) {
        const FluxVector f = ec_volume_flux(kind, qm, qp, dir, g);
        long double scale = 0.0L;
        const long double d = std::abs(defect_extended(f, qm, qp, dir, g, &scale));
        if (d / scale > worst) {
          worst = d / scale;
          worst_kind = volume_flux_name(kind);
        }
      }
    }
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst <= 1e-11 && elapsed < 5.0;
  std::ostringstream detail;
  detail << "max relative EC defect " << format("%.3e", (double)worst) << " ("
         << worst_kind << "), " << format("%.2f s", elapsed);
  return {1, "EC certificate for all ten EC flux kinds", pass, detail.str()};
}

bool flux_equals_ulp(const FluxVector& a, const FluxVector& b, double ulps) {
  for (int i = 0; i < 4; ++i) {
    const double scale = std::max(std::abs(b[i]), 1e-300);
    if (std::abs(a[i] - b[i]) > ulps * scale * 2.220446049250313e-16) return false;
  }
  return true;
}

CriterionResult criterion_consistency_symmetry() {
  const GasModel g{1.4};
  StateSampler sample(77);
  bool pass = true;
  std::string detail = "consistency <= 4 ulp and bit-exact symmetry hold";
  const std::vector<SurfaceScheme> surfaces = {
      *surface_scheme_from_name("ch1+llf"), *surface_scheme_from_name("ch1+sd"),
      *surface_scheme_from_name("ch1+md"), *surface_scheme_from_name("ch1+hd"),
      *surface_scheme_from_name("llf-classic"), *surface_scheme_from_name("suliciu")};
  for (int trial = 0; trial < 2000 && pass; ++trial) {
    const PrimitiveState qa = sample();
    const PrimitiveState qb = sample();
    for (Axis dir : {Axis::x, Axis::y}) {
      const FluxVector phys = physical_flux(qa, dir, g);
      for (VolumeFluxKind kind : all_volume_flux_kinds()) {
        const FluxVector fc = ec_volume_flux(kind, qa, qa, dir, g);
        if (!flux_equals_ulp(fc, phys, 4.0)) {
          pass = false;
          detail = std::string("consistency violated for ") +
                   std::string(volume_flux_name(kind));
          break;
        }
        const FluxVector fab = ec_volume_flux(kind, qa, qb, dir, g);
        const FluxVector fba = ec_volume_flux(kind, qb, qa, dir, g);
        if (fab != fba) {
          pass = false;
          detail = std::string("symmetry violated for ") +
                   std::string(volume_flux_name(kind));
          break;
        }
      }
      for (const SurfaceScheme& s : surfaces) {
        const FluxVector fc = s.flux(qa, qa, dir, g);
        if (!flux_equals_ulp(fc, phys, 4.0)) {
          pass = false;
          detail = "consistency violated for surface flux " + s.name();
          break;
        }
      }
      if (!pass) break;
    }
  }
  return {2, "flux consistency and argument symmetry", pass, detail};
}

CriterionResult criterion_sbp_identity() {
  double worst = 0.0;
  for (int p = 1; p <= 8; ++p) {
    const SbpOperator op = build_lobatto_sbp(p);
    for (double r : op.sbp_residual()) worst = std::max(worst, std::abs(r));
  }
  // 2D divergence compatibility on tensor operators, degree 4
  const SbpOperator op = build_lobatto_sbp(4);
  const TensorOperator2D top = tensorize(op);
  const int n = op.n();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  double worst2d = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    // random tensor polynomial of degree <= p in each variable
    std::vector<double> cx(n), cy(n);
    for (double& c : cx) c = coef(rng);
    for (double& c : cy) c = coef(rng);
    std::vector<double> u(n * n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        double px = 0.0, py = 0.0, xp = 1.0, yp = 1.0;
        for (int k = 0; k < n; ++k) {
          px += cx[k] * xp;
          py += cy[k] * yp;
          xp *= op.nodes[i];
          yp *= op.nodes[j];
        }
        u[j * n + i] = px * py;
      }
    const std::vector<double> du = top.apply_dx(u);
    double vol = 0.0;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) vol += top.mass(i, j) * du[j * n + i];
    const double surf = top.boundary_integral_x(u);
    worst2d = std::max(worst2d, std::abs(vol - surf));
  }
  const bool pass = worst <= 1e-12 && worst2d <= 1e-11;
  return {3, "SBP identity p=1..8 and 2D divergence compatibility", pass,
          "max residual " + format("%.3e", worst) + ", 2D defect " +
              format("%.3e", worst2d)};
}

std::function<PrimitiveState(double, double)> smooth_periodic_field(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(-0.15, 0.15);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  std::array<double, 3> ar{}, av{}, aw{}, ap{}, pr{}, pv{}, pw{}, pp{};
  for (int k = 0; k < 3; ++k) {
    ar[k] = amp(rng);
    av[k] = amp(rng);
    aw[k] = amp(rng);
    ap[k] = amp(rng);
    pr[k] = phase(rng);
    pv[k] = phase(rng);
    pw[k] = phase(rng);
    pp[k] = phase(rng);
  }
  return [=](double x, double) {
    double rho = 2.0, vx = 0.4, vy = -0.2, p = 2.5;
    for (int k = 0; k < 3; ++k) {
      const double arg = 2.0 * M_PI * (k + 1) * x;
      rho += ar[k] * std::sin(arg + pr[k]);
      vx += av[k] * std::sin(arg + pv[k]);
      vy += aw[k] * std::sin(arg + pw[k]);
      p += ap[k] * std::sin(arg + pp[k]);
    }
    return PrimitiveState{rho, vx, vy, p};
  };
}

CriterionResult criterion_entropy_rate() {
  const auto t0 = Clock::now();
  const GasModel g{1.4};
  const Mesh mesh = make_interval_mesh(0.0, 1.0, 8, BoundaryKind::Periodic);
  const auto field = smooth_periodic_field(321);
  bool pass = true;
  std::string detail;
  double worst_ec = 0.0, worst_diss = -1e300;

  for (VolumeFluxKind kind : ec_volume_flux_kinds()) {
    SchemeConfig cfg;
    cfg.degree = 3;
    cfg.volume.kind = kind;
    cfg.surface.family = SurfaceScheme::Family::EcWithDissipation;
    cfg.surface.base.kind = kind;
    cfg.surface.diss = DissipationKind::None;
    Semidiscretization disc(mesh, 3, cfg, g);
    const std::vector<Vec4> u = disc.project(field);
    double scale = 0.0;
    const double rate = disc.entropy_rate(u, &scale);
    worst_ec = std::max(worst_ec, std::abs(rate) / scale);
    if (std::abs(rate) > 1e-10 * scale) {
      pass = false;
      detail = std::string("EC rate violated for ") +
               std::string(volume_flux_name(kind));
    }
  }
  for (const char* surface :
       {"ch1+llf", "ch1+sd", "ch1+md", "ch1+hd", "suliciu"}) {
    SchemeConfig cfg;
    cfg.degree = 3;
    cfg.volume.kind = VolumeFluxKind::Ch1;
    cfg.surface = *surface_scheme_from_name(surface);
    Semidiscretization disc(mesh, 3, cfg, g);
    const std::vector<Vec4> u = disc.project(field);
    double scale = 0.0;
    const double rate = disc.entropy_rate(u, &scale);
    worst_diss = std::max(worst_diss, rate / scale);
    if (rate > 1e-10 * scale) {
      pass = false;
      detail = std::string("dissipative rate positive for ") + surface;
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 10.0) pass = false;
  if (detail.empty())
    detail = "max |EC rate|/scale " + format("%.3e", worst_ec) +
             ", max dissipative rate/scale " + format("%.3e", worst_diss) + ", " +
             format("%.2f s", elapsed);
  return {4, "semidiscrete entropy rate (periodic, p=3, 8 elements)", pass, detail};
}

CriterionResult criterion_volume_order() {
  const GasModel g{1.4};
  const auto field = smooth_periodic_field(99);
  bool pass = true;
  std::string detail;
  double min_order = 1e300;

  for (VolumeFluxKind kind : all_volume_flux_kinds()) {
    for (int p : {2, 3, 4}) {
      std::array<double, 2> errs{};
      const std::array<int, 2> ns{16, 32};
      for (int m = 0; m < 2; ++m) {
        const Mesh mesh = make_interval_mesh(0.0, 1.0, ns[m], BoundaryKind::Periodic);
        SchemeConfig cfg;
        cfg.degree = p;
        cfg.volume.kind = kind;
        Semidiscretization disc(mesh, p, cfg, g);
        const std::vector<Vec4> u = disc.project(field);
        const std::vector<Vec4> vol = disc.volume_terms(u);
        // df/dx by five-point extended-precision differences of the exact field
        double acc = 0.0;
        const long double h = 1e-4L;
        for (int e = 0; e < mesh.num_elements(); ++e) {
          for (int i = 0; i <= p; ++i) {
            const double x = disc.node_x(e, i);
            const auto fx = [&](long double xx) {
              const PrimitiveState q = field((double)xx, 0.0);
              const FluxVector f = physical_flux(q, Axis::x, g);
              return std::array<long double, 4>{f[0], f[1], f[2], f[3]};
            };
            const auto fm2 = fx(x - 2 * h), fm1 = fx(x - h), fp1 = fx(x + h),
                       fp2 = fx(x + 2 * h);
            for (int c = 0; c < 4; ++c) {
              const long double d =
                  (fm2[c] - 8.0L * fm1[c] + 8.0L * fp1[c] - fp2[c]) / (12.0L * h);
              const double r = vol[e * (p + 1) + i][c] - (double)d;
              acc += disc.node_mass(i) * r * r;
            }
          }
        }
        errs[m] = std::sqrt(acc);
      }
      const double order = std::log2(errs[0] / errs[1]);
      min_order = std::min(min_order, order - p);
      if (order < p - 0.1) {
        pass = false;
        detail = std::string("order ") + format("%.2f", order) + " < p for " +
                 std::string(volume_flux_name(kind)) + format(", p=%.0f", (double)p);
      }
    }
  }
  if (detail.empty())
    detail = "min (observed order - p) = " + format("%.2f", min_order);
  return {5, "volume-term truncation order for every volume kind", pass, detail};
}

CriterionResult criterion_fv_density_positivity() {
  const GasModel g{1.4};
  StateSampler sample(424242);
  const std::vector<VolumeFluxKind> eligible{
      VolumeFluxKind::Ch1,    VolumeFluxKind::Ch2,    VolumeFluxKind::RhoVT1,
      VolumeFluxKind::RhoVT2, VolumeFluxKind::PowerR, VolumeFluxKind::ExpChi,
      VolumeFluxKind::ReversedT};
  bool pass = true;
  std::string detail = "updated densities nonnegative for all eligible kinds";
  double min_rho = 1e300;
  for (VolumeFluxKind kind : eligible) {
    SurfaceScheme scheme;
    scheme.family = SurfaceScheme::Family::EcWithDissipation;
    scheme.base.kind = kind;
    scheme.diss = DissipationKind::LLF;
    for (int trial = 0; trial < 10000 && pass; ++trial) {
      std::vector<Vec4> row(8);
      std::vector<PrimitiveState> q(8);
      for (int i = 0; i < 8; ++i) {
        q[i] = sample();
        row[i] = prim_to_cons(q[i], g);
      }
      double lam = 0.0;
      for (int i = 0; i < 8; ++i)
        lam = std::max(lam, max_wavespeed(q[i], q[(i + 1) % 8], Axis::x, g));
      const double dx = 1.0;
      const double dt = dx / (2.0 * lam);
      const std::vector<Vec4> updated = fv_euler_step(row, scheme, dt, dx, g);
      for (const Vec4& u : updated) {
        min_rho = std::min(min_rho, u[0]);
        if (!(u[0] >= 0.0)) {
          pass = false;
          detail = std::string("negative density for ") +
                   std::string(volume_flux_name(kind));
        }
      }
    }
  }
  if (pass) detail += ", min rho " + format("%.3e", min_rho);
  return {6, "FV density nonnegativity at dt = dx/(2 lambda)", pass, detail};
}

struct TableCheck {
  VolumeFluxKind kind;
  int p;
  int N;
  double expected;
};

CriterionResult criterion_sod_suliciu_table() {
  const auto t0 = Clock::now();
  const TestCase tc = *find_case("sod");
  const std::vector<TableCheck> checks = {
      {VolumeFluxKind::IR, 1, 10, 1.072e-01},  {VolumeFluxKind::IR, 1, 20, 6.898e-02},
      {VolumeFluxKind::IR, 1, 40, 4.788e-02},  {VolumeFluxKind::IR, 2, 10, 6.368e-02},
      {VolumeFluxKind::IR, 2, 20, 3.368e-02},  {VolumeFluxKind::IR, 2, 40, 2.843e-02},
      {VolumeFluxKind::IR, 3, 10, 3.298e-02},  {VolumeFluxKind::IR, 3, 20, 2.931e-02},
      {VolumeFluxKind::IR, 3, 40, 2.137e-02},  {VolumeFluxKind::Ch1, 1, 10, 1.063e-01},
      {VolumeFluxKind::Ch1, 1, 20, 6.852e-02}, {VolumeFluxKind::Ch1, 1, 40, 4.825e-02},
      {VolumeFluxKind::Ch1, 2, 10, 6.262e-02}, {VolumeFluxKind::Ch1, 2, 20, 3.338e-02},
      {VolumeFluxKind::Ch1, 2, 40, 2.859e-02}, {VolumeFluxKind::Ch1, 3, 10, 3.325e-02},
      {VolumeFluxKind::Ch1, 3, 20, 2.913e-02}, {VolumeFluxKind::Ch1, 3, 40, 2.098e-02}};
  const auto reference = tc.reference_density(tc.t_final);
  bool pass = true;
  int failures = 0;
  double worst = 0.0;
  std::string worst_entry;
  for (const TableCheck& check : checks) {
    SchemeConfig cfg;
    cfg.degree = check.p;
    cfg.volume.kind = check.kind;
    cfg.surface.family = SurfaceScheme::Family::Suliciu;
    const RunResult result = run_case(tc, cfg, check.N);
    double rel = 1.0;
    if (!result.crashed()) {
      const double err = error_norm(result.solution, GasModel{tc.gamma}, reference);
      rel = std::abs(err - check.expected) / check.expected;
    }
    if (rel > worst) {
      worst = rel;
      worst_entry = std::string(volume_flux_name(check.kind)) +
                    format(" p=%.0f", (double)check.p) +
                    format(" N=%.0f", (double)check.N);
    }
    if (rel > 0.01) {
      pass = false;
      ++failures;
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 120.0) pass = false;
  std::string detail = format("%.0f of 18 entries beyond 1%%", (double)failures) +
                       ", worst " + format("%.1f%%", 100.0 * worst) + " at " +
                       worst_entry + format(", %.1f s", elapsed);
  if (pass) detail = "all 18 entries within 1%, " + format("%.1f s", elapsed);
  return {7, "Sod shock tube flux-differencing table (Suliciu)", pass, detail};
}

CriterionResult criterion_sod_fv_table() {
  const TestCase tc = *find_case("sod");
  const auto reference = tc.reference_density(tc.t_final);
  struct Check {
    const char* surface;
    int N;
    double expected;
  };
  const std::vector<Check> checks = {{"ch1+llf", 100, 4.622e-02},
                                     {"ch1+llf", 200, 3.747e-02},
                                     {"ch1+llf", 400, 2.797e-02},
                                     {"suliciu", 100, 3.945e-02}};
  bool pass = true;
  std::string detail;
  for (const Check& check : checks) {
    SchemeConfig cfg;
    cfg.degree = 0;
    cfg.surface = *surface_scheme_from_name(check.surface);
    const RunResult result = run_case(tc, cfg, check.N);
    double rel = 1.0;
    double err = 0.0;
    if (!result.crashed()) {
      err = error_norm(result.solution, GasModel{tc.gamma}, reference);
      rel = std::abs(err - check.expected) / check.expected;
    }
    if (!detail.empty()) detail += "; ";
    detail += std::string(check.surface) + format(" N=%.0f ", (double)check.N) +
              format("%+.1f%%", 100.0 * (err / check.expected - 1.0));
    if (rel > 0.02) pass = false;
  }
  return {8, "Sod shock tube finite-volume spot checks", pass, detail};
}

CriterionResult criterion_crash_reproduction() {
  bool pass = true;
  std::string detail;
  // (a) pressure-in-density-flux kinds crash on the left DWGW blast wave
  {
    const TestCase tc = *find_case("dwgwleft");
    for (const char* surface : {"rho-v-p+llf", "rho-v-invp+llf"}) {
      for (int n : {100, 200, 400, 800, 1600, 3200, 6400, 12800}) {
        SchemeConfig cfg;
        cfg.degree = 0;
        cfg.surface = *surface_scheme_from_name(surface);
        const RunResult result = run_case(tc, cfg, n);
        if (!result.crashed()) {
          pass = false;
          detail = std::string(surface) + format(" completed at N=%.0f", (double)n);
        }
      }
    }
  }
  // (b) scalar/matrix dissipation crash on the critical explosion; LLF and
  // Suliciu complete with the reported error. The published error values
  // correspond to gamma = 1.4 (the text of the source states 5/3, but the
  // tabulated 1.732e-3 / 1.733e-3 reproduce exactly only with 1.4); the
  // crash pattern is required under both.
  if (pass) {
    TestCase tc = *find_case("criticalexplosion");
    for (const char* surface : {"ch1+sd", "ch1+md"}) {
      SchemeConfig cfg;
      cfg.degree = 0;
      cfg.surface = *surface_scheme_from_name(surface);
      if (!run_case(tc, cfg, 100).crashed() ||
          !run_case(tc, cfg, 100, 1.4).crashed()) {
        pass = false;
        detail = std::string(surface) + " completed on criticalexplosion";
      }
    }
    tc.gamma = 1.4;
    const auto reference = tc.reference_density(tc.t_final);
    const struct {
      const char* surface;
      double expected;
    } completions[] = {{"ch1+llf", 1.732e-03}, {"suliciu", 1.733e-03}};
    for (const auto& check : completions) {
      SchemeConfig cfg;
      cfg.degree = 0;
      cfg.surface = *surface_scheme_from_name(check.surface);
      const RunResult result = run_case(tc, cfg, 100);
      if (result.crashed()) {
        pass = false;
        detail = std::string(check.surface) + " crashed on criticalexplosion";
        continue;
      }
      const double err = error_norm(result.solution, GasModel{tc.gamma}, reference);
      if (std::abs(err - check.expected) / check.expected > 0.02) {
        pass = false;
        detail = std::string(check.surface) + ": got " + format("%.4e", err) +
                 " expected " + format("%.4e", check.expected);
      }
    }
  }
  // (c) central volume flux crashes on Sod flux differencing
  if (pass) {
    const TestCase tc = *find_case("sod");
    SchemeConfig cfg;
    cfg.degree = 1;
    cfg.volume.kind = VolumeFluxKind::Central;
    cfg.surface.family = SurfaceScheme::Family::Suliciu;
    if (!run_case(tc, cfg, 10).crashed()) {
      pass = false;
      detail = "central volume flux completed on Sod at p=1, N=10";
    }
  }
  if (detail.empty())
    detail =
        "all crash/completion patterns reproduced; critical-explosion errors "
        "match at gamma=1.4 (published table)";
  return {9, "crash reproduction (DWGW left, critical explosion, central)", pass,
          detail};
}

CriterionResult criterion_positivity_sweep() {
  const SweepData data = positivity_sweep(201);
  bool llf_positive = true, sd_negative = false, md_negative = false;
  for (size_t i = 0; i < data.ratio.size(); ++i) {
    if (!(data.p_llf[i] > 0.0)) llf_positive = false;
    if (data.p_sd[i] < 0.0) sd_negative = true;
    if (data.p_md[i] < 0.0) md_negative = true;
  }
  const bool pass = llf_positive && sd_negative && md_negative;
  std::ostringstream detail;
  detail << "LLF " << (llf_positive ? "positive" : "NOT positive")
         << ", SD " << (sd_negative ? "crosses zero" : "stays positive")
         << ", MD " << (md_negative ? "crosses zero" : "stays positive");
  return {10, "pressure positivity sweep (one explicit Euler step)", pass,
          detail.str()};
}

CriterionResult criterion_vortex_table() {
  const auto t0 = Clock::now();
  const TestCase tc = *find_case("vortex");
  const auto reference = tc.reference_density(tc.t_final);
  const double expected = 1.20e-01;
  bool pass = true;
  double worst = 0.0;
  std::string detail;
  std::vector<VolumeFluxKind> kinds = split_volume_flux_kinds();
  for (VolumeFluxKind k : ec_volume_flux_kinds()) kinds.push_back(k);
  for (VolumeFluxKind kind : kinds) {
    if (kind == VolumeFluxKind::PowerR || kind == VolumeFluxKind::ExpChi) continue;
    SchemeConfig cfg;
    cfg.degree = 1;
    cfg.volume.kind = kind;
    cfg.surface.family = SurfaceScheme::Family::Suliciu;
    const RunResult result = run_case(tc, cfg, 10);
    if (result.crashed()) {
      pass = false;
      detail = std::string(volume_flux_name(kind)) +
               " crashed on the vortex (the published initial condition places "
               "a near-vacuum core on a mesh node)";
      break;
    }
    const double err = error_norm(result.solution, GasModel{tc.gamma}, reference);
    const double rel = std::abs(err - expected) / expected;
    worst = std::max(worst, rel);
    if (rel > 0.10) {
      pass = false;
      detail = std::string(volume_flux_name(kind)) + ": got " + format("%.4e", err) +
               " expected about " + format("%.4e", expected);
      break;
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 300.0) pass = false;
  if (detail.empty())
    detail = "max relative deviation " + format("%.4f", worst) + ", " +
             format("%.1f s", elapsed);
  return {11, "isentropic vortex table, p=1, 10x10 elements", pass, detail};
}

// Independent bisection oracle on the star-pressure equation.
long double oracle_side(long double p, long double rho, long double v, long double pk,
                        long double gamma) {
  (void)v;
  const long double c = std::sqrt(gamma * pk / rho);
  if (p > pk) {
    const long double A = 2.0L / ((gamma + 1.0L) * rho);
    const long double B = (gamma - 1.0L) / (gamma + 1.0L) * pk;
    return (p - pk) * std::sqrt(A / (p + B));
  }
  return 2.0L * c / (gamma - 1.0L) *
         (std::pow(p / pk, (gamma - 1.0L) / (2.0L * gamma)) - 1.0L);
}

long double oracle_star_pressure(const PrimitiveState& l, const PrimitiveState& r,
                                 long double gamma) {
  const auto f = [&](long double p) {
    return oracle_side(p, l.rho, l.vx, l.p, gamma) +
           oracle_side(p, r.rho, r.vx, r.p, gamma) + (long double)(r.vx - l.vx);
  };
  long double lo = 1e-30L, hi = 10.0L * std::max(l.p, r.p);
  while (f(hi) < 0.0L) hi *= 2.0L;
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (f(mid) > 0.0L)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5L * (lo + hi);
}

CriterionResult criterion_exact_riemann() {
  const GasModel g{1.4};
  bool pass = true;
  std::string detail;

  const PrimitiveState sod_l{1.0, 0.0, 0.0, 1.0};
  const PrimitiveState sod_r{0.125, 0.0, 0.0, 0.1};
  const RiemannFan sod = exact_riemann(sod_l, sod_r, g);
  const long double sod_oracle = oracle_star_pressure(sod_l, sod_r, 1.4L);
  if (std::abs((long double)sod.p_star - sod_oracle) > 1e-9L * sod_oracle)
    pass = false;
  if (std::abs(sod.p_star - 0.30313) > 1e-4 || std::abs(sod.v_star - 0.92745) > 1e-4)
    pass = false;

  const PrimitiveState nv_l{1.0, -2.0, 0.0, 0.4};
  const PrimitiveState nv_r{1.0, 2.0, 0.0, 0.4};
  const RiemannFan nv = exact_riemann(nv_l, nv_r, g);
  const long double nv_oracle = oracle_star_pressure(nv_l, nv_r, 1.4L);
  if (std::abs((long double)nv.p_star - nv_oracle) > 1e-9L * nv_oracle) pass = false;
  if (std::abs(nv.p_star - 0.00189) > 2e-5) pass = false;

  // Rankine-Hugoniot across the right shock of the Sod fan
  double rh = 0.0;
  {
    const PrimitiveState star{sod.rho_star_right, sod.v_star, 0.0, sod.p_star};
    const Vec4 ustar = prim_to_cons(star, g);
    const Vec4 ur = prim_to_cons(sod_r, g);
    const FluxVector fstar = physical_flux(star, Axis::x, g);
    const FluxVector fr = physical_flux(sod_r, Axis::x, g);
    const double s = sod.right_speed_head;
    double scale = 0.0;
    for (int i = 0; i < 4; ++i) {
      rh = std::max(rh, std::abs(fstar[i] - fr[i] - s * (ustar[i] - ur[i])));
      scale = std::max(scale, std::abs(fstar[i]) + std::abs(s * ustar[i]) + 1.0);
    }
    rh /= scale;
  }
  if (rh > 1e-9) pass = false;

  detail = "sod p* " + format("%.6f", sod.p_star) + ", v* " +
           format("%.6f", sod.v_star) + ", near-vacuum p* " +
           format("%.6f", nv.p_star) + ", RH residual " + format("%.2e", rh);
  return {12, "exact Riemann star values and Rankine-Hugoniot", pass, detail};
}

}  // namespace

std::vector<CriterionResult> run_verification(bool include_slow) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_ec_certificate());
  results.push_back(criterion_consistency_symmetry());
  results.push_back(criterion_sbp_identity());
  results.push_back(criterion_entropy_rate());
  results.push_back(criterion_volume_order());
  results.push_back(criterion_fv_density_positivity());
  if (include_slow) {
    results.push_back(criterion_sod_suliciu_table());
    results.push_back(criterion_sod_fv_table());
    results.push_back(criterion_crash_reproduction());
  }
  results.push_back(criterion_positivity_sweep());
  if (include_slow) results.push_back(criterion_vortex_table());
  results.push_back(criterion_exact_riemann());
  return results;
}

void print_verification(std::ostream& out,
                        const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
        << " (" << r.detail << ")\n";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace eulerflux
