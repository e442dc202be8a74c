#include "eulerflux/cases.hpp"

#include <cmath>

#include "eulerflux/exact_riemann.hpp"

namespace eulerflux {

namespace {

TestCase riemann_case(std::string name, double gamma, double x_min, double x_max,
                      double x0, PrimitiveState left, PrimitiveState right,
                      double t_final, int dgsem_steps = 0) {
  TestCase c;
  c.name = std::move(name);
  c.gamma = gamma;
  c.x_min = x_min;
  c.x_max = x_max;
  c.x0 = x0;
  c.left = left;
  c.right = right;
  c.t_final = t_final;
  if (dgsem_steps > 0) c.policy_dgsem = StepPolicy{dgsem_steps, 0.0};
  return c;
}

struct VortexField {
  double gamma;
  // free stream rho=1, vx=1, vy=0, RT=1; strength 5, radius parameter 1/4
  static constexpr double beta = 5.0;
  static constexpr double radius = 0.25;

  PrimitiveState operator()(double x, double y) const {
    const double shape = std::exp((1.0 - x * x - y * y) / (2.0 * radius));
    const double vx = 1.0 - y * beta / (2.0 * M_PI) * shape;
    const double vy = x * beta / (2.0 * M_PI) * shape;
    const double rt = 1.0 - (gamma - 1.0) / gamma * beta / (8.0 * M_PI * M_PI) *
                                shape * shape;
    const double rho = std::pow(rt, 1.0 / (gamma - 1.0));
    return {rho, vx, vy, rho * rt};
  }
};

std::vector<TestCase> build_registry() {
  std::vector<TestCase> cases;

  cases.push_back(riemann_case("sod", 1.4, -0.5, 1.5, 0.5, {1.0, 0.0, 0.0, 1.0},
                               {0.125, 0.0, 0.0, 0.1}, 0.25, 3000));
  cases.push_back(riemann_case("modsod", 1.4, 0.0, 1.0, 0.3, {1.0, 0.75, 0.0, 1.0},
                               {0.125, 0.0, 0.0, 0.1}, 0.2, 15000));
  cases.push_back(riemann_case("nearvacuum", 1.4, 0.0, 1.0, 0.5,
                               {1.0, -2.0, 0.0, 0.4}, {1.0, 2.0, 0.0, 0.4}, 0.15));
  cases.push_back(riemann_case("blastleft", 1.4, 0.0, 1.0, 0.5,
                               {1.0, 0.0, 0.0, 1000.0}, {1.0, 0.0, 0.0, 0.01},
                               0.012));
  cases.push_back(riemann_case("slowcontact", 1.4, 0.0, 1.0, 0.8,
                               {1.0, -19.59745, 0.0, 1000.0},
                               {1.0, -19.59745, 0.0, 0.01}, 0.012));
  cases.push_back(riemann_case("blastright", 1.4, 0.0, 1.0, 0.5,
                               {1.0, 0.0, 0.0, 0.01}, {1.0, 0.0, 0.0, 100.0},
                               0.035));
  cases.push_back(riemann_case("dwgwleft", 5.0 / 3.0, -1.0, 1.0, -0.1,
                               {1.0, 10.0, 0.0, 1.0}, {1.0, 10.0, 0.0, 1e-6},
                               5e-2));
  cases.push_back(riemann_case("dwgwright", 5.0 / 3.0, -1.0, 1.0, 0.1,
                               {1.0, 10.0, 0.0, 1e-6}, {1.0, 10.0, 0.0, 1.0},
                               5e-2));
  cases.push_back(riemann_case("criticalexplosion", 5.0 / 3.0, -1.0, 1.0, -0.5,
                               {0.1, 10.0, 0.0, 1e-12}, {0.1, 10.0, 0.0, 1e-3},
                               0.1));

  TestCase vortex;
  vortex.name = "vortex";
  vortex.dimension = 2;
  vortex.gamma = 1.4;
  vortex.x_min = vortex.y_min = -5.0;
  vortex.x_max = vortex.y_max = 5.0;
  vortex.t_final = 10.0;
  vortex.reference = ReferenceKind::AdvectedInitial;
  vortex.boundary = BoundaryKind::Periodic;
  vortex.policy_dgsem = StepPolicy{0, 0.5};
  vortex.policy_fv = StepPolicy{0, 0.5};
  cases.push_back(vortex);

  return cases;
}

}  // namespace

std::function<PrimitiveState(double, double)> TestCase::initial_condition() const {
  if (dimension == 2) return VortexField{gamma};
  const PrimitiveState l = left, r = right;
  const double split = x0;
  return [l, r, split](double x, double) { return x < split ? l : r; };
}

std::function<double(double, double)> TestCase::reference_density(double time) const {
  if (reference == ReferenceKind::AdvectedInitial) {
    // free stream (1, 0); at t = 10 the vortex has crossed the periodic box
    auto init = initial_condition();
    const double lx = x_max - x_min, xm = x_min;
    return [init, time, lx, xm](double x, double y) {
      double xs = x - time;
      xs -= lx * std::floor((xs - xm) / lx);
      return init(xs, y).rho;
    };
  }
  const RiemannFan fan = exact_riemann(left, right, GasModel{gamma});
  const double split = x0;
  const double t = time;
  return [fan, split, t](double x, double) {
    if (t <= 0.0) return x < split ? fan.left.rho : fan.right.rho;
    return fan.sample((x - split) / t).rho;
  };
}

const std::vector<TestCase>& case_registry() {
  static const std::vector<TestCase> cases = build_registry();
  return cases;
}

std::optional<TestCase> find_case(std::string_view name) {
  for (const TestCase& c : case_registry())
    if (c.name == name) return c;
  return std::nullopt;
}

RunResult run_case(const TestCase& tc, SchemeConfig scheme, int elements,
                   std::optional<double> gamma_override) {
  SimulationSetup setup;
  setup.gas = GasModel{gamma_override.value_or(tc.gamma)};
  if (tc.dimension == 1) {
    setup.mesh = make_interval_mesh(tc.x_min, tc.x_max, elements, tc.boundary);
  } else {
    setup.mesh = make_box_mesh(tc.x_min, tc.x_max, tc.y_min, tc.y_max, elements,
                               elements, tc.boundary);
  }
  if (scheme.policy.steps == 0 && scheme.policy.cfl == 0.0)
    scheme.policy = scheme.degree == 0 ? tc.policy_fv : tc.policy_dgsem;
  setup.scheme = scheme;
  setup.t_final = tc.t_final;
  setup.initial = tc.initial_condition();
  if (tc.boundary == BoundaryKind::WeakDirichlet) {
    setup.exterior_left = tc.left;
    setup.exterior_right = tc.right;
  }
  return run_simulation(setup);
}

}  // namespace eulerflux
