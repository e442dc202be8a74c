#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "eulerflux/cases.hpp"
#include "eulerflux/tables.hpp"
#include "eulerflux/verify.hpp"

namespace fs = std::filesystem;
using namespace eulerflux;

namespace {

int cmd_verify(bool fast) {
  const auto results = run_verification(!fast);
  print_verification(std::cout, results);
  return all_passed(results) ? 0 : 1;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string solution_csv(const Solution& sol, const GasModel& gas) {
  Semidiscretization disc(sol.mesh, sol.degree, SchemeConfig{}, gas);
  std::ostringstream out;
  out << (sol.mesh.dimension == 1 ? "x,rho,vx,vy,p\n" : "x,y,rho,vx,vy,p\n");
  char buf[256];
  const int npe = disc.nodes_per_element();
  for (int e = 0; e < sol.mesh.num_elements(); ++e) {
    for (int i = 0; i < npe; ++i) {
      const PrimitiveState q = cons_to_prim(sol.u[e * npe + i], gas);
      if (sol.mesh.dimension == 1)
        std::snprintf(buf, sizeof(buf), "%.9e,%.9e,%.9e,%.9e,%.9e\n",
                      disc.node_x(e, i), q.rho, q.vx, q.vy, q.p);
      else
        std::snprintf(buf, sizeof(buf), "%.9e,%.9e,%.9e,%.9e,%.9e,%.9e\n",
                      disc.node_x(e, i), disc.node_y(e, i), q.rho, q.vx, q.vy, q.p);
      out << buf;
    }
  }
  return out.str();
}

int cmd_run(const std::string& case_name, int degree, int elems,
            const std::string& volume, const std::string& surface, double gamma,
            int steps, double cfl, const std::string& out_dir) {
  if (case_name.empty()) {
    std::cerr << "--case is required (flag or config file)\n";
    return 1;
  }
  const auto tc = find_case(case_name);
  if (!tc) {
    std::cerr << "unknown case: " << case_name << "\n";
    return 1;
  }
  SchemeConfig cfg;
  cfg.degree = degree;
  if (degree > 0) {
    const auto vk = volume_flux_from_name(volume);
    if (!vk) {
      std::cerr << "unknown volume flux: " << volume << "\n";
      return 1;
    }
    cfg.volume.kind = *vk;
  }
  const auto surf = surface_scheme_from_name(surface);
  if (!surf) {
    std::cerr << "unknown surface flux: " << surface << "\n";
    return 1;
  }
  cfg.surface = *surf;
  if (steps > 0) cfg.policy = StepPolicy{steps, 0.0};
  if (cfl > 0.0) cfg.policy = StepPolicy{0, cfl};

  std::optional<double> gamma_override;
  if (gamma > 0.0) gamma_override = gamma;
  const GasModel gas{gamma_override.value_or(tc->gamma)};

  const RunResult result = run_case(*tc, cfg, elems, gamma_override);
  if (result.crashed()) {
    const CrashInfo& c = *result.crash;
    std::cout << "crash: step " << c.step << " t " << c.time << " element "
              << c.element << " node " << c.node << " quantity " << c.quantity
              << "\n";
    return 2;
  }
  std::cout << "completed: t = " << result.solution.time << "\n";
  if (tc->reference != ReferenceKind::None) {
    const double err = error_norm(result.solution, gas,
                                  tc->reference_density(tc->t_final));
    std::cout << "density error (mass norm): " << err << "\n";
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / (case_name + "_solution.csv"),
               solution_csv(result.solution, gas));
    std::cout << "wrote " << (fs::path(out_dir) / (case_name + "_solution.csv"))
              << "\n";
  }
  return 0;
}

int cmd_table(const std::string& id, const std::string& subset,
              const std::string& out_dir) {
  const auto spec = find_table(id);
  if (!spec) {
    std::cerr << "unknown table id: " << id << "\n";
    return 1;
  }
  std::optional<int> pmax, nmax;
  if (!subset.empty()) {
    const auto comma = subset.find(',');
    if (comma == std::string::npos) {
      std::cerr << "--subset expects pmax,nmax\n";
      return 1;
    }
    pmax = std::atoi(subset.substr(0, comma).c_str());
    nmax = std::atoi(subset.substr(comma + 1).c_str());
  }
  const Table table = make_table(*spec, pmax, nmax);
  std::cout << table_to_text(table);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / (id + ".csv"), table_to_csv(table));
    std::cout << "wrote " << (fs::path(out_dir) / (id + ".csv")) << "\n";
  }
  return 0;
}

int cmd_sweep(const std::string& out_dir, bool svg) {
  const SweepData data = positivity_sweep();
  std::cout << sweep_to_csv(data);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "sweep.csv", sweep_to_csv(data));
    if (svg) write_file(fs::path(out_dir) / "sweep.svg", sweep_to_svg(data));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy conservative and entropy stable Euler fluxes"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  bool fast = false;
  verify->add_flag("--fast", fast, "skip the slow table reproductions");

  auto* run = app.add_subcommand("run", "run a single benchmark case");
  std::string case_name, volume = "ch1", surface = "suliciu", out_dir, config_path;
  int degree = 0, elems = 100, steps = 0;
  double gamma = 0.0, cfl = 0.0;
  run->add_option("--config", config_path, "key=value file mirroring the flags");
  run->add_option("--case", case_name, "case name");
  run->add_option("--p", degree, "polynomial degree, 0 = finite volume");
  run->add_option("--elems", elems, "elements per axis");
  run->add_option("--volume", volume, "volume flux kind");
  run->add_option("--surface", surface, "surface flux, e.g. ch1+llf or suliciu");
  run->add_option("--gamma", gamma, "ratio of specific heats override");
  run->add_option("--steps", steps, "fixed number of time steps");
  run->add_option("--cfl", cfl, "CFL number for adaptive stepping");
  run->add_option("--out", out_dir, "output directory");

  auto* table = app.add_subcommand("table", "regenerate a benchmark table");
  std::string table_id, subset, table_out;
  table->add_option("--id", table_id, "table identifier")->required();
  table->add_option("--subset", subset, "pmax,nmax restriction");
  table->add_option("--out", table_out, "output directory");

  auto* sweep = app.add_subcommand("sweep", "pressure positivity sweep");
  std::string sweep_out;
  bool svg = false;
  sweep->add_option("--out", sweep_out, "output directory");
  sweep->add_flag("--svg", svg, "also write an SVG line plot");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(fast);
    if (run->parsed()) {
      if (!config_path.empty()) {
        // flags given on the command line win over config values
        std::ifstream in(config_path);
        if (!in) {
          std::cerr << "cannot open config file " << config_path << "\n";
          return 1;
        }
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty() || line[0] == '#') continue;
          const auto eq = line.find('=');
          if (eq == std::string::npos) continue;
          const std::string key = line.substr(0, eq);
          const std::string value = line.substr(eq + 1);
          const auto given = [&](const char* flag) {
            return run->count(flag) > 0;
          };
          if (key == "case" && !given("--case")) case_name = value;
          else if (key == "p" && !given("--p")) degree = std::atoi(value.c_str());
          else if (key == "elems" && !given("--elems")) elems = std::atoi(value.c_str());
          else if (key == "volume" && !given("--volume")) volume = value;
          else if (key == "surface" && !given("--surface")) surface = value;
          else if (key == "gamma" && !given("--gamma")) gamma = std::atof(value.c_str());
          else if (key == "steps" && !given("--steps")) steps = std::atoi(value.c_str());
          else if (key == "cfl" && !given("--cfl")) cfl = std::atof(value.c_str());
          else if (key == "out" && !given("--out")) out_dir = value;
        }
      }
      return cmd_run(case_name, degree, elems, volume, surface, gamma, steps, cfl,
                     out_dir);
    }
    if (table->parsed()) return cmd_table(table_id, subset, table_out);
    if (sweep->parsed()) return cmd_sweep(sweep_out, svg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
