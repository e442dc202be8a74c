#include "eulerflux/tables.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace eulerflux {

double error_norm(const Semidiscretization& disc, const std::vector<Vec4>& u,
                  const std::function<double(double, double)>& rho_ref) {
  double acc = 0.0;
  const int npe = disc.nodes_per_element();
  for (int e = 0; e < disc.mesh().num_elements(); ++e) {
    for (int i = 0; i < npe; ++i) {
      const double d = u[e * npe + i][0] - rho_ref(disc.node_x(e, i), disc.node_y(e, i));
      acc += disc.node_mass(i) * d * d;
    }
  }
  return std::sqrt(acc);
}

double error_norm(const Solution& sol, const GasModel& gas,
                  const std::function<double(double, double)>& rho_ref) {
  Semidiscretization disc(sol.mesh, sol.degree, SchemeConfig{}, gas);
  return error_norm(disc, sol.u, rho_ref);
}

void annotate_eoc(std::vector<ErrorRow>& rows) {
  for (size_t k = 1; k < rows.size(); ++k) {
    ErrorRow& fine = rows[k];
    const ErrorRow& coarse = rows[k - 1];
    if (fine.p == coarse.p && fine.N == 2 * coarse.N && fine.error && coarse.error)
      fine.eoc = std::log2(*coarse.error / *fine.error);
  }
}

namespace {

const std::vector<std::string>& fv_table_schemes() {
  static const std::vector<std::string> schemes{
      "ch1+sd",        "ch1+md",       "ch1+hd",      "ch1+llf",
      "ch2+llf",       "rho-v-invp+llf", "rho-v-p+llf", "rho-v-t1+llf",
      "rho-v-t2+llf",  "reversed-t+llf", "llf-classic", "suliciu"};
  return schemes;
}

std::vector<std::string> dgsem_table_schemes(const std::string& surface) {
  std::vector<std::string> schemes;
  for (VolumeFluxKind kind : ec_volume_flux_kinds()) {
    if (kind == VolumeFluxKind::PowerR || kind == VolumeFluxKind::ExpChi) continue;
    schemes.push_back(std::string(volume_flux_name(kind)) + "/" + surface);
  }
  return schemes;
}

std::vector<std::string> vortex_table_schemes() {
  std::vector<std::string> schemes;
  for (VolumeFluxKind kind : split_volume_flux_kinds())
    schemes.push_back(std::string(volume_flux_name(kind)) + "/suliciu");
  for (VolumeFluxKind kind : ec_volume_flux_kinds()) {
    if (kind == VolumeFluxKind::PowerR || kind == VolumeFluxKind::ExpChi) continue;
    schemes.push_back(std::string(volume_flux_name(kind)) + "/suliciu");
  }
  return schemes;
}

TableSpec dgsem_table(std::string id, std::string case_name, std::string surface) {
  return {std::move(id),
          std::move(case_name),
          dgsem_table_schemes(surface),
          {1, 2, 3, 4, 5},
          {10, 20, 40, 80, 160, 320}};
}

TableSpec fv_table(std::string id, std::string case_name) {
  return {std::move(id),
          std::move(case_name),
          fv_table_schemes(),
          {0},
          {100, 200, 400, 800, 1600, 3200, 6400, 12800}};
}

std::vector<TableSpec> build_table_registry() {
  std::vector<TableSpec> t;
  t.push_back(dgsem_table("sod-suliciu", "sod", "suliciu"));
  t.push_back(dgsem_table("sod-llf", "sod", "llf-classic"));
  t.push_back(dgsem_table("modsod-suliciu", "modsod", "suliciu"));
  t.push_back(dgsem_table("modsod-llf", "modsod", "llf-classic"));
  t.push_back(fv_table("sod-fv", "sod"));
  t.push_back(fv_table("modsod-fv", "modsod"));
  t.push_back(fv_table("nearvacuum-fv", "nearvacuum"));
  t.push_back(fv_table("blastleft-fv", "blastleft"));
  t.push_back(fv_table("slowcontact-fv", "slowcontact"));
  t.push_back(fv_table("blastright-fv", "blastright"));
  t.push_back(fv_table("dwgwleft-fv", "dwgwleft"));
  t.push_back(fv_table("dwgwright-fv", "dwgwright"));
  t.push_back(fv_table("critical-fv", "criticalexplosion"));
  t.push_back(TableSpec{"vortex", "vortex", vortex_table_schemes(), {1, 2, 3}, {10}});
  return t;
}

struct ParsedScheme {
  SchemeConfig config;
};

// "VOLUME/SURFACE" (flux differencing) or a plain surface name (FV).
std::optional<SchemeConfig> parse_table_scheme(const std::string& s, int degree) {
  SchemeConfig cfg;
  cfg.degree = degree;
  std::string surface = s;
  if (auto pos = s.find('/'); pos != std::string::npos) {
    const auto volume = volume_flux_from_name(s.substr(0, pos));
    if (!volume) return std::nullopt;
    cfg.volume.kind = *volume;
    surface = s.substr(pos + 1);
  }
  const auto surf = surface_scheme_from_name(surface);
  if (!surf) return std::nullopt;
  cfg.surface = *surf;
  return cfg;
}

int thread_budget() {
  const char* env = std::getenv("EULERFLUX_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

}  // namespace

const std::vector<TableSpec>& table_registry() {
  static const std::vector<TableSpec> tables = build_table_registry();
  return tables;
}

std::optional<TableSpec> find_table(std::string_view id) {
  for (const TableSpec& t : table_registry())
    if (t.id == id) return t;
  return std::nullopt;
}

Table make_table(const TableSpec& spec, std::optional<int> max_degree,
                 std::optional<int> max_elements) {
  const auto tc = find_case(spec.case_name);
  if (!tc) throw std::invalid_argument("unknown case " + spec.case_name);

  std::vector<int> degrees;
  for (int p : spec.degrees)
    if (!max_degree || p <= *max_degree) degrees.push_back(p);
  std::vector<int> counts;
  for (int n : spec.element_counts)
    if (!max_elements || n <= *max_elements) counts.push_back(n);

  struct Cell {
    size_t column;
    size_t row;
    SchemeConfig config;
    int elements;
  };
  Table table;
  table.id = spec.id;
  std::vector<Cell> cells;
  for (size_t c = 0; c < spec.schemes.size(); ++c) {
    TableColumn col;
    col.scheme = spec.schemes[c];
    for (int p : degrees) {
      for (int n : counts) {
        auto cfg = parse_table_scheme(spec.schemes[c], p);
        if (!cfg) throw std::invalid_argument("bad scheme " + spec.schemes[c]);
        col.rows.push_back(ErrorRow{p, n, std::nullopt, std::nullopt});
        cells.push_back(Cell{c, col.rows.size() - 1, *cfg, n});
      }
    }
    table.columns.push_back(std::move(col));
  }

  const auto reference = tc->reference_density(tc->t_final);
  auto run_cell = [&](const Cell& cell) -> std::optional<double> {
    const RunResult result = run_case(*tc, cell.config, cell.elements);
    if (result.crashed()) return std::nullopt;
    return error_norm(result.solution, GasModel{tc->gamma}, reference);
  };

  const int workers = std::min<int>(thread_budget(), static_cast<int>(cells.size()));
  if (workers <= 1) {
    for (const Cell& cell : cells)
      table.columns[cell.column].rows[cell.row].error = run_cell(cell);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
          table.columns[cells[i].column].rows[cells[i].row].error =
              run_cell(cells[i]);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (TableColumn& col : table.columns) annotate_eoc(col.rows);
  return table;
}

namespace {

std::string format_error(const std::optional<double>& e) {
  if (!e) return "*";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", *e);
  return buf;
}

std::string format_eoc(const std::optional<double>& e) {
  if (!e) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *e);
  return buf;
}

}  // namespace

std::string table_to_csv(const Table& table) {
  std::ostringstream out;
  out << "# table: " << table.id << "\n";
  for (const TableColumn& col : table.columns) {
    out << "# scheme: " << col.scheme << "\n";
    out << "p,N,error,eoc\n";
    for (const ErrorRow& row : col.rows)
      out << row.p << ',' << row.N << ',' << format_error(row.error) << ','
          << format_eoc(row.eoc) << "\n";
  }
  return out.str();
}

std::optional<Table> table_from_csv(const std::string& csv) {
  Table table;
  std::istringstream in(csv);
  std::string line;
  TableColumn* col = nullptr;
  while (std::getline(in, line)) {
    if (line.rfind("# table: ", 0) == 0) {
      table.id = line.substr(9);
      continue;
    }
    if (line.rfind("# scheme: ", 0) == 0) {
      table.columns.push_back(TableColumn{line.substr(10), {}});
      col = &table.columns.back();
      continue;
    }
    if (line.empty() || line == "p,N,error,eoc") continue;
    if (!col) return std::nullopt;
    ErrorRow row;
    std::istringstream ls(line);
    std::string field;
    if (!std::getline(ls, field, ',')) return std::nullopt;
    row.p = std::atoi(field.c_str());
    if (!std::getline(ls, field, ',')) return std::nullopt;
    row.N = std::atoi(field.c_str());
    if (!std::getline(ls, field, ',')) return std::nullopt;
    if (field != "*") row.error = std::atof(field.c_str());
    if (std::getline(ls, field, ',') && !field.empty())
      row.eoc = std::atof(field.c_str());
    col->rows.push_back(row);
  }
  return table;
}

std::string table_to_text(const Table& table) {
  std::ostringstream out;
  out << "table " << table.id << "\n";
  out << "   p      N";
  for (const TableColumn& col : table.columns) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " | %16s   EOC ", col.scheme.c_str());
    out << buf;
  }
  out << "\n";
  if (table.columns.empty()) return out.str();
  const size_t rows = table.columns.front().rows.size();
  for (size_t r = 0; r < rows; ++r) {
    char head[32];
    std::snprintf(head, sizeof(head), "%4d %6d", table.columns[0].rows[r].p,
                  table.columns[0].rows[r].N);
    out << head;
    for (const TableColumn& col : table.columns) {
      const ErrorRow& row = col.rows[r];
      char buf[64];
      std::snprintf(buf, sizeof(buf), " | %16s %5s ",
                    format_error(row.error).c_str(), format_eoc(row.eoc).c_str());
      out << buf;
    }
    out << "\n";
  }
  return out.str();
}

SweepData positivity_sweep(int samples) {
  const GasModel g{5.0 / 3.0};
  const PrimitiveState q_low{0.1, 10.0, 0.0, 1e-12};
  const PrimitiveState q_high{10.0, 10.0, 0.0, 1e-6};
  const Vec4 u_i = prim_to_cons(q_low, g);

  const auto step_pressure = [&](const SurfaceScheme& scheme, double ratio) {
    const FluxVector f_right = scheme.flux(q_low, q_high, Axis::x, g);
    const FluxVector f_left = scheme.flux(q_low, q_low, Axis::x, g);
    const Vec4 updated = u_i - ratio * (f_right - f_left);
    const double vx = updated[1] / updated[0];
    const double vy = updated[2] / updated[0];
    return (g.gamma - 1.0) *
           (updated[3] - 0.5 * updated[0] * (vx * vx + vy * vy));
  };

  const SurfaceScheme sd = *surface_scheme_from_name("ch1+sd");
  const SurfaceScheme md = *surface_scheme_from_name("ch1+md");
  const SurfaceScheme llf = *surface_scheme_from_name("ch1+llf");

  SweepData data;
  for (int k = 0; k < samples; ++k) {
    const double ratio = 1e-11 * k / (samples - 1);
    data.ratio.push_back(ratio);
    data.p_sd.push_back(step_pressure(sd, ratio));
    data.p_md.push_back(step_pressure(md, ratio));
    data.p_llf.push_back(step_pressure(llf, ratio));
  }
  return data;
}

std::string sweep_to_csv(const SweepData& data) {
  std::ostringstream out;
  out << "ratio,p_sd,p_md,p_llf\n";
  char buf[160];
  for (size_t i = 0; i < data.ratio.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.9e,%.9e,%.9e,%.9e\n", data.ratio[i],
                  data.p_sd[i], data.p_md[i], data.p_llf[i]);
    out << buf;
  }
  return out.str();
}

std::string sweep_to_svg(const SweepData& data) {
  const double width = 640, height = 420, margin = 50;
  double ymin = 0.0, ymax = 0.0;
  for (size_t i = 0; i < data.ratio.size(); ++i) {
    for (double v : {data.p_sd[i], data.p_md[i], data.p_llf[i]}) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (ymax == ymin) ymax = ymin + 1.0;
  const double xmax = data.ratio.empty() ? 1.0 : data.ratio.back();
  auto px = [&](double x) { return margin + (width - 2 * margin) * x / xmax; };
  auto py = [&](double y) {
    return height - margin - (height - 2 * margin) * (y - ymin) / (ymax - ymin);
  };
  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='"
      << height << "'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  // zero line
  out << "<line x1='" << px(0) << "' y1='" << py(0) << "' x2='" << px(xmax)
      << "' y2='" << py(0) << "' stroke='black' stroke-dasharray='4 4'/>\n";
  const char* colors[3] = {"blue", "green", "red"};
  const std::vector<double>* series[3] = {&data.p_sd, &data.p_md, &data.p_llf};
  const char* labels[3] = {"sd", "md", "llf"};
  for (int s = 0; s < 3; ++s) {
    out << "<polyline fill='none' stroke='" << colors[s] << "' points='";
    for (size_t i = 0; i < data.ratio.size(); ++i)
      out << px(data.ratio[i]) << ',' << py((*series[s])[i]) << ' ';
    out << "'/>\n";
    out << "<text x='" << width - margin + 4 << "' y='" << margin + 16 * s
        << "' fill='" << colors[s] << "'>" << labels[s] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace eulerflux
