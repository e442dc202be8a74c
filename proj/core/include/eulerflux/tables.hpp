#ifndef EULERFLUX_TABLES_HPP
#define EULERFLUX_TABLES_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eulerflux/cases.hpp"

namespace eulerflux {

/// Mass-matrix norm of the density error against a reference density field.
double error_norm(const Semidiscretization& disc, const std::vector<Vec4>& u,
                  const std::function<double(double, double)>& rho_ref);
double error_norm(const Solution& sol, const GasModel& gas,
                  const std::function<double(double, double)>& rho_ref);

struct ErrorRow {
  int p{0};
  int N{0};
  std::optional<double> error;  // empty = crashed run, printed "*"
  std::optional<double> eoc;
};

/// Fills eoc = log2(err_coarse / err_fine) where N doubles between rows of
/// equal p and both runs completed.
void annotate_eoc(std::vector<ErrorRow>& rows);

struct TableColumn {
  std::string scheme;
  std::vector<ErrorRow> rows;
};

struct Table {
  std::string id;
  std::vector<TableColumn> columns;
};

struct TableSpec {
  std::string id;
  std::string case_name;
  std::vector<std::string> schemes;  // "VOLUME/SURFACE" for DGSEM ids,
                                     // surface name for FV ids
  std::vector<int> degrees;          // {0} for FV ids
  std::vector<int> element_counts;
};

const std::vector<TableSpec>& table_registry();
std::optional<TableSpec> find_table(std::string_view id);

/// Runs all cells of a table; cells may run concurrently up to
/// EULERFLUX_THREADS workers, assembly order is fixed.
Table make_table(const TableSpec& spec, std::optional<int> max_degree = std::nullopt,
                 std::optional<int> max_elements = std::nullopt);

std::string table_to_csv(const Table& table);
std::optional<Table> table_from_csv(const std::string& csv);
std::string table_to_text(const Table& table);

/// One explicit Euler FV step on the near-vacuum pressure states for a grid
/// of dt/dx ratios; columns are the post-step pressure of the middle cell for
/// scalar, matrix, and LLF dissipation.
struct SweepData {
  std::vector<double> ratio;
  std::vector<double> p_sd, p_md, p_llf;
};

SweepData positivity_sweep(int samples = 201);
std::string sweep_to_csv(const SweepData& data);
std::string sweep_to_svg(const SweepData& data);

}  // namespace eulerflux

#endif
