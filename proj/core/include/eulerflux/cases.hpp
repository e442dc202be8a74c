#ifndef EULERFLUX_CASES_HPP
#define EULERFLUX_CASES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eulerflux/semidisc.hpp"

namespace eulerflux {

enum class ReferenceKind { ExactRiemann, AdvectedInitial, None };

/// One benchmark configuration: either a 1D Riemann problem given by two
/// primitive states and an interface position, or the 2D vortex field.
struct TestCase {
  std::string name;
  int dimension{1};
  double gamma{1.4};
  double x_min{0.0}, x_max{1.0};
  double y_min{0.0}, y_max{1.0};
  double t_final{0.0};
  // Riemann data (1D cases)
  PrimitiveState left{}, right{};
  double x0{0.0};
  ReferenceKind reference{ReferenceKind::ExactRiemann};
  BoundaryKind boundary{BoundaryKind::WeakDirichlet};
  // step policies: fixed step counts where the tables state them, CFL
  // otherwise
  StepPolicy policy_dgsem{0, 0.45};
  StepPolicy policy_fv{0, 0.45};

  std::function<PrimitiveState(double, double)> initial_condition() const;
  std::function<double(double, double)> reference_density(double time) const;
};

const std::vector<TestCase>& case_registry();
std::optional<TestCase> find_case(std::string_view name);

/// Runs a registered case with the given scheme on `elements` cells per axis;
/// a zero policy in the config picks the case default for the scheme's degree.
RunResult run_case(const TestCase& tc, SchemeConfig scheme, int elements,
                   std::optional<double> gamma_override = std::nullopt);

}  // namespace eulerflux

#endif
