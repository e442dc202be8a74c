#ifndef EULERFLUX_VERIFY_HPP
#define EULERFLUX_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerflux {

struct CriterionResult {
  int id{0};
  std::string name;
  bool pass{false};
  std::string detail;
};

/// Runs the verification suite: flux certificates, operator identities,
/// semidiscrete entropy/order/positivity checks, and the benchmark table
/// reproductions. `include_slow` adds the shock-tube and vortex table checks.
std::vector<CriterionResult> run_verification(bool include_slow = true);

/// One "PASS criterion k: ..." / "FAIL criterion k: ..." line per entry.
void print_verification(std::ostream& out, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace eulerflux

#endif
