#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagfpt/fpt_engine.hpp"
#include "flagfpt/lattices.hpp"

namespace flagfpt::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kPreconditionViolation = 3,
  kInternalDisagreement = 4,
};

inline constexpr int kJsonSchemaVersion = 1;

/// Entry point shared by main() and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reports ---------------------------------------------------------------------

nlohmann::json rational_json(const Rational& q);
nlohmann::json report_json(const FlagQuery& q, const FptResult& r, EvalMode mode,
                           double evaluate_us);
std::string report_text(const FlagQuery& q, const FptResult& r);

// Tables ----------------------------------------------------------------------

std::string render_table1(const std::vector<Table1Row>& rows);
nlohmann::json table1_json(const std::vector<Table1Row>& rows, int rank_bound);
std::string render_table2(const std::vector<Table2Row>& rows);
nlohmann::json table2_json(const std::vector<Table2Row>& rows);
std::vector<Table2Row> table2_from_json(const nlohmann::json& j);

// Hasse diagrams ----------------------------------------------------------------

/// DOT digraph: one node per element in canonical order, one edge per cover
/// relation pointing upward, principal-chain nodes filled.
std::string hasse_dot(const FinitePoset& p, const std::string& title);

// Self-test ---------------------------------------------------------------------

/// Exceptional-type values keyed by type label ("G2", "E8", ...).
nlohmann::json default_golden_fixture();

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;
};

struct SelftestOptions {
  int max_rank = 8;
  std::optional<nlohmann::json> fixture;
};

std::vector<CheckOutcome> selftest(const SelftestOptions& options);

}  // namespace flagfpt::cli
