#pragma once

// F-pure thresholds and a-invariants of coordinate rings of G/Q.
//
// Every value is exact. The dispatcher runs each applicable method and
// refuses to return when two of them disagree.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagfpt/rational.hpp"
#include "flagfpt/root_system.hpp"

namespace flagfpt {

enum class Method {
  chain,         // principal-chain length of an ASL lattice
  root_sum,      // coefficient of 2 rho_I in the fundamental-weight basis
  closed_form,   // type-A flag formula, polynomial-ring dimension, 2/m law
  veronese,      // division by the Veronese degree
  hypersurface,  // quadric hypersurface for D_n / P_1
};

std::string_view to_string(Method m);

enum class WeightKind {
  natural,               // Pluecker / multi-homogeneous embedding
  fundamental_multiple,  // m * varpi_d on a maximal parabolic
  rho_multiple,          // m * rho_I on a non-maximal parabolic
};

struct WeightSpec {
  WeightKind kind = WeightKind::natural;
  int multiple = 1;
};

struct FlagQuery {
  RootSystemType type;
  ParabolicSpec parab;
  WeightSpec weight;
};

/// Validates the rank, the removed-set and the weight shape.
FlagQuery make_query(RootSystemType type, std::vector<int> removed, WeightSpec weight = {});

struct FptResult {
  Rational fpt;
  /// Present only in Gorenstein cases, where a = -fpt.
  std::optional<Rational> a_invariant;
  bool gorenstein = false;
  bool f_pure = true;
  Rational lct;
  std::vector<Method> methods;
  std::map<Method, Rational> witnesses;
  std::vector<std::string> notes;
};

enum class EvalMode { strict, fast };

/// sum_{i=2}^{r+1} (d_i - d_{i-2}) with d_0 = 0 and d_{r+1} = n.
int fpt_typeA_flag_formula(int n, std::span<const int> ds);

/// Principal-chain length of the ASL lattice: H_Q in type A, the minuscule
/// lattice for other minuscule Grassmannians. Natural embedding only.
/// Throws MethodUnavailable when no lattice model applies.
int fpt_chain_method(const FlagQuery& q);

/// The nonzero coefficient of 2 rho_I for a maximal parabolic.
/// Throws MethodUnavailable for non-maximal parabolics.
int fpt_root_method(const FlagQuery& q);

/// a(R_1) = a(S) + deg f = -2n + 2 for the quadric D_n / P_1.
int fpt_hypersurface_Dn_d1(int rank);

/// fpt of R_{m varpi_d} = -a(R_d) / m; Gorenstein iff m | a(R_d).
FptResult fpt_veronese(const FlagQuery& q, EvalMode mode = EvalMode::strict);

/// fpt of R_{m rho_I} = 2 / m on a non-maximal parabolic.
FptResult fpt_rho_multiple(const FlagQuery& q);

/// Runs every applicable method (strict) or the cheapest one (fast), checks
/// that they agree and assembles the result. Throws DisagreementError with all
/// witnesses when two methods differ, PreconditionError when no method covers
/// the query.
FptResult evaluate(const FlagQuery& q, EvalMode mode = EvalMode::strict);

// --- Tables -----------------------------------------------------------------

struct Table1Cell {
  int n = 0;  // family parameter as printed in the table
  RootSystemType type;
  int d = 0;
  Rational expected;  // the table formula evaluated at n
  FptResult result;
};

struct Table1Row {
  std::string family;         // "A_{n-1}"
  std::string weight_indices; // "1,...,n-1"
  std::string grassmannian;   // "SL_n/P_d"
  std::string formula;        // "n"
  std::vector<Table1Cell> cells;
};

/// Minuscule Grassmannians. Family rows are evaluated for every family
/// parameter n from its smallest valid value up to `rank_bound`.
std::vector<Table1Row> table1(int rank_bound, EvalMode mode = EvalMode::strict);

struct Table2Row {
  RootSystemType type;
  std::vector<int> indices;
  std::vector<int> values;
};

/// Exceptional Grassmannians; every value computed by root summation.
std::vector<Table2Row> table2();

}  // namespace flagfpt
