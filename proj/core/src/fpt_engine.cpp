#include "flagfpt/fpt_engine.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "flagfpt/errors.hpp"
#include "flagfpt/lattices.hpp"

namespace flagfpt {

namespace {

std::string describe(const FlagQuery& q) {
  std::ostringstream os;
  os << q.type.label() << " removed={";
  for (std::size_t i = 0; i < q.parab.removed.size(); ++i)
    os << (i ? "," : "") << q.parab.removed[i];
  os << '}';
  return os.str();
}

FlagQuery natural(const FlagQuery& q) {
  FlagQuery base = q;
  base.weight = WeightSpec{};
  return base;
}

bool natural_embedding(const FlagQuery& q) {
  return q.weight.kind == WeightKind::natural ||
         (q.weight.kind == WeightKind::fundamental_multiple && q.weight.multiple == 1);
}

/// Closed formulas: the type-A flag formula, and dim R_1 = 2n for
/// Sp_2n / P_1 = P^{2n-1}.
int closed_form_method(const FlagQuery& q) {
  if (!natural_embedding(q)) throw MethodUnavailable("closed form needs the natural embedding");
  if (q.type.family == Family::A) return fpt_typeA_flag_formula(q.type.rank + 1, q.parab.removed);
  if (q.type.family == Family::C && q.parab.is_maximal() && q.parab.removed.front() == 1)
    return 2 * q.type.rank;
  throw MethodUnavailable("no closed form for " + describe(q));
}

int hypersurface_method(const FlagQuery& q) {
  if (!natural_embedding(q) || q.type.family != Family::D || !q.parab.is_maximal() ||
      q.parab.removed.front() != 1)
    throw MethodUnavailable("hypersurface model only covers D_n / P_1");
  return fpt_hypersurface_Dn_d1(q.type.rank);
}

void check_agreement(const FptResult& r, const FlagQuery& q) {
  for (const auto& [m, v] : r.witnesses) {
    if (v != r.fpt) {
      std::ostringstream os;
      os << "methods disagree for " << describe(q) << ":";
      for (const auto& [m2, v2] : r.witnesses) os << ' ' << to_string(m2) << '=' << to_string(v2);
      throw DisagreementError(os.str());
    }
  }
}

FptResult natural_result(const FlagQuery& q, EvalMode mode) {
  using Runner = int (*)(const FlagQuery&);
  // Cheapest first; fast mode stops at the first available method.
  const std::pair<Method, Runner> runners[] = {
      {Method::closed_form, closed_form_method},
      {Method::root_sum, fpt_root_method},
      {Method::hypersurface, hypersurface_method},
      {Method::chain, fpt_chain_method},
  };
  FptResult r;
  for (const auto& [method, run] : runners) {
    try {
      const int v = run(q);
      r.methods.push_back(method);
      r.witnesses.emplace(method, Rational(v));
    } catch (const MethodUnavailable&) {
      continue;
    }
    if (mode == EvalMode::fast) break;
  }
  if (r.methods.empty())
    throw PreconditionError("no method computes the natural embedding of " + describe(q) +
                            " (covered: type A flags and maximal parabolics)");
  r.fpt = r.witnesses.at(r.methods.front());
  check_agreement(r, q);
  r.a_invariant = -r.fpt;
  r.gorenstein = true;
  r.f_pure = true;
  r.lct = r.fpt;
  return r;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::chain: return "chain";
    case Method::root_sum: return "root-sum";
    case Method::closed_form: return "closed-form";
    case Method::veronese: return "veronese";
    case Method::hypersurface: return "hypersurface";
  }
  return "unknown";
}

FlagQuery make_query(RootSystemType type, std::vector<int> removed, WeightSpec weight) {
  FlagQuery q;
  q.type = make_root_system_type(type.family, type.rank);
  q.parab = make_parabolic(q.type.rank, std::move(removed));
  if (weight.multiple < 1)
    throw PreconditionError("weight multiple must be >= 1 (got " +
                            std::to_string(weight.multiple) + ")");
  if (weight.kind == WeightKind::fundamental_multiple && !q.parab.is_maximal())
    throw PreconditionError("m*varpi_d requires a maximal parabolic (exactly one removed index)");
  if (weight.kind == WeightKind::rho_multiple && q.parab.is_maximal())
    throw PreconditionError(
        "m*rho_I requires a non-maximal parabolic (I != Delta \\ {alpha} for every alpha)");
  q.weight = weight;
  return q;
}

int fpt_typeA_flag_formula(int n, std::span<const int> ds) {
  if (ds.empty()) throw PreconditionError("flag formula needs at least one d_i");
  std::vector<int> d{0};
  for (int v : ds) {
    if (v <= d.back() || v > n - 1)
      throw PreconditionError("d_i must be strictly increasing within [1, n-1]");
    d.push_back(v);
  }
  d.push_back(n);
  int sum = 0;
  for (std::size_t i = 2; i < d.size(); ++i) sum += d[i] - d[i - 2];
  return sum;
}

int fpt_chain_method(const FlagQuery& q) {
  if (!natural_embedding(q)) throw MethodUnavailable("chain method needs the natural embedding");
  const auto& t = q.type;
  if (t.family == Family::A) {
    const auto spec = make_young_spec(t.rank + 1, q.parab.removed);
    return static_cast<int>(principal_chain(build_young(spec)).length());
  }
  const int d = q.parab.removed.front();
  if (!q.parab.is_maximal() || !is_minuscule(t, d))
    throw MethodUnavailable("no ASL lattice model for " + describe(q));
  if (has_minuscule_tuple_model(t, d)) {
    // Type B takes the Lie rank r; the tuple model is the B_{n-1}(varpi_{n-1})
    // lattice with n = r + 1, so its chain length 2(n-1) reads as 2r.
    return static_cast<int>(principal_chain(build_minuscule_tuple(t, d)).length());
  }
  const RootSystem rs(t);
  return static_cast<int>(principal_chain(build_minuscule_weightposet(rs, d)).length());
}

int fpt_root_method(const FlagQuery& q) {
  if (!natural_embedding(q) || !q.parab.is_maximal())
    throw MethodUnavailable("root summation needs a maximal parabolic");
  const RootSystem rs(q.type);
  const auto w = two_rho_I(rs, q.parab);
  const int d = q.parab.removed.front();
  for (int i = 1; i <= rs.rank(); ++i) {
    if (i != d && w.coeffs[i - 1] != 0)
      throw DisagreementError("2 rho_I has a nonzero coefficient off the removed index for " +
                              describe(q));
  }
  return w.coeffs[d - 1];
}

int fpt_hypersurface_Dn_d1(int rank) {
  make_root_system_type(Family::D, rank);
  const int a_polynomial_ring = -2 * rank;
  const int quadric_degree = 2;
  return -(a_polynomial_ring + quadric_degree);
}

FptResult fpt_veronese(const FlagQuery& q, EvalMode mode) {
  if (!q.parab.is_maximal())
    throw PreconditionError("m*varpi_d requires a maximal parabolic (exactly one removed index)");
  const int m = q.weight.multiple;
  if (m < 1) throw PreconditionError("Veronese degree must be >= 1");
  const FptResult base = natural_result(natural(q), mode);
  const Rational minus_a = base.fpt;

  FptResult r;
  r.fpt = minus_a / m;
  r.methods = base.methods;
  for (const auto& [method, v] : base.witnesses) r.witnesses.emplace(method, v / m);
  r.methods.push_back(Method::veronese);
  r.witnesses.emplace(Method::veronese, r.fpt);
  check_agreement(r, q);
  r.gorenstein = minus_a.numerator() % m == 0;
  if (r.gorenstein) {
    r.a_invariant = -r.fpt;
  } else {
    r.notes.push_back("a-invariant not determined: " + std::to_string(m) + " does not divide a(R_d) = " +
                      to_string(-minus_a));
  }
  r.f_pure = true;
  r.lct = r.fpt;
  return r;
}

FptResult fpt_rho_multiple(const FlagQuery& q) {
  if (q.parab.is_maximal())
    throw PreconditionError(
        "m*rho_I requires a non-maximal parabolic (I != Delta \\ {alpha} for every alpha)");
  const int m = q.weight.multiple;
  if (m < 1) throw PreconditionError("rho multiple must be >= 1");
  FptResult r;
  r.fpt = Rational(2, m);
  r.methods = {Method::closed_form};
  r.witnesses.emplace(Method::closed_form, r.fpt);
  r.gorenstein = m == 1 || m == 2;
  if (is_integral(r.fpt)) r.a_invariant = -r.fpt;
  else r.notes.push_back("a-invariant not determined for a non-Gorenstein R_lambda");

  const RootSystem rs(q.type);
  const auto two_rho = two_rho_I(rs, q.parab);
  const bool rho_integral = std::all_of(two_rho.coeffs.begin(), two_rho.coeffs.end(),
                                        [](int c) { return c % 2 == 0; });
  if (!rho_integral && m % 2 != 0)
    r.notes.push_back("rho_I is not an integral weight for this parabolic; m*rho_I is a weight "
                      "only for even m");
  r.f_pure = true;
  r.lct = r.fpt;
  return r;
}

FptResult evaluate(const FlagQuery& query, EvalMode mode) {
  const FlagQuery q = make_query(query.type, query.parab.removed, query.weight);
  switch (q.weight.kind) {
    case WeightKind::natural: return natural_result(q, mode);
    case WeightKind::fundamental_multiple: return fpt_veronese(q, mode);
    case WeightKind::rho_multiple: return fpt_rho_multiple(q);
  }
  throw PreconditionError("unknown weight kind");
}

std::vector<Table1Row> table1(int rank_bound, EvalMode mode) {
  if (rank_bound < 2) throw PreconditionError("Table 1 needs a rank bound >= 2");
  std::vector<Table1Row> rows;

  auto family_row = [&](Table1Row row, int n_min, const std::function<RootSystemType(int)>& type_of,
                        const std::function<std::vector<int>(int)>& indices_of,
                        const std::function<int(int)>& formula) {
    for (int n = n_min; n <= rank_bound; ++n) {
      const auto t = type_of(n);
      for (int d : indices_of(n)) {
        Table1Cell cell{n, t, d, Rational(formula(n)), evaluate(make_query(t, {d}), mode)};
        row.cells.push_back(std::move(cell));
      }
    }
    rows.push_back(std::move(row));
  };

  family_row({"A_{n-1}", "1,...,n-1", "SL_n/P_d", "n", {}}, 2,
             [](int n) { return make_root_system_type(Family::A, n - 1); },
             [](int n) {
               std::vector<int> v;
               for (int d = 1; d <= n - 1; ++d) v.push_back(d);
               return v;
             },
             [](int n) { return n; });
  family_row({"B_n", "n", "SO_{2n+1}/P_d", "2n", {}}, 2,
             [](int n) { return make_root_system_type(Family::B, n); },
             [](int n) { return std::vector<int>{n}; }, [](int n) { return 2 * n; });
  family_row({"C_n", "1", "Sp_{2n}/P_d", "2n", {}}, 2,
             [](int n) { return make_root_system_type(Family::C, n); },
             [](int) { return std::vector<int>{1}; }, [](int n) { return 2 * n; });
  family_row({"D_n", "1,n-1,n", "SO_{2n}/P_d", "2(n-1)", {}}, 3,
             [](int n) { return make_root_system_type(Family::D, n); },
             [](int n) { return std::vector<int>{1, n - 1, n}; },
             [](int n) { return 2 * (n - 1); });

  auto exceptional_row = [&](Table1Row row, int rank, std::vector<int> ds, int value) {
    const auto t = make_root_system_type(Family::E, rank);
    for (int d : ds) row.cells.push_back({rank, t, d, Rational(value), evaluate(make_query(t, {d}), mode)});
    rows.push_back(std::move(row));
  };
  exceptional_row({"E_6", "1,6", "E_6/P_d", "12", {}}, 6, {1, 6}, 12);
  exceptional_row({"E_7", "7", "E_7/P_d", "18", {}}, 7, {7}, 18);
  return rows;
}

std::vector<Table2Row> table2() {
  const std::pair<Family, int> types[] = {
      {Family::G, 2}, {Family::F, 4}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}};
  std::vector<Table2Row> rows;
  for (const auto& [family, rank] : types) {
    Table2Row row;
    row.type = make_root_system_type(family, rank);
    for (int d = 1; d <= rank; ++d) {
      row.indices.push_back(d);
      row.values.push_back(fpt_root_method(make_query(row.type, {d})));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace flagfpt
