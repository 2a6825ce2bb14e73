#pragma once

// Finite posets and distributive lattices behind the ASL structures:
// I(d,n), the Young lattices H_Q, and the minuscule lattices (tuple models
// and the general weight-poset model).

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "flagfpt/root_system.hpp"

namespace flagfpt {

/// A poset element. Tuple models store the strictly increasing tuple;
/// weight models store fundamental-weight coordinates.
using Element = std::vector<int>;

/// Canonical order for reproducible output: longer first, then lexicographic.
bool canonical_less(const Element& a, const Element& b);

enum class PosetKind { tuple_model, weight_model };

class FinitePoset {
 public:
  using Relation = std::function<bool(const Element&, const Element&)>;
  using BinaryOp = std::function<Element(const Element&, const Element&)>;

  /// `leq` must be a partial order on `elements`. When `join`/`meet` are
  /// omitted the generic bound search is used.
  FinitePoset(PosetKind kind, std::vector<Element> elements, Relation leq,
              BinaryOp join = {}, BinaryOp meet = {});

  FinitePoset(FinitePoset&&) = default;
  FinitePoset& operator=(FinitePoset&&) = default;

  PosetKind kind() const { return kind_; }
  std::size_t size() const { return elements_.size(); }
  /// Elements in canonical order.
  const std::vector<Element>& elements() const { return elements_; }
  bool contains(const Element& x) const { return index_.contains(x); }
  std::size_t index_of(const Element& x) const;

  bool leq(const Element& a, const Element& b) const { return leq_(a, b); }
  bool less(const Element& a, const Element& b) const { return a != b && leq_(a, b); }

  /// Least upper bound found by search over the element list; nullopt when
  /// the upper bounds have no least member.
  std::optional<Element> least_upper_bound(const Element& a, const Element& b) const;
  std::optional<Element> greatest_lower_bound(const Element& a, const Element& b) const;

  /// Closed-form operation when the model supplies one, else the search.
  /// Throws NotALatticeError when the bound does not exist.
  Element join(const Element& a, const Element& b) const;
  Element meet(const Element& a, const Element& b) const;
  bool has_native_join() const { return static_cast<bool>(join_); }

  /// Minimal strict upper bounds of x, canonical order. Memoized; safe to
  /// call concurrently.
  const std::vector<Element>& covers(const Element& x) const;

 private:
  struct CoverCache {
    std::mutex mutex;
    std::vector<std::unique_ptr<const std::vector<Element>>> slots;
  };

  PosetKind kind_;
  std::vector<Element> elements_;
  std::map<Element, std::size_t> index_;
  Relation leq_;
  BinaryOp join_;
  BinaryOp meet_;
  std::unique_ptr<CoverCache> cache_;
};

struct YoungLatticeSpec {
  int n = 0;
  std::vector<int> ds;  // strictly increasing, each in [1, n-1]
};

YoungLatticeSpec make_young_spec(int n, std::vector<int> ds);

/// Chain xi_1 < ... < xi_m built by joining all covers, starting from the
/// join of the minimal elements.
struct PrincipalChain {
  std::vector<Element> elements;
  std::size_t length() const { return elements.size(); }
};

/// I(d,n): all d-subsets of {1..n} as increasing tuples, componentwise order.
FinitePoset build_idn(int d, int n);

/// H_Q: union of I(d_i,n); shorter tuples sit above longer ones.
FinitePoset build_young(const YoungLatticeSpec& spec);

std::vector<Element> minimal_elements(const FinitePoset& p);
std::vector<Element> maximal_elements(const FinitePoset& p);

/// Copy of p.covers(x); throws PreconditionError if x is not in p.
std::vector<Element> covers(const FinitePoset& p, const Element& x);

/// Throws NotALatticeError if some join along the way is undefined or the
/// poset has no top element.
PrincipalChain principal_chain(const FinitePoset& p);

/// One principal-chain step in I(d,n): add 1 to every entry preceding a gap.
Element fast_successor_idn(const Element& x, int n);

/// One principal-chain step in H_Q, including the block transition that
/// truncates a tuple whose tail sits at its maximum.
Element fast_successor_young(const Element& x, const YoungLatticeSpec& spec);

/// Tuple model of the minuscule lattice for varpi_d. Supported:
/// (A, any d) as I(d, rank+1); (B, d=rank); (D, d=rank); (D, d=rank-1),
/// the last one through the isomorphism with D(varpi_rank).
FinitePoset build_minuscule_tuple(const RootSystemType& type, int d);
bool has_minuscule_tuple_model(const RootSystemType& type, int d);

/// Weight-poset model: the W-orbit of varpi_d ordered by
/// lambda <= mu iff mu - lambda is a nonnegative sum of simple roots.
FinitePoset build_minuscule_weightposet(const RootSystem& rs, int d);

/// "(1,2,4)".
std::string format_element(const Element& x);

}  // namespace flagfpt
