#include "flagfpt/lattices.hpp"

#include <algorithm>
#include <sstream>

#include "flagfpt/errors.hpp"

namespace flagfpt {

namespace {

void sort_canonical(std::vector<Element>& v) { std::sort(v.begin(), v.end(), canonical_less); }

/// All d-subsets of {1..n}, lexicographic.
std::vector<Element> subsets(int d, int n) {
  std::vector<Element> out;
  if (d < 0 || d > n) return out;
  Element cur(d);
  for (int i = 0; i < d; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int k = d - 1;
    while (k >= 0 && cur[k] == n - d + k + 1) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool componentwise_leq(const Element& a, const Element& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Young order: a <= b iff b is no longer than a and b dominates a's prefix.
bool young_leq(const Element& a, const Element& b) {
  if (b.size() > a.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

Element young_join(const Element& a, const Element& b) {
  const auto r = std::min(a.size(), b.size());
  Element out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

/// The meet keeps the longer length; positions past the shorter tuple are
/// copied from the longer one.
Element young_meet(const Element& a, const Element& b) {
  const Element& lng = a.size() >= b.size() ? a : b;
  const auto r = std::min(a.size(), b.size());
  Element out = lng;
  for (std::size_t i = 0; i < r; ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

/// Entries preceding a gap move up by one.
Element bump_before_gaps(const Element& x, std::size_t keep, int n) {
  Element out(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(keep));
  for (std::size_t k = 0; k < keep; ++k) {
    const bool at_max = x[k] == n;
    const bool followed = k + 1 < x.size() && x[k + 1] == x[k] + 1;
    if (!at_max && !followed) ++out[k];
  }
  return out;
}

bool is_increasing_within(const Element& x, int n) {
  if (x.empty() || x.front() < 1 || x.back() > n) return false;
  return std::adjacent_find(x.begin(), x.end(), std::greater_equal<>()) == x.end();
}

}  // namespace

bool canonical_less(const Element& a, const Element& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::string format_element(const Element& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ')';
  return os.str();
}

FinitePoset::FinitePoset(PosetKind kind, std::vector<Element> elements, Relation leq,
                         BinaryOp join, BinaryOp meet)
    : kind_(kind),
      elements_(std::move(elements)),
      leq_(std::move(leq)),
      join_(std::move(join)),
      meet_(std::move(meet)),
      cache_(std::make_unique<CoverCache>()) {
  sort_canonical(elements_);
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  cache_->slots.resize(elements_.size());
}

std::size_t FinitePoset::index_of(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end())
    throw PreconditionError("element " + format_element(x) + " is not in the poset");
  return it->second;
}

std::optional<Element> FinitePoset::least_upper_bound(const Element& a, const Element& b) const {
  std::vector<const Element*> ups;
  for (const auto& z : elements_)
    if (leq_(a, z) && leq_(b, z)) ups.push_back(&z);
  for (const auto* c : ups) {
    if (std::all_of(ups.begin(), ups.end(), [&](const Element* z) { return leq_(*c, *z); }))
      return *c;
  }
  return std::nullopt;
}

std::optional<Element> FinitePoset::greatest_lower_bound(const Element& a,
                                                         const Element& b) const {
  std::vector<const Element*> downs;
  for (const auto& z : elements_)
    if (leq_(z, a) && leq_(z, b)) downs.push_back(&z);
  for (const auto* c : downs) {
    if (std::all_of(downs.begin(), downs.end(), [&](const Element* z) { return leq_(*z, *c); }))
      return *c;
  }
  return std::nullopt;
}

Element FinitePoset::join(const Element& a, const Element& b) const {
  if (join_) return join_(a, b);
  if (auto j = least_upper_bound(a, b)) return *j;
  throw NotALatticeError("no least upper bound for " + format_element(a) + " and " +
                         format_element(b));
}

Element FinitePoset::meet(const Element& a, const Element& b) const {
  if (meet_) return meet_(a, b);
  if (auto m = greatest_lower_bound(a, b)) return *m;
  throw NotALatticeError("no greatest lower bound for " + format_element(a) + " and " +
                         format_element(b));
}

const std::vector<Element>& FinitePoset::covers(const Element& x) const {
  const auto ix = index_of(x);
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->slots[ix];
  if (!slot) {
    std::vector<const Element*> above;
    for (const auto& z : elements_)
      if (less(x, z)) above.push_back(&z);
    std::vector<Element> out;
    for (const auto* y : above) {
      const bool minimal = std::none_of(above.begin(), above.end(),
                                        [&](const Element* z) { return less(*z, *y); });
      if (minimal) out.push_back(*y);
    }
    slot = std::make_unique<const std::vector<Element>>(std::move(out));
  }
  return *slot;
}

YoungLatticeSpec make_young_spec(int n, std::vector<int> ds) {
  if (n < 2) throw PreconditionError("Young lattice requires n >= 2");
  if (ds.empty()) throw PreconditionError("Young lattice requires at least one d");
  std::sort(ds.begin(), ds.end());
  if (std::adjacent_find(ds.begin(), ds.end()) != ds.end())
    throw PreconditionError("Young lattice indices must be distinct");
  if (ds.front() < 1 || ds.back() > n - 1)
    throw PreconditionError("Young lattice indices must lie in [1, n-1]");
  return YoungLatticeSpec{n, std::move(ds)};
}

FinitePoset build_idn(int d, int n) {
  if (n < 1 || d < 1 || d > n)
    throw PreconditionError("I(d,n) requires 1 <= d <= n (got d=" + std::to_string(d) +
                            ", n=" + std::to_string(n) + ")");
  return FinitePoset(PosetKind::tuple_model, subsets(d, n), componentwise_leq,
                     [](const Element& a, const Element& b) {
                       Element out(a.size());
                       for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
                       return out;
                     },
                     [](const Element& a, const Element& b) {
                       Element out(a.size());
                       for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
                       return out;
                     });
}

FinitePoset build_young(const YoungLatticeSpec& spec) {
  const auto s = make_young_spec(spec.n, spec.ds);
  std::vector<Element> all;
  for (int d : s.ds) {
    auto block = subsets(d, s.n);
    all.insert(all.end(), block.begin(), block.end());
  }
  return FinitePoset(PosetKind::tuple_model, std::move(all), young_leq, young_join, young_meet);
}

std::vector<Element> minimal_elements(const FinitePoset& p) {
  std::vector<Element> out;
  for (const auto& x : p.elements()) {
    const bool minimal = std::none_of(p.elements().begin(), p.elements().end(),
                                      [&](const Element& z) { return p.less(z, x); });
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<Element> maximal_elements(const FinitePoset& p) {
  std::vector<Element> out;
  for (const auto& x : p.elements()) {
    const bool maximal = std::none_of(p.elements().begin(), p.elements().end(),
                                      [&](const Element& z) { return p.less(x, z); });
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<Element> covers(const FinitePoset& p, const Element& x) { return p.covers(x); }

PrincipalChain principal_chain(const FinitePoset& p) {
  const auto mins = minimal_elements(p);
  if (mins.empty()) throw NotALatticeError("empty poset has no principal chain");
  if (maximal_elements(p).size() != 1) throw NotALatticeError("poset has no top element");
  Element xi = mins.front();
  for (std::size_t i = 1; i < mins.size(); ++i) xi = p.join(xi, mins[i]);
  PrincipalChain chain;
  chain.elements.push_back(xi);
  while (true) {
    const auto& cov = p.covers(xi);
    if (cov.empty()) break;
    Element next = cov.front();
    for (std::size_t i = 1; i < cov.size(); ++i) next = p.join(next, cov[i]);
    if (!p.less(xi, next)) throw NotALatticeError("join of covers does not lie above the chain");
    chain.elements.push_back(next);
    xi = std::move(next);
  }
  return chain;
}

Element fast_successor_idn(const Element& x, int n) {
  const int d = static_cast<int>(x.size());
  if (d < 1 || !is_increasing_within(x, n))
    throw PreconditionError(format_element(x) + " is not an element of I(d," +
                            std::to_string(n) + ")");
  if (x.front() == n - d + 1)
    throw PreconditionError(format_element(x) + " is the maximal element of I(d,n)");
  return bump_before_gaps(x, x.size(), n);
}

Element fast_successor_young(const Element& x, const YoungLatticeSpec& spec) {
  const auto s = make_young_spec(spec.n, spec.ds);
  const int n = s.n;
  const int len = static_cast<int>(x.size());
  auto block = std::find(s.ds.begin(), s.ds.end(), len);
  if (block == s.ds.end() || !is_increasing_within(x, n))
    throw PreconditionError(format_element(x) + " is not an element of H_Q");
  if (block != s.ds.begin()) {
    const int shorter = *std::prev(block);
    // Tail pinned at (n-len+shorter+1, ..., n) opens the step into I(shorter, n).
    if (x[shorter] == n - len + shorter + 1) return bump_before_gaps(x, shorter, n);
  } else if (x.front() == n - len + 1) {
    throw PreconditionError(format_element(x) + " is the maximal element of H_Q");
  }
  return bump_before_gaps(x, x.size(), n);
}

bool has_minuscule_tuple_model(const RootSystemType& type, int d) {
  switch (type.family) {
    case Family::A: return d >= 1 && d <= type.rank;
    case Family::B: return d == type.rank;
    case Family::D: return d == type.rank || d == type.rank - 1;
    default: return false;
  }
}

FinitePoset build_minuscule_tuple(const RootSystemType& type, int d) {
  const auto t = make_root_system_type(type.family, type.rank);
  if (!has_minuscule_tuple_model(t, d))
    throw PreconditionError("no tuple model for " + t.label() + " varpi_" + std::to_string(d) +
                            "; use the weight-poset model");
  const int r = t.rank;
  if (t.family == Family::A) return build_idn(d, r + 1);

  std::vector<Element> kept;
  if (t.family == Family::B) {
    // B_r(varpi_r) is the B_{n-1}(varpi_{n-1}) model with n = r + 1: tuples in
    // I(r, 2r+2) meeting each pair {j, 2r+2-j}, 1 <= j <= r, exactly once.
    for (auto& x : subsets(r, 2 * r + 2)) {
      bool ok = true;
      for (int j = 1; j <= r && ok; ++j) {
        const int hits = std::count(x.begin(), x.end(), j) +
                         std::count(x.begin(), x.end(), 2 * r + 2 - j);
        ok = hits == 1;
      }
      if (ok) kept.push_back(std::move(x));
    }
  } else {
    // D_r(varpi_r): tuples in I(r, 2r) meeting each pair {j, 2r+1-j} once,
    // with an even number of entries above r. D_r(varpi_{r-1}) is isomorphic.
    for (auto& x : subsets(r, 2 * r)) {
      bool ok = true;
      for (int j = 1; j <= r && ok; ++j) {
        const int hits = std::count(x.begin(), x.end(), j) +
                         std::count(x.begin(), x.end(), 2 * r + 1 - j);
        ok = hits == 1;
      }
      const auto high = std::count_if(x.begin(), x.end(), [r](int v) { return v > r; });
      if (ok && high % 2 == 0) kept.push_back(std::move(x));
    }
  }
  return FinitePoset(PosetKind::tuple_model, std::move(kept), componentwise_leq);
}

FinitePoset build_minuscule_weightposet(const RootSystem& rs, int d) {
  auto orbit = weyl_orbit(rs, d);
  std::vector<Element> elements;
  std::map<Element, std::vector<Rational>> root_coords;
  for (auto& w : orbit) {
    root_coords.emplace(w.coeffs, rs.to_root_coords(w));
    elements.push_back(std::move(w.coeffs));
  }
  auto leq = [coords = std::move(root_coords)](const Element& a, const Element& b) {
    const auto& ca = coords.at(a);
    const auto& cb = coords.at(b);
    for (std::size_t j = 0; j < ca.size(); ++j) {
      const Rational diff = cb[j] - ca[j];
      if (diff < Rational(0) || diff.denominator() != 1) return false;
    }
    return true;
  };
  return FinitePoset(PosetKind::weight_model, std::move(elements), std::move(leq));
}

}  // namespace flagfpt
