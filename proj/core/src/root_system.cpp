#include "flagfpt/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "flagfpt/errors.hpp"

namespace flagfpt {

namespace {

std::string rank_error(const std::string& constraint, int rank) {
  std::ostringstream os;
  os << "invalid rank " << rank << ": " << constraint;
  return os.str();
}

void link(std::vector<int>& a, int rank, int i, int j, int aij, int aji) {
  a[(i - 1) * rank + (j - 1)] = aij;
  a[(j - 1) * rank + (i - 1)] = aji;
}

std::vector<Rational> invert(const CartanMatrix& cartan) {
  const int n = cartan.rank();
  const int w = 2 * n;
  std::vector<Rational> m(static_cast<std::size_t>(n) * w, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i * w + j] = cartan.at(i + 1, j + 1);
    m[i * w + n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot * w + col] == Rational(0)) ++pivot;
    if (pivot == n) throw PreconditionError("Cartan matrix is singular");
    if (pivot != col) {
      for (int k = 0; k < w; ++k) std::swap(m[pivot * w + k], m[col * w + k]);
    }
    const Rational p = m[col * w + col];
    for (int k = 0; k < w; ++k) m[col * w + k] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r * w + col] == Rational(0)) continue;
      const Rational f = m[r * w + col];
      for (int k = 0; k < w; ++k) m[r * w + k] -= f * m[col * w + k];
    }
  }
  std::vector<Rational> inv(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i * n + j] = m[i * w + n + j];
  return inv;
}

}  // namespace

std::string RootSystemType::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

RootSystemType make_root_system_type(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw PreconditionError(rank_error("type A requires rank >= 1", rank));
      break;
    case Family::B:
      if (rank < 2) throw PreconditionError(rank_error("type B requires rank >= 2", rank));
      break;
    case Family::C:
      if (rank < 2) throw PreconditionError(rank_error("type C requires rank >= 2", rank));
      break;
    case Family::D:
      if (rank < 3) throw PreconditionError(rank_error("type D requires rank >= 3", rank));
      break;
    case Family::E:
      if (rank < 6 || rank > 8)
        throw PreconditionError(rank_error("type E requires rank 6, 7 or 8", rank));
      break;
    case Family::F:
      if (rank != 4) throw PreconditionError(rank_error("type F requires rank 4", rank));
      break;
    case Family::G:
      if (rank != 2) throw PreconditionError(rank_error("type G requires rank 2", rank));
      break;
    default:
      throw PreconditionError("unknown root system family");
  }
  return RootSystemType{family, rank};
}

RootSystemType make_root_system_type(char family, int rank) {
  switch (family) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return make_root_system_type(static_cast<Family>(family), rank);
    default:
      throw PreconditionError(std::string("unknown root system family '") + family +
                              "' (expected one of A,B,C,D,E,F,G)");
  }
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

std::strong_ordering operator<=>(const Root& a, const Root& b) {
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  return a.coords <=> b.coords;
}

CartanMatrix::CartanMatrix(int rank, std::vector<int> row_major)
    : rank_(rank), entries_(std::move(row_major)) {
  if (rank_ < 1 || entries_.size() != static_cast<std::size_t>(rank_) * rank_)
    throw PreconditionError("Cartan matrix has the wrong shape");
  for (int i = 1; i <= rank_; ++i) {
    if (at(i, i) != 2) throw PreconditionError("Cartan matrix diagonal must be 2");
    for (int j = 1; j <= rank_; ++j) {
      if (i == j) continue;
      if (at(i, j) > 0) throw PreconditionError("Cartan matrix off-diagonal must be <= 0");
      if ((at(i, j) == 0) != (at(j, i) == 0))
        throw PreconditionError("Cartan matrix zero pattern must be symmetric");
    }
  }
}

bool ParabolicSpec::is_removed(int i) const {
  return std::binary_search(removed.begin(), removed.end(), i);
}

ParabolicSpec make_parabolic(int rank, std::vector<int> removed) {
  if (removed.empty()) throw PreconditionError("removed-set must be nonempty (Q != G)");
  std::sort(removed.begin(), removed.end());
  if (std::adjacent_find(removed.begin(), removed.end()) != removed.end())
    throw PreconditionError("removed-set has a repeated index");
  if (removed.front() < 1 || removed.back() > rank)
    throw PreconditionError("removed index out of range 1.." + std::to_string(rank));
  return ParabolicSpec{std::move(removed)};
}

CartanMatrix cartan_matrix(const RootSystemType& type) {
  const auto t = make_root_system_type(type.family, type.rank);
  const int n = t.rank;
  std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) a[i * n + i] = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(a, n, i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) link(a, n, i, i + 1, -1, -1);
      // alpha_n short: <alpha_n, alpha_{n-1}^vee> = -1, <alpha_{n-1}, alpha_n^vee> = -2
      link(a, n, n - 1, n, -1, -2);
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) link(a, n, i, i + 1, -1, -1);
      link(a, n, n - 1, n, -2, -1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(a, n, i, i + 1, -1, -1);
      link(a, n, n - 2, n, -1, -1);
      break;
    case Family::E:
      link(a, n, 1, 3, -1, -1);
      link(a, n, 2, 4, -1, -1);
      for (int i = 3; i < n; ++i) link(a, n, i, i + 1, -1, -1);
      break;
    case Family::F:
      link(a, n, 1, 2, -1, -1);
      link(a, n, 2, 3, -1, -2);
      link(a, n, 3, 4, -1, -1);
      break;
    case Family::G:
      link(a, n, 1, 2, -3, -1);
      break;
  }
  return CartanMatrix(n, std::move(a));
}

std::vector<Root> enumerate_positive_roots(const CartanMatrix& cartan) {
  const int n = cartan.rank();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(std::move(e));
  }
  std::vector<Root> out;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      out.push_back(Root{beta});
      for (int i = 1; i <= n; ++i) {
        // Length of the alpha_i-string below beta.
        int down = 0;
        for (auto probe = beta;;) {
          --probe[i - 1];
          if (!known.contains(probe)) break;
          ++down;
        }
        int p = 0;
        for (int j = 1; j <= n; ++j) p += beta[j - 1] * cartan.at(i, j);
        if (down - p > 0) {
          auto up = beta;
          ++up[i - 1];
          next.insert(std::move(up));
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootSystem::RootSystem(RootSystemType type)
    : type_(make_root_system_type(type.family, type.rank)),
      cartan_(cartan_matrix(type_)),
      positive_roots_(enumerate_positive_roots(cartan_)),
      inverse_cartan_(invert(cartan_)) {}

std::vector<Rational> RootSystem::to_root_coords(const WeightVector& w) const {
  const int n = rank();
  if (static_cast<int>(w.coeffs.size()) != n) throw PreconditionError("weight has wrong length");
  std::vector<Rational> c(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i] += inverse_cartan_[i * n + j] * w.coeffs[j];
  return c;
}

WeightVector RootSystem::simple_root_as_weight(int i) const {
  if (i < 1 || i > rank()) throw PreconditionError("simple index out of range");
  WeightVector w{std::vector<int>(rank())};
  for (int j = 1; j <= rank(); ++j) w.coeffs[j - 1] = cartan_.at(j, i);
  return w;
}

int pairing(const RootSystem& rs, std::span<const int> coords, int i) {
  const int n = rs.rank();
  if (i < 1 || i > n)
    throw PreconditionError("simple index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n));
  if (static_cast<int>(coords.size()) != n) throw PreconditionError("root has wrong length");
  int s = 0;
  for (int j = 1; j <= n; ++j) s += coords[j - 1] * rs.cartan().at(i, j);
  return s;
}

std::vector<Root> levi_roots(const RootSystem& rs, const ParabolicSpec& parab) {
  std::vector<Root> out;
  for (const auto& r : rs.positive_roots()) {
    bool inside = true;
    for (int d : parab.removed) inside = inside && r.coords[d - 1] == 0;
    if (inside) out.push_back(r);
  }
  return out;
}

WeightVector two_rho_I(const RootSystem& rs, const ParabolicSpec& parab) {
  const int n = rs.rank();
  std::vector<int> sum(n, 0);
  for (const auto& r : rs.positive_roots()) {
    bool in_levi = true;
    for (int d : parab.removed) in_levi = in_levi && r.coords[d - 1] == 0;
    if (in_levi) continue;
    for (int j = 0; j < n; ++j) sum[j] += r.coords[j];
  }
  WeightVector w{std::vector<int>(n)};
  for (int i = 1; i <= n; ++i) w.coeffs[i - 1] = pairing(rs, sum, i);
  return w;
}

std::vector<int> minuscule_indices(const RootSystemType& type) {
  const auto t = make_root_system_type(type.family, type.rank);
  const int n = t.rank;
  switch (t.family) {
    case Family::A: {
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 1);
      return all;
    }
    case Family::B: return {n};
    case Family::C: return {1};
    case Family::D: return {1, n - 1, n};
    case Family::E:
      if (n == 6) return {1, 6};
      if (n == 7) return {7};
      return {};
    default: return {};
  }
}

bool is_minuscule(const RootSystemType& type, int d) {
  const auto idx = minuscule_indices(type);
  return std::find(idx.begin(), idx.end(), d) != idx.end();
}

WeightVector reflect(const RootSystem& rs, const WeightVector& w, int i) {
  const int c = w.coeffs.at(i - 1);
  WeightVector out = w;
  if (c == 0) return out;
  for (int j = 1; j <= rs.rank(); ++j) out.coeffs[j - 1] -= c * rs.cartan().at(j, i);
  return out;
}

std::vector<WeightVector> weyl_orbit(const RootSystem& rs, int d) {
  if (d < 1 || d > rs.rank())
    throw PreconditionError("weight index " + std::to_string(d) + " out of range");
  if (!is_minuscule(rs.type(), d))
    throw PreconditionError("varpi_" + std::to_string(d) + " is not minuscule for " +
                            rs.type().label());
  WeightVector start{std::vector<int>(rs.rank(), 0)};
  start.coeffs[d - 1] = 1;
  std::set<WeightVector> seen{start};
  std::deque<WeightVector> queue{start};
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      auto r = reflect(rs, w, i);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace flagfpt
