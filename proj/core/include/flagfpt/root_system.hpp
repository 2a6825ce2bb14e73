#pragma once

// Irreducible root systems in simple-root coordinates.
//
// Conventions used throughout the library:
//
//   * Simple roots are numbered 1..rank following Bourbaki. Every public
//     function that takes a "simple index" expects this 1-based label.
//   * The Cartan matrix stores A(i, j) = <alpha_j, alpha_i^vee>: the column
//     names the root, the row names the coroot. All pairings go through
//     pairing() below, which applies this convention.
//   * Roots are integer vectors c with beta = sum_j c_j alpha_j.
//   * Weights are integer vectors n with lambda = sum_i n_i varpi_i, where
//     n_i = <lambda, alpha_i^vee>.
//
// Dynkin diagrams (Bourbaki labels, '>' points from long to short):
//
//   A_n   1 - 2 - ... - n
//   B_n   1 - 2 - ... - (n-1) => n          alpha_n short
//   C_n   1 - 2 - ... - (n-1) <= n          alpha_n long
//   D_n   1 - 2 - ... - (n-2) - (n-1)
//                           |
//                           n
//   E_n   1 - 3 - 4 - 5 - ... - n
//               |
//               2
//   F_4   1 - 2 => 3 - 4                   alpha_1, alpha_2 long
//   G_2   1 <= 2                           alpha_2 long

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "flagfpt/rational.hpp"

namespace flagfpt {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  /// "E8", "A3", ...
  std::string label() const;
  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

/// Validates the rank against the family (A>=1, B>=2, C>=2, D>=3,
/// E in {6,7,8}, F=4, G=2). Throws PreconditionError naming the constraint.
RootSystemType make_root_system_type(Family family, int rank);
RootSystemType make_root_system_type(char family, int rank);

struct Root {
  std::vector<int> coords;

  int height() const;
  /// Ascending height, then lexicographic coordinates.
  friend std::strong_ordering operator<=>(const Root& a, const Root& b);
  friend bool operator==(const Root&, const Root&) = default;
};

struct WeightVector {
  std::vector<int> coeffs;

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

class CartanMatrix {
 public:
  CartanMatrix() = default;
  CartanMatrix(int rank, std::vector<int> row_major);

  int rank() const { return rank_; }
  /// 1-based: at(i, j) = <alpha_j, alpha_i^vee>.
  int at(int i, int j) const { return entries_[(i - 1) * rank_ + (j - 1)]; }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  int rank_ = 0;
  std::vector<int> entries_;
};

/// The simple roots removed from Delta; Q = Q_I with I the complement.
struct ParabolicSpec {
  std::vector<int> removed;  // sorted, distinct, 1-based

  bool is_maximal() const { return removed.size() == 1; }
  bool is_removed(int i) const;
};

/// Sorts and validates a removed-set against the rank.
ParabolicSpec make_parabolic(int rank, std::vector<int> removed);

class RootSystem {
 public:
  explicit RootSystem(RootSystemType type);

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  /// Simple-root coordinates of a weight, A^{-1} n. Rational in general;
  /// integral exactly when the weight lies in the root lattice.
  std::vector<Rational> to_root_coords(const WeightVector& w) const;

  /// Fundamental-weight coordinates of alpha_i (column i of the Cartan matrix).
  WeightVector simple_root_as_weight(int i) const;

 private:
  RootSystemType type_;
  CartanMatrix cartan_;
  std::vector<Root> positive_roots_;
  std::vector<Rational> inverse_cartan_;  // row-major, 0-based
};

/// Standard Cartan matrix under Bourbaki numbering.
CartanMatrix cartan_matrix(const RootSystemType& type);

/// All positive roots, generated height by height with root strings.
/// Sorted by ascending height, then lexicographically.
std::vector<Root> enumerate_positive_roots(const CartanMatrix& cartan);

/// <sum_j coords_j alpha_j, alpha_i^vee> = sum_j coords_j A(i, j).
int pairing(const RootSystem& rs, std::span<const int> coords, int i);

/// Positive roots of Phi_I: those supported inside I.
std::vector<Root> levi_roots(const RootSystem& rs, const ParabolicSpec& parab);

/// Sum of Phi^+ \ Phi_I, in the fundamental-weight basis.
WeightVector two_rho_I(const RootSystem& rs, const ParabolicSpec& parab);

/// Indices d with varpi_d minuscule (ascending).
std::vector<int> minuscule_indices(const RootSystemType& type);
bool is_minuscule(const RootSystemType& type, int d);

/// W-orbit of varpi_d by closure under simple reflections, sorted.
/// d must be minuscule.
std::vector<WeightVector> weyl_orbit(const RootSystem& rs, int d);

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
WeightVector reflect(const RootSystem& rs, const WeightVector& w, int i);

}  // namespace flagfpt
