#pragma once

// Root systems of types A_n and D_n in simple-root coordinates.
//
// A root is stored as its coefficient vector over the simple roots, with
// index 0 holding the coefficient of alpha_1. For D_n the last two simple
// roots alpha_{n-1} and alpha_n form the fork: both are attached to
// alpha_{n-2} and orthogonal to each other.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cbasis/exact.hpp"

namespace cbasis {

enum class Family { A, D };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

class CartanType {
 public:
  /// Throws std::invalid_argument for rank < 1 (A) or rank < 4 (D).
  CartanType(Family family, int rank);

  static CartanType A(int rank) { return {Family::A, rank}; }
  static CartanType D(int rank) { return {Family::D, rank}; }

  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// Dynkin diagram edges as 0-based index pairs (i < j).
  std::vector<std::pair<int, int>> dynkin_edges() const;

  std::string name() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  Family family_;
  int rank_;
};

using Root = std::vector<Int>;

/// alpha_i for a 1-based simple-root index i.
Root simple_root(int rank, int i);

/// alpha_first + ... + alpha_last (1-based, inclusive). Empty ranges give zero.
Root simple_root_sum(int rank, int first, int last);

Root operator+(const Root& u, const Root& v);
Root operator-(const Root& u, const Root& v);
Root operator*(Int c, const Root& v);

IntMatrix gram_matrix(const CartanType& t);

/// Symmetric bilinear form (u, v) in simple-root coordinates.
Int inner(const CartanType& t, std::span<const Int> u, std::span<const Int> v);

inline Int norm(const CartanType& t, std::span<const Int> v) { return inner(t, v, v); }

/// Reflection s_mirror(v) = v - (v, mirror) mirror. Throws if mirror is not a root.
Root reflect(const CartanType& t, std::span<const Int> mirror, std::span<const Int> v);

/// Norm-2 test; in a simply-laced root lattice these are exactly the roots.
bool is_root(const CartanType& t, std::span<const Int> v);

/// All positive roots, ordered by height and then lexicographically.
std::vector<Root> positive_roots(const CartanType& t);

/// Determinant of the matrix whose rows are the given vectors.
Int coefficient_determinant(const CartanType& t, std::span<const Root> vs);

/// True iff the n vectors span the root lattice over Z (determinant +-1).
/// Throws std::invalid_argument unless exactly rank() vectors are given.
bool is_z_basis(const CartanType& t, std::span<const Root> vs);

std::string format_root(std::span<const Int> v);

}  // namespace cbasis
