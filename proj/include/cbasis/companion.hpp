#pragma once

// Companion bases: verification against a quiver, quasi-Cartan companions,
// companion basis mutation, and dimension vectors read off a basis.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cbasis/quiver.hpp"
#include "cbasis/root_lattice.hpp"

namespace cbasis {

/// One root per quiver vertex, indexed by vertex id.
struct CompanionBasis {
  CartanType type = CartanType::A(1);
  std::vector<Root> roots;

  const Root& operator[](Vertex v) const { return roots.at(v); }
  std::size_t size() const { return roots.size(); }
  friend bool operator==(const CompanionBasis&, const CompanionBasis&) = default;
};

/// Simple system of the given type as a basis on vertex ids 0..n-1.
CompanionBasis simple_system(const CartanType& t);

/// Symmetric integer matrix with every diagonal entry 2.
struct QuasiCartan {
  IntMatrix a;
};

/// Matrix of inner products of the basis. Throws std::invalid_argument if
/// an entry is not a root.
QuasiCartan quasi_cartan_of(const CompanionBasis& basis);

/// Positive definiteness via exact leading principal minors.
bool is_positive(const QuasiCartan& m);

struct VerificationFailure {
  std::string check;  // "size", "root", "z_basis" or "edges"
  Vertex x = -1;
  Vertex y = -1;
  Int expected = 0;
  Int got = 0;
  std::string message;
};

/// Passes iff every entry is a root, the entries form a Z-basis of the root
/// lattice, and |(g_x, g_y)| equals the number of edges between x and y.
std::optional<VerificationFailure> verify(const Quiver& q, const CompanionBasis& basis);

enum class BasisMutation { inward, outward };

/// Thrown when mutate_basis is handed a basis that does not verify.
class UnverifiedBasisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inward: reflect g_x in g_k for every arrow x -> k. Outward: for every
/// arrow k -> x. The result is a companion basis for mutate(q, k).
CompanionBasis mutate_basis(const Quiver& q, const CompanionBasis& basis, Vertex k,
                            BasisMutation direction);

/// Same as mutate_basis without re-verifying the input.
CompanionBasis mutate_basis_unchecked(const Quiver& q, const CompanionBasis& basis, Vertex k,
                                      BasisMutation direction);

using DimensionVector = std::vector<Int>;

/// For each positive root, its coordinates in the basis with every entry
/// replaced by its absolute value. Indexed by vertex id.
std::set<DimensionVector> dimension_vectors(const Quiver& q, const CompanionBasis& basis);

/// Vertex-indicator vectors of all strings (trivial ones included).
/// Throws std::invalid_argument unless q is of mutation type A.
std::set<DimensionVector> strings_oracle(const Quiver& q);

/// Same enumeration for any simply-laced quiver, using the oriented
/// 3-cycles as the only zero relations.
std::set<DimensionVector> string_indicator_vectors(const Quiver& q);

std::string to_string(BasisMutation d);
BasisMutation basis_mutation_from_string(const std::string& s);

}  // namespace cbasis
