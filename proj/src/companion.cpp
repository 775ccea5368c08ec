#include "cbasis/companion.hpp"

#include <stdexcept>

#include "cbasis/type_a.hpp"

namespace cbasis {

CompanionBasis simple_system(const CartanType& t) {
  CompanionBasis b{t, {}};
  for (int i = 1; i <= t.rank(); ++i) b.roots.push_back(simple_root(t.rank(), i));
  return b;
}

QuasiCartan quasi_cartan_of(const CompanionBasis& basis) {
  const std::size_t n = basis.size();
  for (std::size_t x = 0; x < n; ++x)
    if (!is_root(basis.type, basis.roots[x]))
      throw std::invalid_argument("basis entry " + std::to_string(x) + " is not a root");
  QuasiCartan m{IntMatrix(n, n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      m.a(x, y) = m.a(y, x) = inner(basis.type, basis.roots[x], basis.roots[y]);
  return m;
}

bool is_positive(const QuasiCartan& m) {
  if (!m.a.symmetric()) return false;
  for (Int d : leading_principal_minors(m.a))
    if (d <= 0) return false;
  return true;
}

std::optional<VerificationFailure> verify(const Quiver& q, const CompanionBasis& basis) {
  const int n = q.size();
  if (static_cast<int>(basis.size()) != n || basis.type.rank() != n)
    return VerificationFailure{"size", -1, -1, n, static_cast<Int>(basis.size()),
                               "basis size does not match the quiver"};
  for (Vertex x = 0; x < n; ++x) {
    if (basis.roots[x].size() != static_cast<std::size_t>(n))
      return VerificationFailure{"size", x, x, n, static_cast<Int>(basis.roots[x].size()),
                                 "root has the wrong number of coefficients"};
    if (!is_root(basis.type, basis.roots[x]))
      return VerificationFailure{"root", x, x, 2, norm(basis.type, basis.roots[x]),
                                 "basis entry is not a root"};
  }
  const Int det = coefficient_determinant(basis.type, basis.roots);
  if (det != 1 && det != -1)
    return VerificationFailure{"z_basis", -1, -1, 1, det,
                               "entries do not form a Z-basis of the root lattice"};

  // Edges of the quiver first, then orthogonality of non-adjacent pairs.
  for (int pass = 0; pass < 2; ++pass) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        const Int expected = q.edges(x, y);
        if ((pass == 0) != (expected > 0)) continue;
        Int got = inner(basis.type, basis.roots[x], basis.roots[y]);
        if (got < 0) got = -got;
        if (got != expected)
          return VerificationFailure{"edges", x, y, expected, got,
                                     "|inner product| does not match the edge count"};
      }
    }
  }
  return std::nullopt;
}

CompanionBasis mutate_basis_unchecked(const Quiver& q, const CompanionBasis& basis, Vertex k,
                                      BasisMutation direction) {
  if (!q.contains(k)) throw std::out_of_range("mutation vertex out of range");
  CompanionBasis out = basis;
  for (Vertex x = 0; x < q.size(); ++x) {
    const bool arrow = direction == BasisMutation::inward ? q(x, k) > 0 : q(k, x) > 0;
    if (arrow) out.roots[x] = reflect(basis.type, basis.roots[k], basis.roots[x]);
  }
  return out;
}

CompanionBasis mutate_basis(const Quiver& q, const CompanionBasis& basis, Vertex k,
                            BasisMutation direction) {
  if (auto f = verify(q, basis))
    throw UnverifiedBasisError("input is not a companion basis for the quiver: " + f->message);
  return mutate_basis_unchecked(q, basis, k, direction);
}

std::set<DimensionVector> dimension_vectors(const Quiver& q, const CompanionBasis& basis) {
  const std::size_t n = basis.size();
  if (static_cast<std::size_t>(q.size()) != n)
    throw std::invalid_argument("basis size does not match the quiver");
  IntMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < n; ++i) m(i, x) = basis.roots[x][i];

  std::set<DimensionVector> out;
  for (const Root& rho : positive_roots(basis.type)) {
    DimensionVector c = solve_integer(m, rho);
    for (Int& v : c) v = v < 0 ? -v : v;
    out.insert(std::move(c));
  }
  return out;
}

std::set<DimensionVector> string_indicator_vectors(const Quiver& q) {
  if (validate(q, true)) throw std::invalid_argument("strings require a valid simply-laced quiver");
  std::set<DimensionVector> out;
  const VertexMask all = full_mask(q);
  for (Vertex v = 0; v < q.size(); ++v) {
    for (const StringWalk& w : strings_from(q, v, all)) {
      DimensionVector d(q.size(), 0);
      for (Vertex x : w.vertices) d[x] = 1;
      out.insert(std::move(d));
    }
  }
  return out;
}

std::set<DimensionVector> strings_oracle(const Quiver& q) {
  if (!is_type_a(q)) throw std::invalid_argument("strings oracle requires a quiver of mutation type A");
  return string_indicator_vectors(q);
}

std::string to_string(BasisMutation d) { return d == BasisMutation::inward ? "inward" : "outward"; }

BasisMutation basis_mutation_from_string(const std::string& s) {
  if (s == "inward") return BasisMutation::inward;
  if (s == "outward") return BasisMutation::outward;
  throw std::invalid_argument("direction must be 'inward' or 'outward'");
}

}  // namespace cbasis
