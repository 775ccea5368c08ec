#pragma once

// Recognition and labelling of quivers of mutation type A, and the companion
// basis read off from a labelled quiver.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cbasis/companion.hpp"
#include "cbasis/quiver.hpp"

namespace cbasis {

/// True iff q is connected and its underlying graph is a chain of
/// cyclically oriented triangles and linear pieces glued without creating
/// any other cycle (the quivers of triangulated polygons).
bool is_type_a(const Quiver& q);
bool is_type_a(const Quiver& q, const VertexMask& within);

/// How the free end vertex of each rooted subquiver is picked.
struct ChoicePolicy {
  enum class Rule { smallest_id, largest_id };
  Rule rule = Rule::smallest_id;
  /// Explicit picks keyed by the attachment vertex of the subquiver.
  std::map<Vertex, Vertex> overrides;

  /// Picks from `candidates` (end vertices of the subquiver, attachment
  /// excluded unless it is the only vertex).
  Vertex choose(std::span<const Vertex> candidates, Vertex attachment) const;
};

/// An ordered pair of end vertices chosen at one stage of the procedure.
struct EndPair {
  Vertex first;
  Vertex second;
  friend bool operator==(const EndPair&, const EndPair&) = default;
};

struct Labelling {
  /// labels[v] in 1..n for each vertex id v.
  std::vector<int> labels;
  /// Strings walked during labelling, in the order they were processed.
  std::vector<StringWalk> strings;
  /// Ordered end-vertex pair behind each labelling string (same order).
  std::vector<EndPair> choices;

  int label_of(Vertex v) const { return labels.at(v); }
  /// Inverse map; throws std::out_of_range for an unused label.
  Vertex vertex_of(int label) const;
  bool is_bijection() const;
};

/// Labels q starting from the ordered end-vertex pair (start, finish).
/// Throws std::invalid_argument if q is not type A or the pair is not
/// admissible (equal vertices are only allowed when q has one vertex).
Labelling label_type_a(const Quiver& q, Vertex start, Vertex finish,
                       const ChoicePolicy& policy = {});

/// Labels the type-A subquiver `within` with labels offset+1..offset+|within|
/// and appends its strings and choices to `out`.
void label_subquiver(const Quiver& q, const VertexMask& within, Vertex start, Vertex finish,
                     int offset, const ChoicePolicy& policy, Labelling& out);

/// Vertices of the subquiver rooted at `root` of the 3-cycle {root, u, w}:
/// everything reachable from root without passing through u or w.
std::vector<Vertex> rooted_subquiver(const Quiver& q, Vertex root, Vertex u, Vertex w,
                                     const VertexMask& within);

struct VertexRole {
  bool primary = false;
  bool complementary = false;
  bool secondary = false;
  /// For a primary vertex: labels of its complementary and secondary partners.
  int complementary_partner = 0;
  int secondary_partner = 0;

  bool plain() const { return !primary && !complementary && !secondary; }
  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

/// Roles from the label order i < j < k on each oriented 3-cycle contained
/// in `within`. Throws std::logic_error if a vertex is primary twice.
std::vector<VertexRole> roles(const Quiver& q, const Labelling& l);
std::vector<VertexRole> roles(const Quiver& q, const Labelling& l, const VertexMask& within);

/// beta_i = alpha_i + ... + alpha_j for a primary label i with complementary
/// partner j, and alpha_i otherwise.
CompanionBasis companion_basis_type_a(const Quiver& q, const Labelling& l);

/// Checks the structural properties of a labelling record: bijectivity, one
/// labelling string per vertex, one string through two vertices of each
/// 3-cycle, and the label arithmetic along every string.
std::optional<Violation> check_labelling(const Quiver& q, const Labelling& l);

/// Default end-vertex pair: smallest end vertex first, largest distinct one second.
EndPair default_end_pair(const Quiver& q);

}  // namespace cbasis
