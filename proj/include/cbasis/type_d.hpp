#pragma once

// Quivers of mutation type D_n: recognition of the four structural families
// (a skeleton quiver with type-A quivers glued on at end vertices), their
// labellings, and the companion bases read off from those labellings.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cbasis/companion.hpp"
#include "cbasis/quiver.hpp"
#include "cbasis/type_a.hpp"

namespace cbasis {

enum class DKind { I, II, III, IV };

std::string to_string(DKind k);

/// Oriented 3-cycle tail -> head -> apex -> tail whose first arrow lies on
/// the central cycle.
struct Spike {
  Vertex tail;
  Vertex head;
  Vertex apex;
  friend bool operator==(const Spike&, const Spike&) = default;
};

/// Type-A quiver glued to the skeleton by identifying its end vertex
/// `anchor` with a skeleton vertex.
struct Attachment {
  Vertex anchor;
  std::vector<Vertex> vertices;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct TypeDStructure {
  DKind kind = DKind::I;
  int n = 0;

  // Type I: the hub carries the first attachment and two pendant fork vertices.
  Vertex hub = -1;
  std::pair<Vertex, Vertex> fork{-1, -1};

  // Types II and III: c1, c2 carry the attachments; d1, d2 are the forks.
  // Type II: oriented 3-cycles c1 -> d -> c2 -> c1 for d in {d1, d2}.
  // Type III: oriented 4-cycle c1 -> d1 -> c2 -> d2 -> c1.
  Vertex c1 = -1, c2 = -1, d1 = -1, d2 = -1;

  // Type IV: the central cycle in arrow order starting at the tail of the
  // first spike, and the spikes in the same cyclic order.
  std::vector<Vertex> central_cycle;
  std::vector<Spike> spikes;

  std::vector<Attachment> attachments;

  /// Types II/III: size of the first attachment. Type IV: central cycle length.
  int m() const;
  int r() const { return static_cast<int>(attachments.size()); }
  std::vector<int> attachment_sizes() const;
  /// Type IV: number of unspiked central arrows after each spike.
  std::vector<int> gaps() const;

  friend bool operator==(const TypeDStructure&, const TypeDStructure&) = default;
};

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decomposes a quiver of mutation type D_n (n >= 4) into its family.
/// An oriented n-cycle is reported as type IV; otherwise families are tried
/// in the order I, II, III, IV. Throws ClassificationError if none fits.
TypeDStructure classify(const Quiver& q);

/// Labels q according to its family; attachments use the type-A procedure.
Labelling label_type_d(const Quiver& q, const TypeDStructure& s, const ChoicePolicy& policy = {});

CompanionBasis companion_basis_type_d(const Quiver& q, const TypeDStructure& s, const Labelling& l);

/// Labelled quivers reached from the D_n Dynkin quiver 1 -> ... -> n-2 -> {n-1, n}
/// (vertex id = label - 1) by fixed mutation sequences.
enum class IntermediateKind { double_triangle, oriented_cycle, spiked_cycle };

struct IntermediateParams {
  int n = 0;
  /// double_triangle: the split point, 1 <= m <= n-3.
  int m = 0;
  /// spiked_cycle: (label of the spike tail, attachment size), tails increasing from 1.
  std::vector<std::pair<int, int>> spikes;
};

struct ReplayStep {
  Vertex vertex;
  BasisMutation direction;
};

struct IntermediateQuiver {
  Quiver quiver;
  Labelling labelling;
  /// Closed-form basis for the labelled quiver.
  CompanionBasis basis;
  /// Mutations taking the D_n Dynkin quiver and its simple system here.
  std::vector<ReplayStep> replay;
};

/// Throws std::invalid_argument for inadmissible parameters.
IntermediateQuiver intermediate_quiver(IntermediateKind kind, const IntermediateParams& params);

/// Companion basis of type D_n with the doubled run used when every central
/// arrow carries a spike: alpha_1 + ... + alpha_{p-1} + 2 alpha_p + ... +
/// 2 alpha_{n-2} + alpha_{n-1} + alpha_n, with empty runs contributing zero.
Root doubled_tail_root(int n, int p);

}  // namespace cbasis
