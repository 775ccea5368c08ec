#pragma once

// Quivers as skew-symmetric exchange matrices, matrix mutation, and the
// structural queries used by the labelling procedures.
//
// Vertices are 0-based ids. b(x, y) > 0 means b(x, y) arrows x -> y.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cbasis/exact.hpp"
#include "cbasis/root_lattice.hpp"

namespace cbasis {

using Vertex = int;

struct Arrow {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int n) : n_(n), b_(static_cast<std::size_t>(n) * n, 0) {}

  /// One entry per arrow; repeated entries add multiplicity, opposite arrows cancel.
  static Quiver from_arrows(int n, std::span<const Arrow> arrows);
  /// Throws std::invalid_argument if the matrix is not square and skew-symmetric.
  static Quiver from_matrix(const IntMatrix& b);

  int size() const { return n_; }
  Int operator()(Vertex x, Vertex y) const { return b_[index(x, y)]; }

  /// Adds one arrow x -> y.
  void add_arrow(Vertex x, Vertex y);

  /// Arrows sorted lexicographically, repeated by multiplicity.
  std::vector<Arrow> arrows() const;
  IntMatrix matrix() const;
  /// Number of edges between x and y in the underlying graph.
  Int edges(Vertex x, Vertex y) const {
    Int v = (*this)(x, y);
    return v < 0 ? -v : v;
  }
  bool adjacent(Vertex x, Vertex y) const { return (*this)(x, y) != 0; }
  bool contains(Vertex x) const { return x >= 0 && x < n_; }

  /// Quiver on the given vertices, renumbered 0..k-1 in the order given.
  Quiver induced(std::span<const Vertex> vertices) const;
  /// Quiver with vertex v renamed perm[v].
  Quiver permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t index(Vertex x, Vertex y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
  }
  int n_ = 0;
  std::vector<Int> b_;
};

/// Membership mask over the vertices of a quiver; views of subquivers.
using VertexMask = std::vector<bool>;

VertexMask full_mask(const Quiver& q);
VertexMask mask_of(const Quiver& q, std::span<const Vertex> vertices);
std::vector<Vertex> members(const VertexMask& mask);

/// First violated constraint of a quiver document.
struct Violation {
  std::string check;
  std::string message;
  Vertex x = -1;
  Vertex y = -1;
};

/// Checks skew-symmetry, zero diagonal and (when simply_laced) |b(x, y)| <= 1.
std::optional<Violation> validate(const Quiver& q, bool simply_laced = true);
std::optional<Violation> validate_matrix(const IntMatrix& b, bool simply_laced = true);

/// Fomin-Zelevinsky matrix mutation at k.
Quiver mutate(const Quiver& q, Vertex k);
Quiver mutate_sequence(Quiver q, std::span<const Vertex> ks);

int valency(const Quiver& q, Vertex x);
int valency(const Quiver& q, Vertex x, const VertexMask& within);

using Triangle = std::array<Vertex, 3>;

/// Cyclically oriented 3-cycles x -> y -> z -> x, listed with the least
/// vertex first and then in arrow order.
std::vector<Triangle> oriented_3_cycles(const Quiver& q);
std::vector<Triangle> oriented_3_cycles(const Quiver& q, const VertexMask& within);
bool on_oriented_3_cycle(const Quiver& q, Vertex x, const VertexMask& within);
/// Third vertex z such that {x, y, z} is an oriented 3-cycle inside the mask.
std::optional<Vertex> third_vertex(const Quiver& q, Vertex x, Vertex y, const VertexMask& within);

/// Vertices of valency 0 or 1, or 3-cycle vertices of valency 2.
std::vector<Vertex> end_vertices(const Quiver& q);
std::vector<Vertex> end_vertices(const Quiver& q, const VertexMask& within);

bool is_connected(const Quiver& q);
std::vector<std::vector<Vertex>> components(const Quiver& q, const VertexMask& within);

enum class StepDirection { forward, inverse };

struct WalkStep {
  Arrow arrow;
  StepDirection direction;  // forward when the walk follows the arrow
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// Reduced walk avoiding two consecutive arrows of an oriented 3-cycle.
struct StringWalk {
  std::vector<Vertex> vertices;
  std::vector<WalkStep> steps;

  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  StringWalk reversed() const;
  friend bool operator==(const StringWalk&, const StringWalk&) = default;
};

class StringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique string from i to j. Throws StringError when none exists or it
/// is not unique (which signals a quiver outside mutation type A).
StringWalk string_between(const Quiver& q, Vertex i, Vertex j);
StringWalk string_between(const Quiver& q, Vertex i, Vertex j, const VertexMask& within);

/// All strings starting at `from` (including the trivial one), inside the mask.
std::vector<StringWalk> strings_from(const Quiver& q, Vertex from, const VertexMask& within);

// Triangulations of a convex polygon with vertices numbered clockwise.

struct Triangulation {
  int polygon_size = 0;
  std::vector<std::pair<int, int>> diagonals;
};

std::optional<std::string> validate(const Triangulation& t);

/// Quiver whose vertices are the diagonals; d_i -> d_j when they bound a
/// common triangle and d_j follows d_i anticlockwise about their shared
/// polygon vertex. Throws std::invalid_argument on an invalid triangulation.
Quiver quiver_from_triangulation(const Triangulation& t);

/// Fan triangulation of the (n+3)-gon from polygon vertex 0.
Triangulation fan_triangulation(int n);

// Dynkin quivers and seeded test-data generation.

/// 0 -> 1 -> ... -> n-1.
Quiver linear_quiver(int n);
/// 0 -> 1 -> ... -> n-3 with n-3 -> n-2 and n-3 -> n-1.
Quiver dynkin_d_quiver(int n);
Quiver dynkin_quiver(const CartanType& t);
Quiver oriented_cycle(int n);

struct MutationWalk {
  Quiver result;
  std::vector<Vertex> sequence;
};

/// Applies `length` mutations at vertices drawn from std::mt19937_64 seeded
/// with rng_seed (vertex = draw mod n), so runs are reproducible everywhere.
MutationWalk random_mutation_walk(const Quiver& seed_quiver, int length, std::uint64_t rng_seed);

}  // namespace cbasis
