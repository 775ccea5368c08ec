#include "cbasis/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace cbasis {

Quiver Quiver::from_arrows(int n, std::span<const Arrow> arrows) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Quiver q(n);
  for (const Arrow& a : arrows) q.add_arrow(a.tail, a.head);
  return q;
}

Quiver Quiver::from_matrix(const IntMatrix& b) {
  if (auto v = validate_matrix(b, false)) throw std::invalid_argument(v->message);
  Quiver q(static_cast<int>(b.rows()));
  for (int x = 0; x < q.n_; ++x)
    for (int y = 0; y < q.n_; ++y) q.b_[q.index(x, y)] = b(x, y);
  return q;
}

void Quiver::add_arrow(Vertex x, Vertex y) {
  if (!contains(x) || !contains(y)) throw std::out_of_range("arrow endpoint out of range");
  if (x == y) throw std::invalid_argument("loops are not allowed");
  b_[index(x, y)] = checked_add(b_[index(x, y)], 1);
  b_[index(y, x)] = checked_sub(b_[index(y, x)], 1);
}

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (Vertex x = 0; x < n_; ++x)
    for (Vertex y = 0; y < n_; ++y)
      for (Int k = 0; k < (*this)(x, y); ++k) out.push_back({x, y});
  return out;
}

IntMatrix Quiver::matrix() const {
  IntMatrix m(n_, n_);
  for (Vertex x = 0; x < n_; ++x)
    for (Vertex y = 0; y < n_; ++y) m(x, y) = (*this)(x, y);
  return m;
}

Quiver Quiver::induced(std::span<const Vertex> vertices) const {
  Quiver q(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      q.b_[q.index(static_cast<int>(i), static_cast<int>(j))] = (*this)(vertices[i], vertices[j]);
  return q;
}

Quiver Quiver::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("permutation size");
  Quiver q(n_);
  for (Vertex x = 0; x < n_; ++x)
    for (Vertex y = 0; y < n_; ++y) q.b_[q.index(perm[x], perm[y])] = (*this)(x, y);
  return q;
}

VertexMask full_mask(const Quiver& q) { return VertexMask(q.size(), true); }

VertexMask mask_of(const Quiver& q, std::span<const Vertex> vertices) {
  VertexMask m(q.size(), false);
  for (Vertex v : vertices) {
    if (!q.contains(v)) throw std::out_of_range("vertex out of range");
    m[v] = true;
  }
  return m;
}

std::vector<Vertex> members(const VertexMask& mask) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::optional<Violation> validate_matrix(const IntMatrix& b, bool simply_laced) {
  if (!b.square()) return Violation{"shape", "exchange matrix is not square"};
  const int n = static_cast<int>(b.rows());
  for (int x = 0; x < n; ++x) {
    if (b(x, x) != 0) return Violation{"diagonal", "nonzero diagonal", x, x};
    for (int y = x + 1; y < n; ++y) {
      if (b(x, y) != -b(y, x)) return Violation{"skew_symmetry", "matrix is not skew-symmetric", x, y};
      if (simply_laced && (b(x, y) > 1 || b(x, y) < -1))
        return Violation{"entry_bound", "entry bound |b| <= 1 violated", x, y};
    }
  }
  return std::nullopt;
}

std::optional<Violation> validate(const Quiver& q, bool simply_laced) {
  return validate_matrix(q.matrix(), simply_laced);
}

Quiver mutate(const Quiver& q, Vertex k) {
  if (!q.contains(k)) throw std::out_of_range("mutation vertex out of range");
  const int n = q.size();
  IntMatrix m(n, n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == k || y == k) {
        m(x, y) = -q(x, y);
        continue;
      }
      const Int bxk = q(x, k), bky = q(k, y);
      const Int abs_xk = bxk < 0 ? -bxk : bxk, abs_ky = bky < 0 ? -bky : bky;
      const Int delta = checked_add(checked_mul(abs_xk, bky), checked_mul(bxk, abs_ky)) / 2;
      m(x, y) = checked_add(q(x, y), delta);
    }
  }
  return Quiver::from_matrix(m);
}

Quiver mutate_sequence(Quiver q, std::span<const Vertex> ks) {
  for (Vertex k : ks) q = mutate(q, k);
  return q;
}

int valency(const Quiver& q, Vertex x) { return valency(q, x, full_mask(q)); }

int valency(const Quiver& q, Vertex x, const VertexMask& within) {
  Int v = 0;
  for (Vertex y = 0; y < q.size(); ++y)
    if (within[y]) v += q.edges(x, y);
  return static_cast<int>(v);
}

namespace {

bool is_oriented_triangle(const Quiver& q, Vertex x, Vertex y, Vertex z) {
  return (q(x, y) > 0 && q(y, z) > 0 && q(z, x) > 0) || (q(x, y) < 0 && q(y, z) < 0 && q(z, x) < 0);
}

}  // namespace

std::vector<Triangle> oriented_3_cycles(const Quiver& q) { return oriented_3_cycles(q, full_mask(q)); }

std::vector<Triangle> oriented_3_cycles(const Quiver& q, const VertexMask& within) {
  std::vector<Triangle> out;
  const int n = q.size();
  for (Vertex x = 0; x < n; ++x) {
    if (!within[x]) continue;
    for (Vertex y = x + 1; y < n; ++y) {
      if (!within[y] || q(x, y) <= 0) continue;
      for (Vertex z = x + 1; z < n; ++z) {
        if (!within[z] || z == y) continue;
        if (q(y, z) > 0 && q(z, x) > 0) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

bool on_oriented_3_cycle(const Quiver& q, Vertex x, const VertexMask& within) {
  for (Vertex y = 0; y < q.size(); ++y) {
    if (!within[y] || q(x, y) <= 0) continue;
    for (Vertex z = 0; z < q.size(); ++z)
      if (within[z] && z != x && z != y && q(y, z) > 0 && q(z, x) > 0) return true;
  }
  return false;
}

std::optional<Vertex> third_vertex(const Quiver& q, Vertex x, Vertex y, const VertexMask& within) {
  if (!q.adjacent(x, y)) return std::nullopt;
  for (Vertex z = 0; z < q.size(); ++z)
    if (within[z] && z != x && z != y && is_oriented_triangle(q, x, y, z)) return z;
  return std::nullopt;
}

std::vector<Vertex> end_vertices(const Quiver& q) { return end_vertices(q, full_mask(q)); }

std::vector<Vertex> end_vertices(const Quiver& q, const VertexMask& within) {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < q.size(); ++x) {
    if (!within[x]) continue;
    const int v = valency(q, x, within);
    if (v <= 1 || (v == 2 && on_oriented_3_cycle(q, x, within))) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const Quiver& q, const VertexMask& within) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(q.size(), false);
  for (Vertex s = 0; s < q.size(); ++s) {
    if (!within[s] || seen[s]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (Vertex y = 0; y < q.size(); ++y) {
        if (within[y] && !seen[y] && q.adjacent(x, y)) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Quiver& q) { return q.size() > 0 && components(q, full_mask(q)).size() == 1; }

StringWalk StringWalk::reversed() const {
  StringWalk r;
  r.vertices.assign(vertices.rbegin(), vertices.rend());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    r.steps.push_back({it->arrow, it->direction == StepDirection::forward ? StepDirection::inverse
                                                                         : StepDirection::forward});
  return r;
}

namespace {

// Depth-first enumeration of strings from `from`. The visitor returns false
// to stop the search.
void enumerate_strings(const Quiver& q, Vertex from, const VertexMask& within,
                       const std::function<bool(const StringWalk&)>& visit) {
  StringWalk walk;
  walk.vertices.push_back(from);
  std::vector<bool> on_walk(q.size(), false);
  on_walk[from] = true;
  bool stop = false;

  std::function<void()> extend = [&] {
    if (!visit(walk)) {
      stop = true;
      return;
    }
    const Vertex u = walk.vertices.back();
    const Vertex prev = walk.vertices.size() > 1 ? walk.vertices[walk.vertices.size() - 2] : -1;
    for (Vertex x = 0; x < q.size() && !stop; ++x) {
      if (!within[x] || on_walk[x] || !q.adjacent(u, x)) continue;
      if (q.edges(u, x) > 1) throw StringError("strings require a simply-laced quiver");
      if (prev >= 0 && is_oriented_triangle(q, prev, u, x)) continue;
      const bool forward = q(u, x) > 0;
      walk.steps.push_back({forward ? Arrow{u, x} : Arrow{x, u},
                            forward ? StepDirection::forward : StepDirection::inverse});
      walk.vertices.push_back(x);
      on_walk[x] = true;
      extend();
      on_walk[x] = false;
      walk.vertices.pop_back();
      walk.steps.pop_back();
    }
  };
  extend();
}

}  // namespace

StringWalk string_between(const Quiver& q, Vertex i, Vertex j) {
  return string_between(q, i, j, full_mask(q));
}

StringWalk string_between(const Quiver& q, Vertex i, Vertex j, const VertexMask& within) {
  if (!q.contains(i) || !q.contains(j) || !within[i] || !within[j])
    throw StringError("string endpoints outside the quiver");
  std::optional<StringWalk> found;
  int count = 0;
  enumerate_strings(q, i, within, [&](const StringWalk& w) {
    if (w.target() == j) {
      ++count;
      if (!found) found = w;
    }
    return count < 2;
  });
  if (count == 0)
    throw StringError("no string from " + std::to_string(i) + " to " + std::to_string(j));
  if (count > 1)
    throw StringError("string from " + std::to_string(i) + " to " + std::to_string(j) +
                      " is not unique");
  return *found;
}

std::vector<StringWalk> strings_from(const Quiver& q, Vertex from, const VertexMask& within) {
  std::vector<StringWalk> out;
  enumerate_strings(q, from, within, [&](const StringWalk& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::optional<std::string> validate(const Triangulation& t) {
  const int s = t.polygon_size;
  if (s < 4) return "polygon must have at least 4 vertices";
  if (static_cast<int>(t.diagonals.size()) != s - 3)
    return "expected " + std::to_string(s - 3) + " diagonals, got " + std::to_string(t.diagonals.size());
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : t.diagonals) {
    if (a < 0 || b < 0 || a >= s || b >= s) return "diagonal endpoint out of range";
    if (a > b) std::swap(a, b);
    if (b - a <= 1 || (a == 0 && b == s - 1)) return "diagonal joins boundary-adjacent vertices";
    if (!seen.insert({a, b}).second) return "repeated diagonal";
  }
  for (auto it = seen.begin(); it != seen.end(); ++it) {
    for (auto jt = std::next(it); jt != seen.end(); ++jt) {
      auto [a, b] = *it;
      auto [c, d] = *jt;
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return "diagonals cross";
    }
  }
  return std::nullopt;
}

Quiver quiver_from_triangulation(const Triangulation& t) {
  if (auto err = validate(t)) throw std::invalid_argument("invalid triangulation: " + *err);
  const int s = t.polygon_size;
  const int n = static_cast<int>(t.diagonals.size());
  std::set<std::pair<int, int>> sides;
  for (auto [a, b] : t.diagonals) sides.insert(std::minmax(a, b));
  for (int v = 0; v < s; ++v) sides.insert(std::minmax(v, (v + 1) % s));
  auto is_side = [&](int a, int b) { return sides.count(std::minmax(a, b)) > 0; };

  Quiver q(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto [a, b] = t.diagonals[i];
      auto [c, d] = t.diagonals[j];
      int shared = -1, qi = -1, qj = -1;
      if (a == c) shared = a, qi = b, qj = d;
      else if (a == d) shared = a, qi = b, qj = c;
      else if (b == c) shared = b, qi = a, qj = d;
      else if (b == d) shared = b, qi = a, qj = c;
      if (shared < 0 || !is_side(qi, qj)) continue;
      // Offsets grow clockwise as seen from the shared vertex.
      const int off_i = (qi - shared + s) % s;
      const int off_j = (qj - shared + s) % s;
      if (off_j < off_i) q.add_arrow(i, j);
    }
  }
  return q;
}

Triangulation fan_triangulation(int n) {
  if (n < 1) throw std::invalid_argument("fan triangulation needs n >= 1");
  Triangulation t{n + 3, {}};
  for (int k = 2; k <= n + 1; ++k) t.diagonals.emplace_back(0, k);
  return t;
}

Quiver linear_quiver(int n) {
  Quiver q(n);
  for (int i = 0; i + 1 < n; ++i) q.add_arrow(i, i + 1);
  return q;
}

Quiver dynkin_d_quiver(int n) {
  if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
  Quiver q(n);
  for (int i = 0; i + 3 < n; ++i) q.add_arrow(i, i + 1);
  q.add_arrow(n - 3, n - 2);
  q.add_arrow(n - 3, n - 1);
  return q;
}

Quiver dynkin_quiver(const CartanType& t) {
  return t.family() == Family::A ? linear_quiver(t.rank()) : dynkin_d_quiver(t.rank());
}

Quiver oriented_cycle(int n) {
  if (n < 3) throw std::invalid_argument("oriented cycle needs n >= 3");
  Quiver q(n);
  for (int i = 0; i < n; ++i) q.add_arrow(i, (i + 1) % n);
  return q;
}

MutationWalk random_mutation_walk(const Quiver& seed_quiver, int length, std::uint64_t rng_seed) {
  if (length < 0) throw std::invalid_argument("negative walk length");
  MutationWalk w{seed_quiver, {}};
  if (seed_quiver.size() == 0) return w;
  std::mt19937_64 rng(rng_seed);
  const auto n = static_cast<std::uint64_t>(seed_quiver.size());
  for (int step = 0; step < length; ++step) {
    const auto k = static_cast<Vertex>(rng() % n);
    w.result = mutate(w.result, k);
    w.sequence.push_back(k);
  }
  return w;
}

}  // namespace cbasis
