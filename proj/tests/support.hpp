#pragma once

// Shared fixtures and independent oracles for the test binaries. Nothing
// here calls the library routine it is used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "cbasis/quiver.hpp"
#include "cbasis/root_lattice.hpp"

namespace testing_support {

using cbasis::Int;
using cbasis::Quiver;
using cbasis::Root;
using cbasis::Vertex;

/// Quiver from 1-based labelled arrows, vertex id = label - 1.
inline Quiver labelled_quiver(int n, std::initializer_list<std::pair<int, int>> arrows) {
  Quiver q(n);
  for (auto [s, d] : arrows) q.add_arrow(s - 1, d - 1);
  return q;
}

/// The labelled type-A_11 example quiver.
inline Quiver example_quiver() {
  return labelled_quiver(11, {{1, 2}, {2, 9}, {9, 10}, {10, 2}, {10, 11}, {3, 4},
                              {4, 5}, {5, 7}, {6, 7}, {7, 8}, {8, 5}, {8, 9}});
}

/// Root written as a sum of simple roots alpha_first..alpha_last (1-based).
inline Root run(int rank, int first, int last) {
  Root r(rank, 0);
  for (int i = first; i <= last; ++i) r[i - 1] = 1;
  return r;
}

inline Root unit(int rank, int i) { return run(rank, i, i); }

// Euclidean realization: A_n inside Z^{n+1} with alpha_i = e_i - e_{i+1};
// D_n inside Z^n with alpha_i = e_i - e_{i+1} (i < n), alpha_n = e_{n-1} + e_n.

inline std::vector<Int> euclidean(cbasis::Family f, const Root& c) {
  const int n = static_cast<int>(c.size());
  if (f == cbasis::Family::A) {
    std::vector<Int> e(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      e[i] += c[i];
      e[i + 1] -= c[i];
    }
    return e;
  }
  std::vector<Int> e(n, 0);
  for (int i = 0; i + 1 < n; ++i) {
    e[i] += c[i];
    e[i + 1] -= c[i];
  }
  e[n - 2] += c[n - 1];
  e[n - 1] += c[n - 1];
  return e;
}

inline Int euclidean_inner(cbasis::Family f, const Root& u, const Root& v) {
  const auto a = euclidean(f, u), b = euclidean(f, v);
  return std::inner_product(a.begin(), a.end(), b.begin(), Int{0});
}

/// Positive roots in Euclidean coordinates: e_i - e_j (A and D) and
/// e_i + e_j (D only), i < j.
inline std::set<std::vector<Int>> euclidean_positive_roots(cbasis::Family f, int n) {
  const int dim = f == cbasis::Family::A ? n + 1 : n;
  std::set<std::vector<Int>> out;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      std::vector<Int> e(dim, 0);
      e[i] = 1;
      e[j] = -1;
      out.insert(e);
      if (f == cbasis::Family::D) {
        e[j] = 1;
        out.insert(e);
      }
    }
  }
  return out;
}

/// Leibniz expansion over all permutations (small n only).
inline Int leibniz_determinant(const std::vector<std::vector<Int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Int term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Integer solution of sum_x c_x * cols[x] = rhs by Cramer's rule with
/// Leibniz determinants. Requires det = +-1.
inline std::vector<Int> cramer_solve(const std::vector<Root>& cols, const Root& rhs) {
  const int n = static_cast<int>(cols.size());
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < n; ++x) m[i][x] = cols[x][i];
  const Int det = leibniz_determinant(m);
  std::vector<Int> c(n);
  for (int x = 0; x < n; ++x) {
    auto mx = m;
    for (int i = 0; i < n; ++i) mx[i][x] = rhs[i];
    c[x] = leibniz_determinant(mx) / det;
  }
  return c;
}

/// Mutation by the arrow rule: add a composite x -> y for each path
/// x -> k -> y, reverse the arrows at k, then cancel 2-cycles.
inline Quiver arrow_rule_mutation(const Quiver& q, Vertex k) {
  const int n = q.size();
  std::map<std::pair<Vertex, Vertex>, Int> count;
  for (const auto& a : q.arrows()) ++count[{a.tail, a.head}];
  std::map<std::pair<Vertex, Vertex>, Int> next;
  for (auto [e, c] : count) {
    if (e.first == k || e.second == k) next[{e.second, e.first}] += c;
    else next[e] += c;
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (x != k && y != k && count.count({x, k}) && count.count({k, y}))
        next[{x, y}] += count[{x, k}] * count[{k, y}];
  Quiver out(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const Int f = next.count({x, y}) ? next[{x, y}] : 0;
      const Int b = next.count({y, x}) ? next[{y, x}] : 0;
      for (Int i = 0; i < f - b; ++i) out.add_arrow(x, y);
      for (Int i = 0; i < b - f; ++i) out.add_arrow(y, x);
    }
  }
  return out;
}

/// Flip of diagonal idx: replaced by the other diagonal of the
/// quadrilateral formed by its two adjacent triangles. Each side of a
/// diagonal has exactly one vertex joined to both of its ends, since two
/// such vertices on one side would give crossing chords.
inline cbasis::Triangulation flip(const cbasis::Triangulation& t, std::size_t idx) {
  const int s = t.polygon_size;
  std::set<std::pair<int, int>> edges;
  auto add = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  for (int i = 0; i < s; ++i) add(i, (i + 1) % s);
  for (auto [a, b] : t.diagonals) add(a, b);
  auto has = [&](int a, int b) { return edges.count({std::min(a, b), std::max(a, b)}) > 0; };
  const int lo = std::min(t.diagonals[idx].first, t.diagonals[idx].second);
  const int hi = std::max(t.diagonals[idx].first, t.diagonals[idx].second);
  int inside = -1, outside = -1;
  for (int v = 0; v < s; ++v) {
    if (v == lo || v == hi || !has(lo, v) || !has(hi, v)) continue;
    (v > lo && v < hi ? inside : outside) = v;
  }
  cbasis::Triangulation out = t;
  out.diagonals[idx] = {std::min(inside, outside), std::max(inside, outside)};
  return out;
}

}  // namespace testing_support
