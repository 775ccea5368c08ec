#include "cbasis/root_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cbasis {

std::string to_string(Family f) { return f == Family::A ? "A" : "D"; }

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown root system family '" + s + "'");
}

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank) {
  if (family == Family::A && rank < 1)
    throw std::invalid_argument("type A requires rank >= 1");
  if (family == Family::D && rank < 4)
    throw std::invalid_argument("type D requires rank >= 4");
}

std::vector<std::pair<int, int>> CartanType::dynkin_edges() const {
  std::vector<std::pair<int, int>> edges;
  if (family_ == Family::A) {
    for (int i = 0; i + 1 < rank_; ++i) edges.emplace_back(i, i + 1);
  } else {
    for (int i = 0; i + 3 < rank_; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(rank_ - 3, rank_ - 2);
    edges.emplace_back(rank_ - 3, rank_ - 1);
  }
  return edges;
}

std::string CartanType::name() const { return to_string(family_) + std::to_string(rank_); }

Root simple_root(int rank, int i) {
  if (i < 1 || i > rank) throw std::out_of_range("simple root index out of range");
  Root r(rank, 0);
  r[i - 1] = 1;
  return r;
}

Root simple_root_sum(int rank, int first, int last) {
  Root r(rank, 0);
  if (first > last) return r;
  if (first < 1 || last > rank) throw std::out_of_range("simple root range out of bounds");
  for (int i = first; i <= last; ++i) r[i - 1] = 1;
  return r;
}

Root operator+(const Root& u, const Root& v) {
  if (u.size() != v.size()) throw std::invalid_argument("root length mismatch");
  Root r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = checked_add(u[i], v[i]);
  return r;
}

Root operator-(const Root& u, const Root& v) {
  if (u.size() != v.size()) throw std::invalid_argument("root length mismatch");
  Root r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = checked_sub(u[i], v[i]);
  return r;
}

Root operator*(Int c, const Root& v) {
  Root r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(c, v[i]);
  return r;
}

IntMatrix gram_matrix(const CartanType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  for (auto [i, j] : t.dynkin_edges()) {
    g(i, j) = -1;
    g(j, i) = -1;
  }
  return g;
}

Int inner(const CartanType& t, std::span<const Int> u, std::span<const Int> v) {
  const auto n = static_cast<std::size_t>(t.rank());
  if (u.size() != n || v.size() != n)
    throw std::invalid_argument("inner: vector length does not match rank");
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc = checked_add(acc, checked_mul(2, checked_mul(u[i], v[i])));
  for (auto [i, j] : t.dynkin_edges()) {
    Int cross = checked_add(checked_mul(u[i], v[j]), checked_mul(u[j], v[i]));
    acc = checked_sub(acc, cross);
  }
  return acc;
}

Root reflect(const CartanType& t, std::span<const Int> mirror, std::span<const Int> v) {
  if (!is_root(t, mirror)) throw std::invalid_argument("reflect: mirror is not a root");
  const Int c = inner(t, v, mirror);
  Root r(v.begin(), v.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(r[i], checked_mul(c, mirror[i]));
  return r;
}

bool is_root(const CartanType& t, std::span<const Int> v) {
  if (v.size() != static_cast<std::size_t>(t.rank())) return false;
  return inner(t, v, v) == 2;
}

std::vector<Root> positive_roots(const CartanType& t) {
  const int n = t.rank();
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 1; i <= n; ++i) {
    frontier.push_back(simple_root(n, i));
    seen.insert(frontier.back());
  }
  // Every non-simple positive root is a positive root plus a simple root.
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& v : frontier) {
      for (int i = 0; i < n; ++i) {
        Root w = v;
        ++w[i];
        if (is_root(t, w) && seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    Int ha = std::accumulate(a.begin(), a.end(), Int{0});
    Int hb = std::accumulate(b.begin(), b.end(), Int{0});
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return out;
}

Int coefficient_determinant(const CartanType& t, std::span<const Root> vs) {
  const auto n = static_cast<std::size_t>(t.rank());
  if (vs.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " vectors, got " +
                                std::to_string(vs.size()));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vs[i].size() != n) throw std::invalid_argument("vector length does not match rank");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  }
  return determinant(m);
}

bool is_z_basis(const CartanType& t, std::span<const Root> vs) {
  Int d = coefficient_determinant(t, vs);
  return d == 1 || d == -1;
}

std::string format_root(std::span<const Int> v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Int c = v[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    Int a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << "a" << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace cbasis
