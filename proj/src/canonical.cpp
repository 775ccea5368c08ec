#include "cbasis/canonical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace cbasis {

namespace {

std::vector<int> refine_colours(const Quiver& q) {
  const int n = q.size();
  std::vector<int> colour(n, 0);
  int classes = 1;
  while (true) {
    std::vector<std::vector<Int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::pair<int, Int>> around;
      for (Vertex u = 0; u < n; ++u)
        if (q(v, u) != 0) around.emplace_back(colour[u], q(v, u));
      std::sort(around.begin(), around.end());
      sig[v].push_back(colour[v]);
      for (auto [c, b] : around) {
        sig[v].push_back(c);
        sig[v].push_back(b);
      }
    }
    std::map<std::vector<Int>, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = ids[sig[v]];
    if (next == classes) return colour;
    classes = next;
  }
}

std::string encode(const Quiver& q, const std::vector<Vertex>& order) {
  const int n = q.size();
  std::string key;
  key.reserve(static_cast<std::size_t>(n) * n + 2);
  key.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) key.push_back(static_cast<char>(q(order[i], order[j]) + 64));
  return key;
}

}  // namespace

std::string canonical_key(const Quiver& q) {
  const int n = q.size();
  const auto colour = refine_colours(q);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return std::pair{colour[a], a} < std::pair{colour[b], b}; });

  std::vector<std::pair<int, int>> blocks;  // [begin, end) of each colour class
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::string best = encode(q, order);
  // Odometer over the permutations of every block.
  while (true) {
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + blocks[b].first, last = order.begin() + blocks[b].second;
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
    best = std::min(best, encode(q, order));
  }
  return best;
}

Quiver canonical_form(const Quiver& q) {
  const std::string key = canonical_key(q);
  const int n = q.size();
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = static_cast<Int>(key[1 + i * n + j]) - 64;
  return Quiver::from_matrix(b);
}

std::vector<Quiver> mutation_class(const Quiver& seed, std::size_t max_size) {
  std::vector<Quiver> out;
  std::unordered_set<std::string> seen;
  std::deque<Quiver> queue;
  const Quiver start = canonical_form(seed);
  seen.insert(canonical_key(start));
  queue.push_back(start);
  while (!queue.empty()) {
    Quiver q = std::move(queue.front());
    queue.pop_front();
    for (Vertex k = 0; k < q.size(); ++k) {
      Quiver m = mutate(q, k);
      std::string key = canonical_key(m);
      if (!seen.insert(key).second) continue;
      if (seen.size() > max_size) throw std::length_error("mutation class exceeds the size limit");
      queue.push_back(canonical_form(m));
    }
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace cbasis
