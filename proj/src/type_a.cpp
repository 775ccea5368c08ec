#include "cbasis/type_a.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace cbasis {

bool is_type_a(const Quiver& q) { return is_type_a(q, full_mask(q)); }

bool is_type_a(const Quiver& q, const VertexMask& within) {
  const auto vs = members(within);
  if (vs.empty()) return false;
  if (components(q, within).size() != 1) return false;

  Int edges = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Int e = q.edges(vs[i], vs[j]);
      if (e > 1) return false;
      edges += e;
    }
  }

  // Every triangle of the underlying graph must be cyclically oriented and
  // no two may share an edge.
  std::vector<int> triangles_at(q.size(), 0);
  std::set<std::pair<Vertex, Vertex>> used_edges;
  Int triangle_count = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!q.adjacent(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        const Vertex x = vs[i], y = vs[j], z = vs[k];
        if (!q.adjacent(x, z) || !q.adjacent(y, z)) continue;
        const bool oriented = (q(x, y) > 0 && q(y, z) > 0 && q(z, x) > 0) ||
                              (q(x, y) < 0 && q(y, z) < 0 && q(z, x) < 0);
        if (!oriented) return false;
        for (auto e : {std::pair{x, y}, std::pair{x, z}, std::pair{y, z}})
          if (!used_edges.insert(e).second) return false;
        ++triangle_count;
        ++triangles_at[x];
        ++triangles_at[y];
        ++triangles_at[z];
      }
    }
  }

  // Edge-disjoint triangles spanning the whole cycle space leave a tree once
  // one edge per triangle is dropped, so no other cycle exists.
  const Int cyclomatic = edges - static_cast<Int>(vs.size()) + 1;
  if (cyclomatic != triangle_count) return false;

  // A vertex meets at most two blocks (triangles or bridges).
  for (Vertex v : vs) {
    const int val = valency(q, v, within);
    if (val - triangles_at[v] > 2) return false;
  }
  return true;
}

Vertex ChoicePolicy::choose(std::span<const Vertex> candidates, Vertex attachment) const {
  if (candidates.empty()) throw std::logic_error("no end vertex available for choice");
  if (auto it = overrides.find(attachment); it != overrides.end()) {
    if (std::find(candidates.begin(), candidates.end(), it->second) == candidates.end())
      throw std::invalid_argument("explicit choice " + std::to_string(it->second) +
                                  " is not an admissible end vertex for attachment " +
                                  std::to_string(attachment));
    return it->second;
  }
  return rule == Rule::smallest_id ? *std::min_element(candidates.begin(), candidates.end())
                                   : *std::max_element(candidates.begin(), candidates.end());
}

Vertex Labelling::vertex_of(int label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("label " + std::to_string(label) + " not used");
  return static_cast<Vertex>(it - labels.begin());
}

bool Labelling::is_bijection() const {
  std::vector<bool> seen(labels.size() + 1, false);
  for (int l : labels) {
    if (l < 1 || l > static_cast<int>(labels.size()) || seen[l]) return false;
    seen[l] = true;
  }
  return true;
}

std::vector<Vertex> rooted_subquiver(const Quiver& q, Vertex root, Vertex u, Vertex w,
                                     const VertexMask& within) {
  VertexMask m = within;
  m[u] = false;
  m[w] = false;
  for (auto& comp : components(q, m))
    if (std::binary_search(comp.begin(), comp.end(), root)) return comp;
  throw std::logic_error("root vertex not inside the subquiver");
}

namespace {

struct Frame {
  VertexMask within;
  Vertex start;
  Vertex finish;
  int offset;
};

std::vector<Vertex> subquiver_candidates(const Quiver& q, const VertexMask& within,
                                         Vertex attachment) {
  auto ends = end_vertices(q, within);
  if (std::count(within.begin(), within.end(), true) == 1) return {attachment};
  if (std::find(ends.begin(), ends.end(), attachment) == ends.end())
    throw std::logic_error("attachment vertex is not an end vertex of its subquiver");
  std::erase(ends, attachment);
  return ends;
}

}  // namespace

void label_subquiver(const Quiver& q, const VertexMask& within, Vertex start, Vertex finish,
                     int offset, const ChoicePolicy& policy, Labelling& out) {
  if (out.labels.size() != static_cast<std::size_t>(q.size())) out.labels.assign(q.size(), 0);

  std::vector<Frame> stack{{within, start, finish, offset}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();

    const StringWalk p = string_between(q, f.start, f.finish, f.within);
    out.strings.push_back(p);
    out.choices.push_back({f.start, f.finish});

    out.labels[p.vertices[0]] = f.offset + 1;
    for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) {
      const Vertex u = p.vertices[t], w = p.vertices[t + 1];
      const int here = out.labels[u];
      if (auto z = third_vertex(q, u, w, f.within)) {
        // u is primary relative to p; the subquiver rooted at the
        // complementary vertex z takes the labels here+1 .. here+a.
        const auto sub = rooted_subquiver(q, *z, u, w, f.within);
        const VertexMask sub_mask = mask_of(q, sub);
        const auto candidates = subquiver_candidates(q, sub_mask, *z);
        const Vertex first = policy.choose(candidates, *z);
        stack.push_back({sub_mask, first, *z, here});
        out.labels[w] = here + static_cast<int>(sub.size()) + 1;
      } else {
        out.labels[w] = here + 1;
      }
    }
  }
}

Labelling label_type_a(const Quiver& q, Vertex start, Vertex finish, const ChoicePolicy& policy) {
  if (!is_type_a(q)) throw std::invalid_argument("quiver is not of mutation type A");
  const auto ends = end_vertices(q);
  auto is_end = [&](Vertex v) { return std::find(ends.begin(), ends.end(), v) != ends.end(); };
  if (!q.contains(start) || !q.contains(finish) || !is_end(start) || !is_end(finish))
    throw std::invalid_argument("labelling requires a pair of end vertices");
  if (start == finish && q.size() > 1)
    throw std::invalid_argument("labelling requires distinct end vertices");
  Labelling l;
  label_subquiver(q, full_mask(q), start, finish, 0, policy, l);
  return l;
}

EndPair default_end_pair(const Quiver& q) {
  const auto ends = end_vertices(q);
  if (ends.empty()) throw std::invalid_argument("quiver has no end vertices");
  return {ends.front(), ends.back()};
}

std::vector<VertexRole> roles(const Quiver& q, const Labelling& l) {
  return roles(q, l, full_mask(q));
}

std::vector<VertexRole> roles(const Quiver& q, const Labelling& l, const VertexMask& within) {
  std::vector<VertexRole> out(q.size());
  for (const Triangle& t : oriented_3_cycles(q, within)) {
    std::array<Vertex, 3> by_label = t;
    std::sort(by_label.begin(), by_label.end(),
              [&](Vertex a, Vertex b) { return l.label_of(a) < l.label_of(b); });
    VertexRole& p = out[by_label[0]];
    if (p.primary) throw std::logic_error("vertex is primary for two 3-cycles");
    p.primary = true;
    p.complementary_partner = l.label_of(by_label[1]);
    p.secondary_partner = l.label_of(by_label[2]);
    out[by_label[1]].complementary = true;
    out[by_label[2]].secondary = true;
  }
  return out;
}

CompanionBasis companion_basis_type_a(const Quiver& q, const Labelling& l) {
  const int n = q.size();
  CompanionBasis b{CartanType::A(n), std::vector<Root>(n)};
  const auto r = roles(q, l);
  for (Vertex v = 0; v < n; ++v) {
    const int i = l.label_of(v);
    b.roots[v] = r[v].primary ? simple_root_sum(n, i, r[v].complementary_partner) : simple_root(n, i);
  }
  return b;
}

std::optional<Violation> check_labelling(const Quiver& q, const Labelling& l) {
  const int n = q.size();
  auto fail = [](std::string check, std::string msg, Vertex x = -1, Vertex y = -1) {
    return Violation{std::move(check), std::move(msg), x, y};
  };
  if (static_cast<int>(l.labels.size()) != n || !l.is_bijection())
    return fail("bijection", "labels are not a bijection onto 1..n");
  if (l.strings.empty() || l.strings.size() != l.choices.size())
    return fail("record", "labelling strings and choices are inconsistent");

  std::vector<int> string_of(n, -1);
  for (std::size_t s = 0; s < l.strings.size(); ++s) {
    const auto& p = l.strings[s];
    if (p.vertices.empty()) return fail("record", "empty labelling string");
    if (l.choices[s].first != p.source() || l.choices[s].second != p.target())
      return fail("record", "choice does not match its labelling string");
    for (Vertex v : p.vertices) {
      if (string_of[v] >= 0) return fail("one_string_per_vertex", "vertex lies on two labelling strings", v);
      string_of[v] = static_cast<int>(s);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (string_of[v] < 0) return fail("one_string_per_vertex", "vertex lies on no labelling string", v);

  for (const Triangle& t : oriented_3_cycles(q)) {
    int through_two = 0;
    for (const auto& p : l.strings) {
      int hits = 0;
      for (Vertex v : t) hits += std::count(p.vertices.begin(), p.vertices.end(), v) > 0;
      through_two += hits == 2;
    }
    if (through_two != 1)
      return fail("one_string_per_3_cycle", "3-cycle is not crossed by exactly one labelling string",
                  t[0], t[1]);
  }

  if (l.label_of(l.strings[0].source()) != 1 || l.label_of(l.strings[0].target()) != n)
    return fail("label_arithmetic", "first labelling string must run from label 1 to label n");

  const VertexMask all = full_mask(q);
  for (const auto& p : l.strings) {
    for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) {
      const Vertex u = p.vertices[t], w = p.vertices[t + 1];
      const int lu = l.label_of(u);
      auto z = third_vertex(q, u, w, all);
      if (!z) {
        if (l.label_of(w) != lu + 1)
          return fail("label_arithmetic", "labels along a string must increase by one", u, w);
        continue;
      }
      const auto sub = rooted_subquiver(q, *z, u, w, all);
      const int b = static_cast<int>(sub.size());
      if (l.label_of(*z) != lu + b)
        return fail("label_arithmetic", "complementary vertex must be labelled j+b", u, *z);
      if (l.label_of(w) != lu + b + 1)
        return fail("label_arithmetic", "secondary vertex must be labelled j+b+1", u, w);
      for (Vertex v : sub) {
        const int lv = l.label_of(v);
        if (lv <= lu || lv > lu + b)
          return fail("label_arithmetic", "rooted subquiver labels must fill j+1..j+b", u, v);
      }
      const auto& nested = l.strings[string_of[*z]];
      if (nested.target() != *z || l.label_of(nested.source()) != lu + 1)
        return fail("label_arithmetic", "nested labelling string must run from j+1 to j+b", u, *z);
    }
  }
  return std::nullopt;
}

}  // namespace cbasis
