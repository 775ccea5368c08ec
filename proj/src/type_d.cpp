#include "cbasis/type_d.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace cbasis {

std::string to_string(DKind k) {
  switch (k) {
    case DKind::I: return "I";
    case DKind::II: return "II";
    case DKind::III: return "III";
    case DKind::IV: return "IV";
  }
  return "?";
}

int TypeDStructure::m() const {
  switch (kind) {
    case DKind::I: return n - 2;
    case DKind::II:
    case DKind::III: return static_cast<int>(attachments.at(0).vertices.size());
    case DKind::IV: return static_cast<int>(central_cycle.size());
  }
  return 0;
}

std::vector<int> TypeDStructure::attachment_sizes() const {
  std::vector<int> out;
  for (const auto& a : attachments) out.push_back(static_cast<int>(a.vertices.size()));
  return out;
}

std::vector<int> TypeDStructure::gaps() const {
  std::vector<int> out;
  if (kind != DKind::IV || spikes.empty()) return out;
  const int len = static_cast<int>(central_cycle.size());
  auto pos = [&](Vertex v) {
    return static_cast<int>(std::find(central_cycle.begin(), central_cycle.end(), v) -
                            central_cycle.begin());
  };
  for (std::size_t i = 0; i < spikes.size(); ++i) {
    const Spike& next = spikes[(i + 1) % spikes.size()];
    out.push_back(((pos(next.tail) - pos(spikes[i].head)) % len + len) % len);
  }
  return out;
}

namespace {

bool attachment_ok(const Quiver& q, const std::vector<Vertex>& vs, Vertex anchor) {
  const VertexMask m = mask_of(q, vs);
  if (!m[anchor] || !is_type_a(q, m)) return false;
  const auto ends = end_vertices(q, m);
  return std::find(ends.begin(), ends.end(), anchor) != ends.end();
}

VertexMask without(const Quiver& q, std::initializer_list<Vertex> removed) {
  VertexMask m = full_mask(q);
  for (Vertex v : removed) m[v] = false;
  return m;
}

const std::vector<Vertex>* component_with(const std::vector<std::vector<Vertex>>& comps, Vertex v) {
  for (const auto& c : comps)
    if (std::binary_search(c.begin(), c.end(), v)) return &c;
  return nullptr;
}

std::vector<Vertex> neighbours(const Quiver& q, Vertex x) {
  std::vector<Vertex> out;
  for (Vertex y = 0; y < q.size(); ++y)
    if (q.adjacent(x, y)) out.push_back(y);
  return out;
}

std::optional<TypeDStructure> whole_cycle(const Quiver& q) {
  const int n = q.size();
  for (Vertex x = 0; x < n; ++x)
    if (valency(q, x) != 2) return std::nullopt;
  std::vector<Vertex> cycle{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  while (true) {
    const Vertex u = cycle.back();
    Vertex next = -1;
    for (Vertex y = 0; y < n; ++y)
      if (q(u, y) > 0) next = y;
    if (next < 0) return std::nullopt;
    if (next == 0) break;
    if (seen[next]) return std::nullopt;
    seen[next] = true;
    cycle.push_back(next);
  }
  if (static_cast<int>(cycle.size()) != n) return std::nullopt;
  TypeDStructure s;
  s.kind = DKind::IV;
  s.n = n;
  s.central_cycle = std::move(cycle);
  return s;
}

std::optional<TypeDStructure> try_type_i(const Quiver& q) {
  const int n = q.size();
  for (Vertex c = 0; c < n; ++c) {
    std::vector<Vertex> leaves;
    for (Vertex y : neighbours(q, c))
      if (valency(q, y) == 1) leaves.push_back(y);
    // Largest pendant pair first, so the Dynkin quiver keeps its last two
    // vertices as the fork.
    for (std::size_t i = leaves.size(); i-- > 0;) {
      for (std::size_t j = leaves.size(); j-- > i + 1;) {
        const VertexMask rest = without(q, {leaves[i], leaves[j]});
        if (!attachment_ok(q, members(rest), c)) continue;
        TypeDStructure s;
        s.kind = DKind::I;
        s.n = n;
        s.hub = c;
        s.fork = {leaves[i], leaves[j]};
        s.attachments.push_back({c, members(rest)});
        return s;
      }
    }
  }
  return std::nullopt;
}

// Splits the quiver minus {d1, d2} (and minus the c1-c2 edge when present)
// into the two attachments anchored at c1 and c2.
std::optional<std::pair<Attachment, Attachment>> split_two(const Quiver& q, Vertex c1, Vertex c2,
                                                           Vertex d1, Vertex d2) {
  IntMatrix b = q.matrix();
  b(c1, c2) = 0;
  b(c2, c1) = 0;
  const Quiver cut = Quiver::from_matrix(b);
  const auto comps = components(cut, without(q, {d1, d2}));
  if (comps.size() != 2) return std::nullopt;
  const auto* g1 = component_with(comps, c1);
  const auto* g2 = component_with(comps, c2);
  if (!g1 || !g2 || g1 == g2) return std::nullopt;
  if (!attachment_ok(q, *g1, c1) || !attachment_ok(q, *g2, c2)) return std::nullopt;
  return std::pair{Attachment{c1, *g1}, Attachment{c2, *g2}};
}

std::optional<TypeDStructure> try_type_ii(const Quiver& q) {
  const int n = q.size();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (q(x, y) <= 0) continue;
      std::vector<Vertex> ds;
      for (Vertex z = 0; z < n; ++z)
        if (q(y, z) > 0 && q(z, x) > 0) ds.push_back(z);
      if (ds.size() != 2 || valency(q, ds[0]) != 2 || valency(q, ds[1]) != 2) continue;
      // The shared arrow runs c2 -> c1.
      const Vertex c1 = y, c2 = x;
      auto split = split_two(q, c1, c2, ds[0], ds[1]);
      if (!split) continue;
      TypeDStructure s;
      s.kind = DKind::II;
      s.n = n;
      s.c1 = c1;
      s.c2 = c2;
      s.d1 = ds[0];
      s.d2 = ds[1];
      s.attachments = {split->first, split->second};
      return s;
    }
  }
  return std::nullopt;
}

std::optional<TypeDStructure> try_type_iii(const Quiver& q) {
  const int n = q.size();
  for (Vertex d = 0; d < n; ++d) {
    if (valency(q, d) != 2) continue;
    Vertex in = -1, out = -1;
    for (Vertex y = 0; y < n; ++y) {
      if (q(y, d) > 0) in = y;
      if (q(d, y) > 0) out = y;
    }
    if (in < 0 || out < 0 || q.adjacent(in, out)) continue;
    for (Vertex e = d + 1; e < n; ++e) {
      if (valency(q, e) != 2 || q(out, e) <= 0 || q(e, in) <= 0) continue;
      auto split = split_two(q, in, out, d, e);
      if (!split) continue;
      TypeDStructure s;
      s.kind = DKind::III;
      s.n = n;
      s.c1 = in;
      s.d1 = d;
      s.c2 = out;
      s.d2 = e;
      s.attachments = {split->first, split->second};
      return s;
    }
  }
  return std::nullopt;
}

// Directed cycles of length >= 3 without chords in the underlying graph,
// each reported once starting from its least vertex.
std::vector<std::vector<Vertex>> chordless_cycles(const Quiver& q) {
  const int n = q.size();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);

  std::function<void(Vertex)> extend = [&](Vertex s) {
    const Vertex u = path.back();
    for (Vertex x = s + 1; x < n; ++x) {
      if (on_path[x] || q(u, x) <= 0) continue;
      bool touches_start = false, chord = false;
      for (Vertex y : path) {
        if (y == u || !q.adjacent(x, y)) continue;
        if (y == s) touches_start = true;
        else chord = true;
      }
      if (chord) continue;
      if (touches_start) {
        if (q(x, s) > 0 && path.size() >= 2) {
          path.push_back(x);
          out.push_back(path);
          path.pop_back();
        }
        continue;
      }
      path.push_back(x);
      on_path[x] = true;
      extend(s);
      on_path[x] = false;
      path.pop_back();
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
  return out;
}

std::optional<TypeDStructure> try_central_cycle(const Quiver& q, const std::vector<Vertex>& cycle) {
  const int n = q.size();
  const int len = static_cast<int>(cycle.size());
  const VertexMask in_cycle = mask_of(q, cycle);

  std::vector<Spike> spikes;  // in cycle order
  std::vector<bool> is_apex(n, false);
  for (int i = 0; i < len; ++i) {
    const Vertex u = cycle[i], w = cycle[(i + 1) % len];
    std::vector<Vertex> apexes;
    for (Vertex z = 0; z < n; ++z)
      if (!in_cycle[z] && q(w, z) > 0 && q(z, u) > 0) apexes.push_back(z);
    if (apexes.size() > 1) return std::nullopt;
    if (apexes.size() == 1) {
      if (is_apex[apexes[0]]) return std::nullopt;
      is_apex[apexes[0]] = true;
      spikes.push_back({u, w, apexes[0]});
    }
  }
  if (len == 3 && spikes.empty()) return std::nullopt;

  // Off-cycle neighbours of central vertices are exactly the apexes of the
  // spikes through them, and each apex meets the cycle only in its spike.
  for (Vertex x : cycle) {
    for (Vertex y : neighbours(q, x)) {
      if (in_cycle[y]) continue;
      const bool ok = std::any_of(spikes.begin(), spikes.end(), [&](const Spike& s) {
        return s.apex == y && (s.tail == x || s.head == x);
      });
      if (!ok) return std::nullopt;
    }
  }

  VertexMask rest(n, true);
  for (Vertex v : cycle) rest[v] = false;
  const auto comps = components(q, rest);
  if (comps.size() != spikes.size()) return std::nullopt;

  std::vector<Attachment> attachments;
  for (const Spike& s : spikes) {
    const auto* comp = component_with(comps, s.apex);
    if (!comp) return std::nullopt;
    for (const Spike& other : spikes)
      if (other.apex != s.apex && std::binary_search(comp->begin(), comp->end(), other.apex))
        return std::nullopt;
    if (!attachment_ok(q, *comp, s.apex)) return std::nullopt;
    attachments.push_back({s.apex, *comp});
  }

  // First spike: least tail id, among spikes whose tail is not the head of
  // the preceding spike whenever some central arrow is unspiked.
  std::size_t first = 0;
  const std::size_t r = spikes.size();
  Vertex start = *std::min_element(cycle.begin(), cycle.end());
  if (r > 0) {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < r; ++j) {
      const Spike& prev = spikes[(j + r - 1) % r];
      if (static_cast<int>(r) < len && prev.head == spikes[j].tail) continue;
      if (!best || spikes[j].tail < spikes[*best].tail) best = j;
    }
    first = *best;
    start = spikes[first].tail;
  }

  TypeDStructure s;
  s.kind = DKind::IV;
  s.n = n;
  const auto at = std::find(cycle.begin(), cycle.end(), start) - cycle.begin();
  for (int i = 0; i < len; ++i) s.central_cycle.push_back(cycle[(at + i) % len]);
  for (std::size_t j = 0; j < r; ++j) {
    s.spikes.push_back(spikes[(first + j) % r]);
    s.attachments.push_back(attachments[(first + j) % r]);
  }
  return s;
}

std::optional<TypeDStructure> try_type_iv(const Quiver& q) {
  for (const auto& cycle : chordless_cycles(q))
    if (auto s = try_central_cycle(q, cycle)) return s;
  return std::nullopt;
}

}  // namespace

TypeDStructure classify(const Quiver& q) {
  if (q.size() < 4) throw ClassificationError("mutation type D needs at least 4 vertices");
  if (auto v = validate(q, true)) throw ClassificationError("invalid quiver: " + v->message);
  if (!is_connected(q)) throw ClassificationError("quiver is not connected");
  if (is_type_a(q)) throw ClassificationError("quiver is of mutation type A");
  if (auto s = whole_cycle(q)) return *s;
  if (auto s = try_type_i(q)) return *s;
  if (auto s = try_type_ii(q)) return *s;
  if (auto s = try_type_iii(q)) return *s;
  if (auto s = try_type_iv(q)) return *s;
  throw ClassificationError("quiver is not of mutation type D");
}

namespace {

// Labels an attachment with labels offset+1..offset+a. The anchor is the
// last vertex labelled when anchor_last is set, the first otherwise.
void label_attachment(const Quiver& q, const Attachment& att, bool anchor_last, int offset,
                      const ChoicePolicy& policy, Labelling& l) {
  const VertexMask m = mask_of(q, att.vertices);
  Vertex other = att.anchor;
  if (att.vertices.size() > 1) {
    auto ends = end_vertices(q, m);
    std::erase(ends, att.anchor);
    other = policy.choose(ends, att.anchor);
  }
  if (anchor_last) label_subquiver(q, m, other, att.anchor, offset, policy, l);
  else label_subquiver(q, m, att.anchor, other, offset, policy, l);
}

}  // namespace

Labelling label_type_d(const Quiver& q, const TypeDStructure& s, const ChoicePolicy& policy) {
  const int n = q.size();
  if (s.n != n) throw std::invalid_argument("structure does not belong to this quiver");
  Labelling l;
  l.labels.assign(n, 0);
  switch (s.kind) {
    case DKind::I:
      label_attachment(q, s.attachments.at(0), true, 0, policy, l);
      l.labels[s.fork.first] = n - 1;
      l.labels[s.fork.second] = n;
      break;
    case DKind::II:
    case DKind::III: {
      const int m = s.m();
      label_attachment(q, s.attachments.at(0), true, 0, policy, l);
      label_attachment(q, s.attachments.at(1), false, m, policy, l);
      l.labels[s.d1] = n - 1;
      l.labels[s.d2] = n;
      break;
    }
    case DKind::IV: {
      int next = 1;
      for (Vertex x : s.central_cycle) {
        l.labels[x] = next;
        auto spike = std::find_if(s.spikes.begin(), s.spikes.end(),
                                  [&](const Spike& sp) { return sp.tail == x; });
        if (spike == s.spikes.end()) {
          next = next + 1;
          continue;
        }
        const auto& att = s.attachments.at(spike - s.spikes.begin());
        label_attachment(q, att, true, next, policy, l);
        next = next + static_cast<int>(att.vertices.size()) + 1;
      }
      break;
    }
  }
  if (!l.is_bijection()) throw std::logic_error("type D labelling is not a bijection");
  return l;
}

Root doubled_tail_root(int n, int p) {
  if (p < 1 || p > n - 1) throw std::out_of_range("doubled_tail_root: position out of range");
  Root r(n, 0);
  for (int i = 1; i <= n - 2; ++i) r[i - 1] = i < p ? 1 : 2;
  r[n - 2] = 1;
  r[n - 1] = 1;
  return r;
}

CompanionBasis companion_basis_type_d(const Quiver& q, const TypeDStructure& s, const Labelling& l) {
  const int n = q.size();
  CompanionBasis b{CartanType::D(n), std::vector<Root>(n)};
  std::vector<VertexRole> role(n);
  for (const Attachment& att : s.attachments) {
    const auto part = roles(q, l, mask_of(q, att.vertices));
    for (Vertex v : att.vertices) role[v] = part[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    const int i = l.label_of(v);
    b.roots[v] = role[v].primary ? simple_root_sum(n, i, role[v].complementary_partner)
                                 : simple_root(n, i);
  }
  auto set_label = [&](int label, Root r) { b.roots[l.vertex_of(label)] = std::move(r); };

  switch (s.kind) {
    case DKind::I:
      break;
    case DKind::III:
      set_label(s.m(), simple_root_sum(n, s.m(), n - 1));
      [[fallthrough]];
    case DKind::II: {
      const int m = s.m();
      set_label(n - 1, simple_root_sum(n, m + 1, n - 2) + simple_root(n, n - 1));
      set_label(n, simple_root_sum(n, m + 1, n - 2) + simple_root(n, n));
      break;
    }
    case DKind::IV: {
      const int r = s.r();
      const bool every_arrow_spiked = r == s.m();
      for (int j = 0; j < r; ++j) {
        const int p = l.label_of(s.spikes[j].tail);
        const int a = static_cast<int>(s.attachments[j].vertices.size());
        if (every_arrow_spiked && j == r - 1) set_label(p, doubled_tail_root(n, p));
        else set_label(p, simple_root_sum(n, p, p + a));
      }
      set_label(n, simple_root_sum(n, 1, n - 2) + simple_root(n, n));
      break;
    }
  }
  return b;
}

namespace {

Labelling identity_labelling(int n) {
  Labelling l;
  for (int v = 0; v < n; ++v) l.labels.push_back(v + 1);
  return l;
}

}  // namespace

IntermediateQuiver intermediate_quiver(IntermediateKind kind, const IntermediateParams& params) {
  const int n = params.n;
  if (n < 4) throw std::invalid_argument("intermediate quivers need n >= 4");
  IntermediateQuiver out;
  out.labelling = identity_labelling(n);
  out.basis = simple_system(CartanType::D(n));
  auto set_label = [&](int label, Root r) { out.basis.roots[label - 1] = std::move(r); };

  // Mutation at label x (1-based) is mutation at vertex x - 1.
  auto push = [&](int label, BasisMutation dir) { out.replay.push_back({label - 1, dir}); };

  switch (kind) {
    case IntermediateKind::double_triangle: {
      const int m = params.m;
      if (m < 1 || m > n - 3) throw std::invalid_argument("double_triangle requires 1 <= m <= n-3");
      for (int x = n - 2; x >= m + 1; --x) push(x, BasisMutation::outward);
      set_label(n - 1, simple_root_sum(n, m + 1, n - 1));
      set_label(n, simple_root_sum(n, m + 1, n - 2) + simple_root(n, n));
      break;
    }
    case IntermediateKind::oriented_cycle:
    case IntermediateKind::spiked_cycle: {
      for (int x = n - 1; x >= 1; --x) push(x, BasisMutation::outward);
      set_label(n, simple_root_sum(n, 1, n - 2) + simple_root(n, n));
      if (kind == IntermediateKind::oriented_cycle) break;

      const auto& sp = params.spikes;
      if (sp.empty()) throw std::invalid_argument("spiked_cycle requires at least one spike");
      if (sp.front().first != 1) throw std::invalid_argument("spiked_cycle: first spike tail must be 1");
      int total = 0;
      bool no_gaps = true;
      for (std::size_t i = 0; i < sp.size(); ++i) {
        auto [p, a] = sp[i];
        if (a < 1) throw std::invalid_argument("spiked_cycle: attachment sizes must be positive");
        if (i + 1 < sp.size()) {
          if (sp[i + 1].first < p + a + 1) throw std::invalid_argument("spiked_cycle: spikes overlap");
          no_gaps = no_gaps && sp[i + 1].first == p + a + 1;
        }
        total += a;
      }
      const auto [p_last, a_last] = sp.back();
      if (p_last + a_last > n) throw std::invalid_argument("spiked_cycle: spikes exceed n");
      const bool every_arrow_spiked = p_last + a_last == n;
      if (every_arrow_spiked && !no_gaps)
        throw std::invalid_argument("spiked_cycle: last spike meets the first one across a gap");
      if (n - total < 3) throw std::invalid_argument("spiked_cycle: central cycle shorter than 3");

      for (std::size_t i = 0; i < sp.size(); ++i) {
        auto [p, a] = sp[i];
        for (int x = p + 1; x <= p + a; ++x) push(x, BasisMutation::inward);
        if (every_arrow_spiked && i + 1 == sp.size()) set_label(p, doubled_tail_root(n, p));
        else set_label(p, simple_root_sum(n, p, p + a));
      }
      break;
    }
  }

  out.quiver = dynkin_d_quiver(n);
  for (const ReplayStep& st : out.replay) out.quiver = mutate(out.quiver, st.vertex);
  return out;
}

}  // namespace cbasis
