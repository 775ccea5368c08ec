#include "cbasis/json_io.hpp"

namespace cbasis {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw FormatError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<std::pair<int, int>> int_pairs(const Json& j, const char* name) {
  const Json& arr = field(j, name);
  if (!arr.is_array()) throw FormatError(std::string("field \"") + name + "\" must be an array");
  std::vector<std::pair<int, int>> out;
  for (const Json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw FormatError(std::string("entries of \"") + name + "\" must be integer pairs");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.tail, a.head});
  return {{"n", q.size()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j, bool simply_laced) {
  const int n = int_field(j, "n");
  if (n < 1) throw FormatError("\"n\" must be positive");
  IntMatrix b(n, n);
  for (auto [s, d] : int_pairs(j, "arrows")) {
    if (s < 0 || s >= n || d < 0 || d >= n) throw FormatError("arrow endpoint out of range");
    if (s == d) throw FormatError("loops are not allowed");
    if (simply_laced && b(s, d) != 0)
      throw FormatError("arrows " + std::to_string(s) + " and " + std::to_string(d) +
                        " are parallel or form a 2-cycle");
    b(s, d) += 1;
    b(d, s) -= 1;
  }
  return Quiver::from_matrix(b);
}

Triangulation triangulation_from_json(const Json& j) {
  Triangulation t{int_field(j, "polygon_size"), int_pairs(j, "diagonals")};
  if (auto err = validate(t)) throw FormatError(*err);
  return t;
}

Json triangulation_to_json(const Triangulation& t) {
  Json d = Json::array();
  for (auto [a, b] : t.diagonals) d.push_back({a, b});
  return {{"polygon_size", t.polygon_size}, {"diagonals", d}};
}

Json labelling_to_json(const Labelling& l) {
  Json strings = Json::array(), choices = Json::array();
  for (const auto& s : l.strings) strings.push_back(s.vertices);
  for (const auto& c : l.choices) choices.push_back({c.first, c.second});
  return {{"labels", l.labels}, {"strings", strings}, {"choices", choices}};
}

Json basis_to_json(const CompanionBasis& b, const Labelling* l) {
  Json rows = Json::array();
  if (l) {
    for (int i = 1; i <= static_cast<int>(b.size()); ++i) rows.push_back(b.roots.at(l->vertex_of(i)));
  } else {
    for (const Root& r : b.roots) rows.push_back(r);
  }
  Json out = {{"type", {{"family", to_string(b.type.family())}, {"rank", b.type.rank()}}},
              {"basis", rows}};
  if (l) out["labels"] = l->labels;
  return out;
}

CompanionBasis basis_from_json(const Json& j) {
  const Json& type = field(j, "type");
  CartanType t = CartanType::A(1);
  try {
    t = CartanType(family_from_string(field(type, "family").get<std::string>()), int_field(type, "rank"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("invalid type: ") + e.what());
  }
  const Json& rows = field(j, "basis");
  if (!rows.is_array() || static_cast<int>(rows.size()) != t.rank())
    throw FormatError("\"basis\" must hold one row per vertex");
  std::vector<Root> parsed;
  for (const Json& r : rows) {
    if (!r.is_array() || static_cast<int>(r.size()) != t.rank())
      throw FormatError("basis rows must have one coefficient per simple root");
    Root root;
    for (const Json& c : r) {
      if (!c.is_number_integer()) throw FormatError("basis coefficients must be integers");
      root.push_back(c.get<Int>());
    }
    parsed.push_back(std::move(root));
  }
  CompanionBasis b{t, parsed};
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_array() || static_cast<int>(labels.size()) != t.rank())
      throw FormatError("\"labels\" must give one label per vertex");
    Labelling l;
    for (const Json& x : labels) {
      if (!x.is_number_integer()) throw FormatError("labels must be integers");
      l.labels.push_back(x.get<int>());
    }
    if (!l.is_bijection()) throw FormatError("\"labels\" must be a bijection onto 1..n");
    for (Vertex v = 0; v < t.rank(); ++v) b.roots[v] = parsed[l.labels[v] - 1];
  }
  return b;
}

Json structure_to_json(const TypeDStructure& s) {
  Json out = {{"type", "D"}, {"kind", to_string(s.kind)}};
  Json skeleton;
  switch (s.kind) {
    case DKind::I:
      skeleton = {{"a", s.fork.first}, {"b", s.fork.second}, {"c1", s.hub}};
      break;
    case DKind::II:
    case DKind::III:
      skeleton = {{"c1", s.c1}, {"c2", s.c2}, {"d1", s.d1}, {"d2", s.d2}};
      break;
    case DKind::IV: {
      Json spikes = Json::array();
      for (const Spike& sp : s.spikes) spikes.push_back({{"p", sp.tail}, {"s", sp.head}, {"c", sp.apex}});
      skeleton = {{"central_cycle", s.central_cycle}, {"spikes", spikes}};
      break;
    }
  }
  Json attachments = Json::array();
  for (const Attachment& a : s.attachments)
    attachments.push_back({{"anchor", a.anchor}, {"vertices", a.vertices}});
  if (s.kind != DKind::I) out["m"] = s.m();
  out["r"] = s.r();
  out["a"] = s.attachment_sizes();
  if (s.kind == DKind::IV) out["d"] = s.gaps();
  out["skeleton"] = skeleton;
  out["attachments"] = attachments;
  return out;
}

Json verification_to_json(const std::optional<VerificationFailure>& f) {
  if (!f) return "ok";
  return {{"check", f->check},
          {"pair", {f->x, f->y}},
          {"expected", f->expected},
          {"got", f->got},
          {"message", f->message}};
}

Json vectors_to_json(const std::set<DimensionVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

}  // namespace cbasis
