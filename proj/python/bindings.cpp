#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbasis/canonical.hpp"
#include "cbasis/construct.hpp"
#include "cbasis/json_io.hpp"

namespace py = pybind11;
using namespace cbasis;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Quiver make_quiver(int n, const std::vector<std::pair<int, int>>& arrows) {
  Json j = {{"n", n}, {"arrows", Json::array()}};
  for (auto [s, d] : arrows) j["arrows"].push_back({s, d});
  return quiver_from_json(j);
}

CompanionBasis make_basis(const std::string& family, const std::vector<Root>& rows) {
  return CompanionBasis{CartanType(family_from_string(family), static_cast<int>(rows.size())), rows};
}

std::vector<std::pair<int, int>> arrow_pairs(const Quiver& q) {
  std::vector<std::pair<int, int>> out;
  for (const Arrow& a : q.arrows()) out.emplace_back(a.tail, a.head);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Companion bases for quivers of mutation type A and D";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<ClassificationError>(m, "ClassificationError", PyExc_ValueError);

  py::class_<Quiver>(m, "Quiver")
      .def(py::init(&make_quiver), py::arg("n"), py::arg("arrows"))
      .def_static("from_json", [](const std::string& s) { return quiver_from_json(parse_json(s)); })
      .def("to_json", [](const Quiver& q) { return quiver_to_json(q).dump(); })
      .def_property_readonly("n", &Quiver::size)
      .def("arrows", &arrow_pairs)
      .def("mutate", [](const Quiver& q, int k) {
        if (!q.contains(k)) throw py::index_error("mutation vertex out of range");
        return mutate(q, k);
      })
      .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
      .def("__repr__", [](const Quiver& q) { return "Quiver(" + quiver_to_json(q).dump() + ")"; });

  m.def("dynkin_quiver", [](const std::string& family, int rank) {
    return dynkin_quiver(CartanType(family_from_string(family), rank));
  });
  m.def("random_mutation_walk", [](const Quiver& q, int length, std::uint64_t seed) {
    auto w = random_mutation_walk(q, length, seed);
    return py::make_tuple(w.result, w.sequence);
  });
  m.def("is_type_a", [](const Quiver& q) { return is_type_a(q); });
  m.def("classify", [](const Quiver& q) {
    if (is_type_a(q)) return to_py({{"type", "A"}});
    return to_py(structure_to_json(classify(q)));
  });
  m.def("canonical_key", [](const Quiver& q) { return py::bytes(canonical_key(q)); });

  m.def(
      "construct",
      [](const Quiver& q, const std::string& policy) {
        if (policy != "smallest" && policy != "largest")
          throw py::value_error("policy must be 'smallest' or 'largest'");
        ChoicePolicy p;
        p.rule = policy == "largest" ? ChoicePolicy::Rule::largest_id : ChoicePolicy::Rule::smallest_id;
        const Construction c = construct(q, p);
        py::dict d;
        d["family"] = to_string(c.family);
        d["labels"] = c.labelling.labels;
        d["basis"] = c.basis.roots;
        d["classification"] = c.structure ? to_py(structure_to_json(*c.structure)) : to_py({{"type", "A"}});
        return d;
      },
      py::arg("quiver"), py::arg("policy") = "smallest");

  m.def("verify", [](const Quiver& q, const std::string& family, const std::vector<Root>& rows) {
    return to_py(verification_to_json(verify(q, make_basis(family, rows))));
  });
  m.def("mutate_basis", [](const Quiver& q, const std::string& family, const std::vector<Root>& rows, int k,
                           const std::string& direction) {
    return mutate_basis(q, make_basis(family, rows), k, basis_mutation_from_string(direction)).roots;
  });
  m.def("dimension_vectors", [](const Quiver& q, const std::string& family, const std::vector<Root>& rows) {
    const auto vs = dimension_vectors(q, make_basis(family, rows));
    return std::vector<DimensionVector>(vs.begin(), vs.end());
  });
  m.def("strings_oracle", [](const Quiver& q) {
    const auto vs = strings_oracle(q);
    return std::vector<DimensionVector>(vs.begin(), vs.end());
  });
  m.def("positive_roots", [](const std::string& family, int rank) {
    return positive_roots(CartanType(family_from_string(family), rank));
  });
}
