#include "cbasis/construct.hpp"

namespace cbasis {

Construction construct(const Quiver& q, const ChoicePolicy& policy, std::optional<EndPair> ends) {
  if (auto v = validate(q, true)) throw ClassificationError("invalid quiver: " + v->message);
  Construction c;
  if (is_type_a(q)) {
    const EndPair pair = ends ? *ends : default_end_pair(q);
    c.family = Family::A;
    c.labelling = label_type_a(q, pair.first, pair.second, policy);
    c.basis = companion_basis_type_a(q, c.labelling);
    return c;
  }
  if (ends) throw std::invalid_argument("an end pair can only be given for type A quivers");
  try {
    c.structure = classify(q);
  } catch (const ClassificationError&) {
    throw ClassificationError("not mutation type A or D");
  }
  c.family = Family::D;
  c.labelling = label_type_d(q, *c.structure, policy);
  c.basis = companion_basis_type_d(q, *c.structure, c.labelling);
  return c;
}

}  // namespace cbasis
