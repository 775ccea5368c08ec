#pragma once

#include <optional>

#include "cbasis/companion.hpp"
#include "cbasis/quiver.hpp"
#include "cbasis/type_a.hpp"
#include "cbasis/type_d.hpp"

namespace cbasis {

/// Labelled quiver together with its companion basis.
struct Construction {
  Family family = Family::A;
  /// Set for type D only.
  std::optional<TypeDStructure> structure;
  Labelling labelling;
  CompanionBasis basis;
};

/// Labels q and builds its companion basis: the type-A procedure when
/// is_type_a(q) holds, otherwise the type-D procedure for its family.
/// `ends` picks the top-level end pair for type A (default_end_pair otherwise).
/// Throws ClassificationError when q is of neither mutation type.
Construction construct(const Quiver& q, const ChoicePolicy& policy = {},
                       std::optional<EndPair> ends = std::nullopt);

}  // namespace cbasis
