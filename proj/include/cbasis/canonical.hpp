#pragma once

// Canonical forms of small quivers up to vertex renumbering, and
// breadth-first enumeration of mutation classes.

#include <string>
#include <vector>

#include "cbasis/quiver.hpp"

namespace cbasis {

/// Lexicographically least exchange matrix over all renumberings that
/// respect a colour-refinement ordering of the vertices. Two quivers are
/// isomorphic iff their canonical keys agree.
std::string canonical_key(const Quiver& q);
Quiver canonical_form(const Quiver& q);

/// Canonical forms of every quiver mutation-equivalent to seed, in BFS order.
/// Throws std::length_error if more than max_size classes are found.
std::vector<Quiver> mutation_class(const Quiver& seed, std::size_t max_size = 1'000'000);

}  // namespace cbasis
