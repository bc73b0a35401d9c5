#pragma once

#include <compare>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mag/errors.hpp"
#include "mag/graph.hpp"
#include "mag/mag_core.hpp"

namespace mag {

// a *-> z <-* b with a, b non-adjacent; stored with a < b.
struct UnshieldedCollider {
  NodeId a;
  NodeId z;
  NodeId b;

  friend auto operator<=>(const UnshieldedCollider&, const UnshieldedCollider&) = default;
};

/// All unshielded colliders, sorted.
std::vector<UnshieldedCollider> unshielded_colliders(const MixedGraph& g);

/// Whether p = (start, ..., z, end) discriminates z: z is interior and next to
/// `end`, p has at least three edges, start and end are non-adjacent, and
/// every node strictly between start and z is a collider on p and a parent of
/// end. Throws InputError if p is not a simple path of g.
bool is_discriminating_path(const MixedGraph& g, const Path& p, NodeId z);

/// Whether some discriminating path for x ends with (..., z, x, y).
///
/// Requires an arrowhead at x on the z-x edge and an x-y edge; throws
/// InputError otherwise. z must be a collider on such a path, so a parent z
/// of x never yields one. Otherwise the search walks bi-directed edges from z
/// through parents of y and succeeds at the first reached node s that has a
/// neighbour q pointing into s with q non-adjacent to y. Linear in the
/// number of edges.
bool discriminating_path_exists_for_triple(const MixedGraph& g, NodeId z, NodeId x, NodeId y);

// Same search, returning the discriminating path found.
std::optional<Path> find_discriminating_path_for_triple(const MixedGraph& g, NodeId z, NodeId x,
                                                        NodeId y);

/// Markov equivalence via same adjacencies, same unshielded colliders, and
/// matching collider status on every node sequence that is a discriminating
/// path in both graphs. Throws InputError when node sets differ.
bool markov_equivalent(const Mag& m1, const Mag& m2);

// markov_equivalent with the first failing condition and its witness.
Verdict explain_markov_equivalence(const Mag& m1, const Mag& m2);

/// Markov equivalence by comparing m-connection for every pair and every
/// conditioning subset of the remaining nodes. Exponential in n.
bool markov_equivalent_bruteforce(const Mag& m1, const Mag& m2);

/// m-connection answers for every query (x < y, Z subset of the other
/// nodes), in a fixed order. Two graphs on the same nodes are Markov
/// equivalent exactly when their signatures are equal. Limited to 16 nodes.
using SeparationSignature = boost::dynamic_bitset<>;
SeparationSignature separation_signature(const MixedGraph& g);

}  // namespace mag
