#pragma once

#include <optional>

#include "mag/graph.hpp"

namespace mag {

/// Sources V, targets W and conditioning set Z; the three must be disjoint.
struct SeparationQuery {
  NodeSet sources;
  NodeSet targets;
  NodeSet conditioning;

  // Throws InputError on overlapping sets or a universe mismatch with g.
  void check(const MixedGraph& g) const;
};

/// m-connection between x and y given z, decided by reachability over
/// (node, entered-through-arrowhead) states. Colliders must be ancestors of z,
/// non-colliders must lie outside z. Throws InputError if x == y or x, y in z.
bool m_connected(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z);

/// Same contract as m_connected, decided by enumerating every simple path
/// from x to y. Exponential; intended as a test oracle for small graphs.
bool m_connected_naive(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z);

// One m-connecting path from x to y given z, if any. Depth-first over simple
// paths, so exponential in the worst case.
std::optional<Path> find_m_connecting_path(const MixedGraph& g, NodeId x, NodeId y,
                                           const NodeSet& z);

/// Every (v, w) in sources x targets is m-separated given the conditioning set.
bool m_separated_sets(const MixedGraph& g, const SeparationQuery& q);

/// Smallest separating set for non-adjacent x, y. Candidates are tried by
/// increasing size, lexicographically within a size. Throws InputError if
/// x and y are adjacent.
std::optional<NodeSet> find_separator(const MixedGraph& g, NodeId x, NodeId y);

}  // namespace mag
