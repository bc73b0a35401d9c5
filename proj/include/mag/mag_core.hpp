#pragma once

#include <optional>
#include <vector>

#include "mag/graph.hpp"

namespace mag {

/// Every node with a directed path into x, plus x itself.
NodeSet ancestors(const MixedGraph& g, NodeId x);

/// Union of ancestors(g, v) over v in s.
NodeSet ancestors_of_set(const MixedGraph& g, const NodeSet& s);

// ancestors(g, v) for every v, indexed by v.
std::vector<NodeSet> ancestor_table(const MixedGraph& g);

// Witness for a graph that is not ancestral.
struct AncestralViolation {
  enum class Kind { DirectedCycle, DirectedPathBetweenSpouses };
  Kind kind;
  // DirectedCycle: the cycle, first node not repeated at the end.
  // DirectedPathBetweenSpouses: directed path a -> ... -> b where a <-> b.
  Path path;
};

bool is_ancestral(const MixedGraph& g);
std::optional<AncestralViolation> find_ancestral_violation(const MixedGraph& g);

/// True if some path between x and y has every internal node a collider and
/// an ancestor of x or y. An edge between x and y counts as such a path.
bool inducing_path_exists(const MixedGraph& g, NodeId x, NodeId y);

// Same search, returning one inducing path from x to y.
std::optional<Path> find_inducing_path(const MixedGraph& g, NodeId x, NodeId y);

// Witness for an ancestral graph that is not maximal.
struct MaximalityViolation {
  NodeId x;
  NodeId y;
  Path inducing_path;
};

/// Requires an ancestral graph; throws PreconditionError otherwise.
bool is_maximal(const MixedGraph& g);
// First non-adjacent pair (in index order) joined by an inducing path.
std::optional<MaximalityViolation> find_maximality_violation(const MixedGraph& g);

bool is_mag(const MixedGraph& g);

/// A mixed graph that has been checked to be a maximal ancestral graph.
class Mag {
 public:
  // Throws NotAMagError with the first violation found.
  explicit Mag(MixedGraph g);

  const MixedGraph& graph() const noexcept { return graph_; }
  std::size_t node_count() const noexcept { return graph_.node_count(); }

  friend bool operator==(const Mag&, const Mag&) = default;

 private:
  MixedGraph graph_;
};

}  // namespace mag
