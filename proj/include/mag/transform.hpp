#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mag/errors.hpp"
#include "mag/graph.hpp"
#include "mag/mag_core.hpp"

namespace mag {

enum class MoveKind : std::uint8_t {
  DirToBi,  // x -> y becomes x <-> y; needs x -> y blanketed
  BiToDir,  // x <-> y becomes x -> y; needs x <-> y blanketed against x
  Reverse,  // x -> y becomes y -> x; needs x -> y screened
};

std::string_view to_string(MoveKind kind);
// Accepts "dir-to-bi", "bi-to-dir", "reverse"; throws InputError otherwise.
MoveKind parse_move_kind(std::string_view text);

/// One single-edge replacement. For BiToDir, x is the node the edge is
/// blanketed against and becomes the tail.
struct MoveDescriptor {
  MoveKind kind;
  NodeId x;
  NodeId y;

  friend auto operator<=>(const MoveDescriptor&, const MoveDescriptor&) = default;
};

/// x -> y is blanketed: no other directed path from x to y, Pa(x) within
/// Pa(y), and each spouse z of x is a spouse of y or a parent of y with no
/// discriminating path for x ending (z, x, y). The reason names the failing
/// clause. Throws InputError if x -> y is not an edge.
Verdict check_blanketed_directed(const Mag& m, NodeId x, NodeId y);
bool is_blanketed_directed(const Mag& m, NodeId x, NodeId y);

/// x <-> y is blanketed against x: the parent and spouse clauses above with
/// x in the first role. y itself is not counted among x's spouses. Throws
/// InputError if x <-> y is not an edge.
Verdict check_blanketed_bidirected_against(const Mag& m, NodeId x, NodeId y);
bool is_blanketed_bidirected_against(const Mag& m, NodeId x, NodeId y);

/// x -> y is screened: Pa(y) = Pa(x) + {x} and Sp(y) = Sp(x). Throws
/// InputError if x -> y is not an edge.
Verdict check_screened(const Mag& m, NodeId x, NodeId y);
bool is_screened(const Mag& m, NodeId x, NodeId y);

// The predicate that licenses mv.
Verdict check_move(const Mag& m, const MoveDescriptor& mv);

/// Applies mv after checking its predicate (MoveRejected on failure) and
/// re-validates the result as a MAG (TheoremViolation on failure).
Mag apply_move(const Mag& m, const MoveDescriptor& mv);

// The graph mv would produce, without any checks beyond the edge existing.
MixedGraph replace_edge(const MixedGraph& g, const MoveDescriptor& mv);

/// Every move whose predicate holds, sorted by kind then endpoints.
std::vector<MoveDescriptor> legal_moves(const Mag& m);

/// Edges of m1 whose mark differs in m2, in endpoint-pair order. Both graphs
/// must share nodes and adjacencies; throws InputError otherwise.
using DeltaSet = std::vector<Edge>;
DeltaSet delta(const Mag& m1, const Mag& m2);

struct Closure {
  std::vector<std::string> keys;  // sorted
  std::vector<Mag> members;       // parallel to keys
  bool truncated = false;
};

/// Breadth-first closure of m under legal_moves, stopping once max_size
/// graphs are known. truncated is set when a further graph was reachable.
/// Throws InputError if max_size is zero.
Closure equivalence_class_closure(const Mag& m, std::size_t max_size);

}  // namespace mag
