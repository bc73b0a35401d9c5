#include "mag/mag_core.hpp"

#include <algorithm>
#include <deque>

#include "mag/errors.hpp"
#include "mag/graph_io.hpp"

namespace mag {

NodeSet ancestors(const MixedGraph& g, NodeId x) {
  g.check_node(x);
  NodeSet seen(g.node_count());
  seen.insert(x);
  std::vector<NodeId> stack{x};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (!seen.contains(u) && g.has_directed(u, v)) {
        seen.insert(u);
        stack.push_back(u);
      }
    }
  }
  return seen;
}

NodeSet ancestors_of_set(const MixedGraph& g, const NodeSet& s) {
  NodeSet out(g.node_count());
  for (NodeId v : s) out |= ancestors(g, v);
  return out;
}

std::vector<NodeSet> ancestor_table(const MixedGraph& g) {
  std::vector<NodeSet> table;
  table.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) table.push_back(ancestors(g, v));
  return table;
}

namespace {

// Directed path from `from` to `to` (BFS over directed edges), if any.
std::optional<Path> directed_path(const MixedGraph& g, NodeId from, NodeId to) {
  const std::size_t n = g.node_count();
  std::vector<std::optional<NodeId>> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<NodeId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w = 0; w < n; ++w) {
      if (!g.has_directed(v, w)) continue;
      if (w == to) {
        Path p{to};
        for (NodeId cur = v;; cur = *parent[cur]) {
          p.push_back(cur);
          if (cur == from) break;
        }
        std::reverse(p.begin(), p.end());
        return p;
      }
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_ancestral(const MixedGraph& g) {
  const auto an = ancestor_table(g);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      // u -> v with v an ancestor of u closes a cycle
      if (g.has_directed(u, v) && an[u].contains(v)) return false;
      if (u < v && g.has_bidirected(u, v) && (an[u].contains(v) || an[v].contains(u))) {
        return false;
      }
    }
  }
  return true;
}

std::optional<AncestralViolation> find_ancestral_violation(const MixedGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Directed) continue;
    if (auto back = directed_path(g, e.v, e.u)) {
      return AncestralViolation{AncestralViolation::Kind::DirectedCycle, *back};
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Bidirected) continue;
    if (auto p = directed_path(g, e.u, e.v)) {
      return AncestralViolation{AncestralViolation::Kind::DirectedPathBetweenSpouses, *p};
    }
    if (auto p = directed_path(g, e.v, e.u)) {
      return AncestralViolation{AncestralViolation::Kind::DirectedPathBetweenSpouses, *p};
    }
  }
  return std::nullopt;
}

namespace {

// Every internal node of an inducing path needs arrowheads on both of its
// path edges, so past the first step the search only follows bi-directed
// edges through nodes in an(x) | an(y). A node is entered at most once, so the
// BFS tree yields a simple path.
std::optional<Path> search_inducing_path(const MixedGraph& g, NodeId x, NodeId y,
                                         const NodeSet& allowed) {
  const std::size_t n = g.node_count();
  std::vector<std::optional<NodeId>> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<NodeId> queue;
  seen[x] = true;
  seen[y] = true;

  auto trace = [&](NodeId last) {
    Path p{y};
    for (NodeId cur = last;; cur = *parent[cur]) {
      p.push_back(cur);
      if (cur == x) break;
    }
    std::reverse(p.begin(), p.end());
    return p;
  };

  for (NodeId v = 0; v < n; ++v) {
    if (v == x || v == y || !allowed.contains(v) || !g.arrowhead_at(v, x)) continue;
    seen[v] = true;
    parent[v] = x;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    // v is a collider only if the outgoing edge also points into v
    if (g.arrowhead_at(v, y)) return trace(v);
    for (NodeId w = 0; w < n; ++w) {
      if (seen[w] || !allowed.contains(w) || !g.has_bidirected(v, w)) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

void check_pair(const MixedGraph& g, NodeId x, NodeId y) {
  g.check_node(x);
  g.check_node(y);
  if (x == y) throw InputError("endpoints must differ");
}

}  // namespace

std::optional<Path> find_inducing_path(const MixedGraph& g, NodeId x, NodeId y) {
  check_pair(g, x, y);
  if (g.adjacent(x, y)) return Path{x, y};
  return search_inducing_path(g, x, y, ancestors(g, x) | ancestors(g, y));
}

bool inducing_path_exists(const MixedGraph& g, NodeId x, NodeId y) {
  return find_inducing_path(g, x, y).has_value();
}

namespace {

std::optional<MaximalityViolation> first_uninduced_gap(const MixedGraph& g,
                                                       const std::vector<NodeSet>& an) {
  for (NodeId x = 0; x < g.node_count(); ++x) {
    for (NodeId y = x + 1; y < g.node_count(); ++y) {
      if (g.adjacent(x, y)) continue;
      if (auto p = search_inducing_path(g, x, y, an[x] | an[y])) {
        return MaximalityViolation{x, y, std::move(*p)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MaximalityViolation> find_maximality_violation(const MixedGraph& g) {
  if (!is_ancestral(g)) throw PreconditionError("maximality is only defined for ancestral graphs");
  return first_uninduced_gap(g, ancestor_table(g));
}

bool is_maximal(const MixedGraph& g) { return !find_maximality_violation(g).has_value(); }

bool is_mag(const MixedGraph& g) {
  if (!is_ancestral(g)) return false;
  return !first_uninduced_gap(g, ancestor_table(g)).has_value();
}

Mag::Mag(MixedGraph g) : graph_(std::move(g)) {
  if (auto bad = find_ancestral_violation(graph_)) {
    throw NotAMagError("not ancestral: " + describe(graph_, *bad));
  }
  if (auto gap = first_uninduced_gap(graph_, ancestor_table(graph_))) {
    throw NotAMagError("not maximal: inducing path " + format_path(graph_, gap->inducing_path) +
                       " between non-adjacent nodes");
  }
}

}  // namespace mag
