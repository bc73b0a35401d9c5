#include "mag/separation.hpp"

#include <deque>

#include "mag/errors.hpp"
#include "mag/mag_core.hpp"

namespace mag {

void SeparationQuery::check(const MixedGraph& g) const {
  const std::size_t n = g.node_count();
  if (sources.universe() != n || targets.universe() != n || conditioning.universe() != n) {
    throw InputError("query sets do not match the graph's node count");
  }
  if (sources.intersects(targets)) throw InputError("source and target sets overlap");
  if (sources.intersects(conditioning)) throw InputError("source and conditioning sets overlap");
  if (targets.intersects(conditioning)) throw InputError("target and conditioning sets overlap");
}

namespace {

void check_query(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z) {
  g.check_node(x);
  g.check_node(y);
  if (x == y) throw InputError("cannot query a node against itself");
  if (z.universe() != g.node_count()) {
    throw InputError("conditioning set does not match the graph's node count");
  }
  if (z.contains(x) || z.contains(y)) throw InputError("conditioning set contains an endpoint");
}

// Path-local test of the two m-connection clauses at internal node mid.
bool passes(const MixedGraph& g, NodeId prev, NodeId mid, NodeId next, const NodeSet& z,
            const NodeSet& an_z) {
  return is_collider(g, prev, mid, next) ? an_z.contains(mid) : !z.contains(mid);
}

}  // namespace

bool m_connected(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z) {
  check_query(g, x, y, z);
  const std::size_t n = g.node_count();
  const NodeSet an_z = ancestors_of_set(g, z);

  // State 2*v + 1: walk reached v over an edge with an arrowhead at v.
  std::vector<bool> seen(2 * n, false);
  std::deque<std::pair<NodeId, bool>> queue;
  auto push = [&](NodeId v, bool into) {
    const std::size_t s = 2 * v + (into ? 1 : 0);
    if (!seen[s]) {
      seen[s] = true;
      queue.emplace_back(v, into);
    }
  };

  for (NodeId v = 0; v < n; ++v) {
    if (!g.adjacent(x, v)) continue;
    if (v == y) return true;
    push(v, g.arrowhead_at(v, x));
  }
  while (!queue.empty()) {
    const auto [v, into] = queue.front();
    queue.pop_front();
    for (NodeId w = 0; w < n; ++w) {
      if (w == x || !g.adjacent(v, w)) continue;
      const bool collider = into && g.arrowhead_at(v, w);
      const bool open = collider ? an_z.contains(v) : !z.contains(v);
      if (!open) continue;
      if (w == y) return true;
      push(w, g.arrowhead_at(w, v));
    }
  }
  return false;
}

bool m_connected_naive(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& z) {
  check_query(g, x, y, z);
  const NodeSet an_z = ancestors_of_set(g, z);
  bool found = false;
  walk_simple_paths(g, x, [&](const Path& p) {
    if (p.back() != y) return PathAction::Extend;
    bool ok = true;
    for (std::size_t i = 1; i + 1 < p.size() && ok; ++i) {
      ok = passes(g, p[i - 1], p[i], p[i + 1], z, an_z);
    }
    if (ok) {
      found = true;
      return PathAction::Stop;
    }
    return PathAction::Skip;
  });
  return found;
}

std::optional<Path> find_m_connecting_path(const MixedGraph& g, NodeId x, NodeId y,
                                           const NodeSet& z) {
  check_query(g, x, y, z);
  const NodeSet an_z = ancestors_of_set(g, z);
  std::optional<Path> found;
  walk_simple_paths(g, x, [&](const Path& p) {
    const std::size_t k = p.size();
    // the node before the tip just became internal
    if (k >= 3 && !passes(g, p[k - 3], p[k - 2], p[k - 1], z, an_z)) return PathAction::Skip;
    if (p.back() == y) {
      found = p;
      return PathAction::Stop;
    }
    return PathAction::Extend;
  });
  return found;
}

bool m_separated_sets(const MixedGraph& g, const SeparationQuery& q) {
  q.check(g);
  for (NodeId v : q.sources) {
    for (NodeId w : q.targets) {
      if (m_connected(g, v, w, q.conditioning)) return false;
    }
  }
  return true;
}

std::optional<NodeSet> find_separator(const MixedGraph& g, NodeId x, NodeId y) {
  g.check_node(x);
  g.check_node(y);
  if (x == y) throw InputError("cannot separate a node from itself");
  if (g.adjacent(x, y)) {
    throw InputError("'" + g.label(x) + "' and '" + g.label(y) + "' are adjacent");
  }
  std::vector<NodeId> rest;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (v != x && v != y) rest.push_back(v);
  }
  // Lexicographic k-combinations of rest, k = 0, 1, ...
  for (std::size_t k = 0; k <= rest.size(); ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      NodeSet z(g.node_count());
      for (std::size_t i : pick) z.insert(rest[i]);
      if (!m_connected(g, x, y, z)) return z;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == rest.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace mag
