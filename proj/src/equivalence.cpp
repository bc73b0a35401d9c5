#include "mag/equivalence.hpp"

#include <algorithm>
#include <deque>

#include "mag/graph_io.hpp"
#include "mag/separation.hpp"

namespace mag {

std::vector<UnshieldedCollider> unshielded_colliders(const MixedGraph& g) {
  std::vector<UnshieldedCollider> out;
  const std::size_t n = g.node_count();
  for (NodeId z = 0; z < n; ++z) {
    for (NodeId a = 0; a < n; ++a) {
      if (a == z || !g.arrowhead_at(z, a)) continue;
      for (NodeId b = a + 1; b < n; ++b) {
        if (b == z || !g.arrowhead_at(z, b) || g.adjacent(a, b)) continue;
        out.push_back({a, z, b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_discriminating_path(const MixedGraph& g, const Path& p, NodeId z) {
  check_path(g, p);
  g.check_node(z);
  const std::size_t last = p.size() - 1;
  if (p.size() < 4) return false;
  if (p[last - 1] != z) return false;
  const NodeId start = p.front();
  const NodeId end = p.back();
  if (g.adjacent(start, end)) return false;
  for (std::size_t i = 1; i + 1 < last; ++i) {
    if (!is_collider(g, p[i - 1], p[i], p[i + 1])) return false;
    if (!g.has_directed(p[i], end)) return false;
  }
  return true;
}

std::optional<Path> find_discriminating_path_for_triple(const MixedGraph& g, NodeId z, NodeId x,
                                                        NodeId y) {
  g.check_node(z);
  g.check_node(x);
  g.check_node(y);
  if (z == x || x == y || z == y) throw InputError("triple nodes must be distinct");
  if (!g.arrowhead_at(x, z)) {
    throw InputError("edge between '" + g.label(z) + "' and '" + g.label(x) +
                     "' must have an arrowhead at '" + g.label(x) + "'");
  }
  if (!g.adjacent(x, y)) {
    throw InputError("no edge between '" + g.label(x) + "' and '" + g.label(y) + "'");
  }
  // z sits between the start and x, so it must be a collider and a parent of y.
  if (!g.has_bidirected(z, x) || !g.has_directed(z, y)) return std::nullopt;

  const std::size_t n = g.node_count();
  auto eligible = [&](NodeId q) { return q != x && g.has_directed(q, y); };
  std::vector<std::optional<NodeId>> toward_z(n);
  std::vector<bool> seen(n, false);
  std::deque<NodeId> queue{z};
  seen[z] = true;
  while (!queue.empty()) {
    const NodeId s = queue.front();
    queue.pop_front();
    for (NodeId q = 0; q < n; ++q) {
      if (q == x || q == y || !g.arrowhead_at(s, q)) continue;
      if (!g.adjacent(q, y)) {
        Path p{q};
        for (NodeId cur = s;; cur = *toward_z[cur]) {
          p.push_back(cur);
          if (cur == z) break;
        }
        p.push_back(x);
        p.push_back(y);
        return p;
      }
      if (!seen[q] && g.has_bidirected(s, q) && eligible(q)) {
        seen[q] = true;
        toward_z[q] = s;
        queue.push_back(q);
      }
    }
  }
  return std::nullopt;
}

bool discriminating_path_exists_for_triple(const MixedGraph& g, NodeId z, NodeId x, NodeId y) {
  return find_discriminating_path_for_triple(g, z, x, y).has_value();
}

namespace {

void check_same_nodes(const MixedGraph& a, const MixedGraph& b) {
  if (!a.same_nodes(b)) throw InputError("graphs are defined over different node sets");
}

std::string describe_collider(const MixedGraph& g, const UnshieldedCollider& c) {
  return format_path(g, {c.a, c.z, c.b});
}

// First node sequence that discriminates its second-to-last node in both
// graphs while that node's collider status differs between them.
std::optional<Path> conflicting_discriminating_path(const MixedGraph& g1, const MixedGraph& g2) {
  std::optional<Path> conflict;
  for (NodeId start = 0; start < g1.node_count() && !conflict; ++start) {
    walk_simple_paths(g1, start, [&](const Path& p) {
      if (p.size() < 4) return PathAction::Extend;
      const NodeId z = p[p.size() - 2];
      if (is_discriminating_path(g1, p, z) && is_discriminating_path(g2, p, z)) {
        const NodeId before = p[p.size() - 3];
        const NodeId after = p.back();
        if (is_collider(g1, before, z, after) != is_collider(g2, before, z, after)) {
          conflict = p;
          return PathAction::Stop;
        }
      }
      return PathAction::Extend;
    });
  }
  return conflict;
}

}  // namespace

Verdict explain_markov_equivalence(const Mag& m1, const Mag& m2) {
  const MixedGraph& g1 = m1.graph();
  const MixedGraph& g2 = m2.graph();
  check_same_nodes(g1, g2);

  for (NodeId a = 0; a < g1.node_count(); ++a) {
    for (NodeId b = a + 1; b < g1.node_count(); ++b) {
      if (g1.adjacent(a, b) != g2.adjacent(a, b)) {
        return Verdict::no("different adjacencies: " + g1.label(a) + " and " + g1.label(b) +
                           " are adjacent in the " + (g1.adjacent(a, b) ? "first" : "second") +
                           " graph only");
      }
    }
  }

  const auto c1 = unshielded_colliders(g1);
  const auto c2 = unshielded_colliders(g2);
  if (c1 != c2) {
    for (const auto& c : c1) {
      if (!std::binary_search(c2.begin(), c2.end(), c)) {
        return Verdict::no("unshielded collider " + describe_collider(g1, c) +
                           " in the first graph only");
      }
    }
    for (const auto& c : c2) {
      if (!std::binary_search(c1.begin(), c1.end(), c)) {
        return Verdict::no("unshielded collider " + describe_collider(g2, c) +
                           " in the second graph only");
      }
    }
  }

  if (auto p = conflicting_discriminating_path(g1, g2)) {
    const NodeId z = (*p)[p->size() - 2];
    const bool first = is_collider(g1, (*p)[p->size() - 3], z, p->back());
    return Verdict::no("discriminating path " + format_sequence(g1, *p) + " for " + g1.label(z) +
                       ": " + (first ? "collider" : "non-collider") + " in the first graph, " +
                       (first ? "non-collider" : "collider") + " in the second");
  }
  return Verdict::yes();
}

bool markov_equivalent(const Mag& m1, const Mag& m2) {
  return explain_markov_equivalence(m1, m2).holds;
}

namespace {

// Calls visit(x, y, z) for every x < y and every subset z of the other nodes,
// subsets in increasing bitmask order over the remaining nodes. Stops early
// when visit returns false.
template <typename Visit>
bool for_each_query(std::size_t n, Visit&& visit) {
  for (NodeId x = 0; x < n; ++x) {
    for (NodeId y = x + 1; y < n; ++y) {
      std::vector<NodeId> rest;
      for (NodeId v = 0; v < n; ++v) {
        if (v != x && v != y) rest.push_back(v);
      }
      const std::uint64_t subsets = std::uint64_t{1} << rest.size();
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        NodeSet z(n);
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (mask >> i & 1U) z.insert(rest[i]);
        }
        if (!visit(x, y, z)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool markov_equivalent_bruteforce(const Mag& m1, const Mag& m2) {
  const MixedGraph& g1 = m1.graph();
  const MixedGraph& g2 = m2.graph();
  check_same_nodes(g1, g2);
  return for_each_query(g1.node_count(), [&](NodeId x, NodeId y, const NodeSet& z) {
    return m_connected(g1, x, y, z) == m_connected(g2, x, y, z);
  });
}

SeparationSignature separation_signature(const MixedGraph& g) {
  const std::size_t n = g.node_count();
  if (n > 16) throw InputError("separation signatures are limited to 16 nodes");
  SeparationSignature sig;
  for_each_query(n, [&](NodeId x, NodeId y, const NodeSet& z) {
    sig.push_back(m_connected(g, x, y, z));
    return true;
  });
  return sig;
}

}  // namespace mag
