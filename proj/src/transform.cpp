#include "mag/transform.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mag/equivalence.hpp"
#include "mag/graph_io.hpp"

namespace mag {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::DirToBi: return "dir-to-bi";
    case MoveKind::BiToDir: return "bi-to-dir";
    case MoveKind::Reverse: return "reverse";
  }
  return "?";
}

MoveKind parse_move_kind(std::string_view text) {
  for (MoveKind k : {MoveKind::DirToBi, MoveKind::BiToDir, MoveKind::Reverse}) {
    if (to_string(k) == text) return k;
  }
  throw InputError("unknown move kind '" + std::string(text) +
                   "' (expected dir-to-bi, bi-to-dir or reverse)");
}

namespace {

void require_directed(const MixedGraph& g, NodeId x, NodeId y) {
  g.check_node(x);
  g.check_node(y);
  if (x == y || !g.has_directed(x, y)) {
    throw InputError("no edge " + g.label(x) + "→" + g.label(y));
  }
}

void require_bidirected(const MixedGraph& g, NodeId x, NodeId y) {
  g.check_node(x);
  g.check_node(y);
  if (x == y || !g.has_bidirected(x, y)) {
    throw InputError("no edge " + g.label(x) + "↔" + g.label(y));
  }
}

// Directed path x -> c -> ... -> y avoiding the edge x -> y itself.
std::optional<Path> detour(const MixedGraph& g, NodeId x, NodeId y) {
  const std::size_t n = g.node_count();
  std::vector<std::optional<NodeId>> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<NodeId> queue;
  seen[x] = true;
  for (NodeId c = 0; c < n; ++c) {
    if (c != y && g.has_directed(x, c)) {
      seen[c] = true;
      parent[c] = x;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    if (g.has_directed(v, y)) {
      Path p{y};
      for (NodeId cur = v;; cur = *parent[cur]) {
        p.push_back(cur);
        if (cur == x) break;
      }
      std::reverse(p.begin(), p.end());
      return p;
    }
    for (NodeId w = 0; w < n; ++w) {
      if (!seen[w] && w != y && g.has_directed(v, w)) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

// Parent and spouse clauses shared by both blanket predicates.
Verdict check_blanket_clauses(const MixedGraph& g, NodeId x, NodeId y, const std::string& what) {
  const NodeSet pa_y = g.parents(y);
  const NodeSet sp_y = g.spouses(y);
  for (NodeId z : g.parents(x)) {
    if (!pa_y.contains(z)) {
      return Verdict::no(what + ": parent " + g.label(z) + " of " + g.label(x) +
                         " is not a parent of " + g.label(y));
    }
  }
  for (NodeId z : g.spouses(x)) {
    if (z == y || sp_y.contains(z)) continue;
    if (!pa_y.contains(z)) {
      return Verdict::no(what + ": spouse " + g.label(z) + " of " + g.label(x) +
                         " is neither a spouse nor a parent of " + g.label(y));
    }
    if (auto p = find_discriminating_path_for_triple(g, z, x, y)) {
      return Verdict::no(what + ": spouse " + g.label(z) + " of " + g.label(x) +
                         " is a parent of " + g.label(y) + " but " + format_sequence(g, *p) +
                         " is a discriminating path for " + g.label(x));
    }
  }
  return Verdict::yes();
}

}  // namespace

Verdict check_blanketed_directed(const Mag& m, NodeId x, NodeId y) {
  const MixedGraph& g = m.graph();
  require_directed(g, x, y);
  if (auto p = detour(g, x, y)) {
    return Verdict::no("not blanketed: directed path " + format_path(g, *p) +
                       " other than the edge itself");
  }
  return check_blanket_clauses(g, x, y, "not blanketed");
}

bool is_blanketed_directed(const Mag& m, NodeId x, NodeId y) {
  return check_blanketed_directed(m, x, y).holds;
}

Verdict check_blanketed_bidirected_against(const Mag& m, NodeId x, NodeId y) {
  const MixedGraph& g = m.graph();
  require_bidirected(g, x, y);
  return check_blanket_clauses(g, x, y, "not blanketed against " + g.label(x));
}

bool is_blanketed_bidirected_against(const Mag& m, NodeId x, NodeId y) {
  return check_blanketed_bidirected_against(m, x, y).holds;
}

Verdict check_screened(const Mag& m, NodeId x, NodeId y) {
  const MixedGraph& g = m.graph();
  require_directed(g, x, y);
  const NodeSet pa_x = g.parents(x);
  const NodeSet pa_y = g.parents(y);
  for (NodeId z : pa_x) {
    if (!pa_y.contains(z)) {
      return Verdict::no("not screened: parent " + g.label(z) + " of " + g.label(x) +
                         " is not a parent of " + g.label(y));
    }
  }
  for (NodeId z : pa_y) {
    if (z != x && !pa_x.contains(z)) {
      return Verdict::no("not screened: parent " + g.label(z) + " of " + g.label(y) +
                         " is neither " + g.label(x) + " nor a parent of " + g.label(x));
    }
  }
  const NodeSet sp_x = g.spouses(x);
  const NodeSet sp_y = g.spouses(y);
  for (NodeId z : sp_x) {
    if (!sp_y.contains(z)) {
      return Verdict::no("not screened: spouse " + g.label(z) + " of " + g.label(x) +
                         " is not a spouse of " + g.label(y));
    }
  }
  for (NodeId z : sp_y) {
    if (!sp_x.contains(z)) {
      return Verdict::no("not screened: spouse " + g.label(z) + " of " + g.label(y) +
                         " is not a spouse of " + g.label(x));
    }
  }
  return Verdict::yes();
}

bool is_screened(const Mag& m, NodeId x, NodeId y) { return check_screened(m, x, y).holds; }

Verdict check_move(const Mag& m, const MoveDescriptor& mv) {
  switch (mv.kind) {
    case MoveKind::DirToBi: return check_blanketed_directed(m, mv.x, mv.y);
    case MoveKind::BiToDir: return check_blanketed_bidirected_against(m, mv.x, mv.y);
    case MoveKind::Reverse: return check_screened(m, mv.x, mv.y);
  }
  return Verdict::no("unknown move kind");
}

MixedGraph replace_edge(const MixedGraph& g, const MoveDescriptor& mv) {
  MixedGraph out = g;
  switch (mv.kind) {
    case MoveKind::DirToBi:
      require_directed(g, mv.x, mv.y);
      out.replace_edge(Edge::bidirected(mv.x, mv.y));
      break;
    case MoveKind::BiToDir:
      require_bidirected(g, mv.x, mv.y);
      out.replace_edge(Edge::directed(mv.x, mv.y));
      break;
    case MoveKind::Reverse:
      require_directed(g, mv.x, mv.y);
      out.replace_edge(Edge::directed(mv.y, mv.x));
      break;
  }
  return out;
}

Mag apply_move(const Mag& m, const MoveDescriptor& mv) {
  if (Verdict v = check_move(m, mv); !v) throw MoveRejected(v.reason);
  MixedGraph next = replace_edge(m.graph(), mv);
  try {
    return Mag(std::move(next));
  } catch (const NotAMagError& e) {
    throw TheoremViolation(std::string(to_string(mv.kind)) + " on " + m.graph().label(mv.x) +
                           "," + m.graph().label(mv.y) + " passed its predicate but " + e.what());
  }
}

std::vector<MoveDescriptor> legal_moves(const Mag& m) {
  const MixedGraph& g = m.graph();
  std::vector<MoveDescriptor> moves;
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::Directed) {
      if (is_blanketed_directed(m, e.u, e.v)) moves.push_back({MoveKind::DirToBi, e.u, e.v});
      if (is_screened(m, e.u, e.v)) moves.push_back({MoveKind::Reverse, e.u, e.v});
    } else {
      if (is_blanketed_bidirected_against(m, e.u, e.v)) {
        moves.push_back({MoveKind::BiToDir, e.u, e.v});
      }
      if (is_blanketed_bidirected_against(m, e.v, e.u)) {
        moves.push_back({MoveKind::BiToDir, e.v, e.u});
      }
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

DeltaSet delta(const Mag& m1, const Mag& m2) {
  const MixedGraph& g1 = m1.graph();
  const MixedGraph& g2 = m2.graph();
  if (!g1.same_nodes(g2)) throw InputError("graphs are defined over different node sets");
  DeltaSet out;
  for (NodeId a = 0; a < g1.node_count(); ++a) {
    for (NodeId b = a + 1; b < g1.node_count(); ++b) {
      if (g1.adjacent(a, b) != g2.adjacent(a, b)) {
        throw InputError("graphs differ in adjacency of " + g1.label(a) + " and " + g1.label(b));
      }
      if (g1.adjacent(a, b) && g1.link(a, b) != g2.link(a, b)) out.push_back(*g1.edge_between(a, b));
    }
  }
  return out;
}

Closure equivalence_class_closure(const Mag& m, std::size_t max_size) {
  if (max_size == 0) throw InputError("closure size limit must be positive");
  std::map<std::string, Mag> seen;
  std::deque<const Mag*> frontier;
  Closure out;

  auto first = seen.emplace(canonical_key(m.graph()), m).first;
  frontier.push_back(&first->second);
  while (!frontier.empty()) {
    const Mag& cur = *frontier.front();
    frontier.pop_front();
    for (const MoveDescriptor& mv : legal_moves(cur)) {
      Mag next = apply_move(cur, mv);
      std::string key = canonical_key(next.graph());
      if (seen.contains(key)) continue;
      if (seen.size() >= max_size) {
        out.truncated = true;
        continue;
      }
      auto it = seen.emplace(std::move(key), std::move(next)).first;
      frontier.push_back(&it->second);
    }
  }
  for (auto& [key, mag] : seen) {
    out.keys.push_back(key);
    out.members.push_back(mag);
  }
  return out;
}

}  // namespace mag
