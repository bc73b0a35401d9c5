#include "mag/graph.hpp"

#include <algorithm>
#include <set>

#include "mag/errors.hpp"

namespace mag {

NodeSet::NodeSet(std::size_t universe, std::initializer_list<NodeId> members) : bits_(universe) {
  for (NodeId v : members) bits_.set(v);
}

NodeSet NodeSet::all(std::size_t universe) {
  NodeSet s(universe);
  s.bits_.set();
  return s;
}

namespace {

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

MixedGraph::MixedGraph(std::size_t node_count) : MixedGraph(index_labels(node_count)) {}

MixedGraph::MixedGraph(std::vector<std::string> labels)
    : n_(labels.size()), labels_(std::move(labels)), links_(n_ * n_, Link::None) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty node label");
    if (!seen.insert(l).second) throw InputError("duplicate node label '" + l + "'");
  }
}

MixedGraph::MixedGraph(std::vector<std::string> labels, std::initializer_list<Edge> edges)
    : MixedGraph(std::move(labels)) {
  for (const Edge& e : edges) add_edge(e);
}

const std::string& MixedGraph::label(NodeId v) const {
  check_node(v);
  return labels_[v];
}

std::optional<NodeId> MixedGraph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

NodeId MixedGraph::node(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InputError("unknown node label '" + std::string(label) + "'");
}

void MixedGraph::check_node(NodeId v) const {
  if (v >= n_) {
    throw InputError("node index " + std::to_string(v) + " out of range for " +
                     std::to_string(n_) + "-node graph");
  }
}

void MixedGraph::set_link(const Edge& e) {
  if (e.kind == EdgeKind::Directed) {
    links_[e.u * n_ + e.v] = Link::Out;
    links_[e.v * n_ + e.u] = Link::In;
  } else {
    links_[e.u * n_ + e.v] = Link::Bi;
    links_[e.v * n_ + e.u] = Link::Bi;
  }
}

void MixedGraph::add_edge(const Edge& e) {
  check_node(e.u);
  check_node(e.v);
  if (e.u == e.v) throw InputError("self-loop on node '" + labels_[e.u] + "'");
  if (adjacent(e.u, e.v)) {
    throw InputError("duplicate edge between '" + labels_[e.u] + "' and '" + labels_[e.v] + "'");
  }
  set_link(e);
}

void MixedGraph::replace_edge(const Edge& e) {
  check_node(e.u);
  check_node(e.v);
  if (e.u == e.v || !adjacent(e.u, e.v)) {
    throw InputError("no edge between '" + labels_[e.u] + "' and '" + labels_[e.v] + "'");
  }
  set_link(e);
}

void MixedGraph::remove_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  links_[a * n_ + b] = Link::None;
  links_[b * n_ + a] = Link::None;
}

std::optional<Edge> MixedGraph::edge_between(NodeId a, NodeId b) const {
  switch (link(a, b)) {
    case Link::None: return std::nullopt;
    case Link::Out: return Edge::directed(a, b);
    case Link::In: return Edge::directed(b, a);
    case Link::Bi: return Edge::bidirected(a, b);
  }
  return std::nullopt;
}

std::vector<Edge> MixedGraph::edges() const {
  std::vector<Edge> out;
  for (NodeId i = 0; i < n_; ++i) {
    for (NodeId j = i + 1; j < n_; ++j) {
      if (auto e = edge_between(i, j)) out.push_back(*e);
    }
  }
  return out;
}

std::size_t MixedGraph::edge_count() const {
  return static_cast<std::size_t>(std::count_if(links_.begin(), links_.end(),
                                                [](Link l) { return l != Link::None; })) /
         2;
}

NodeSet MixedGraph::parents(NodeId v) const {
  NodeSet s(n_);
  for (NodeId u = 0; u < n_; ++u) {
    if (link(v, u) == Link::In) s.insert(u);
  }
  return s;
}

NodeSet MixedGraph::children(NodeId v) const {
  NodeSet s(n_);
  for (NodeId u = 0; u < n_; ++u) {
    if (link(v, u) == Link::Out) s.insert(u);
  }
  return s;
}

NodeSet MixedGraph::spouses(NodeId v) const {
  NodeSet s(n_);
  for (NodeId u = 0; u < n_; ++u) {
    if (link(v, u) == Link::Bi) s.insert(u);
  }
  return s;
}

NodeSet MixedGraph::neighbors(NodeId v) const {
  NodeSet s(n_);
  for (NodeId u = 0; u < n_; ++u) {
    if (link(v, u) != Link::None) s.insert(u);
  }
  return s;
}

std::string edge_token(const Edge& e) {
  if (e.kind == EdgeKind::Directed) return std::to_string(e.u) + ">" + std::to_string(e.v);
  return std::to_string(e.low()) + "<>" + std::to_string(e.high());
}

std::string canonical_key(const MixedGraph& g) {
  std::string key = std::to_string(g.node_count()) + ";";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) key += ';';
    first = false;
    key += edge_token(e);
  }
  return key;
}

void check_path(const MixedGraph& g, const Path& p) {
  if (p.size() < 2) throw InputError("path needs at least two nodes");
  std::vector<bool> seen(g.node_count(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    g.check_node(p[i]);
    if (seen[p[i]]) throw InputError("path repeats node '" + g.label(p[i]) + "'");
    seen[p[i]] = true;
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) {
      throw InputError("path step '" + g.label(p[i - 1]) + "' - '" + g.label(p[i]) +
                       "' is not an edge");
    }
  }
}

namespace {

bool extend_paths(const MixedGraph& g, Path& path, std::vector<bool>& on_path,
                  const std::function<PathAction(const Path&)>& visit) {
  const NodeId tip = path.back();
  for (NodeId next = 0; next < g.node_count(); ++next) {
    if (on_path[next] || !g.adjacent(tip, next)) continue;
    path.push_back(next);
    on_path[next] = true;
    const PathAction action = visit(path);
    bool keep_going = action != PathAction::Stop;
    if (action == PathAction::Extend) keep_going = extend_paths(g, path, on_path, visit);
    on_path[next] = false;
    path.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

bool walk_simple_paths(const MixedGraph& g, NodeId start,
                       const std::function<PathAction(const Path&)>& visit) {
  g.check_node(start);
  Path path{start};
  std::vector<bool> on_path(g.node_count(), false);
  on_path[start] = true;
  return extend_paths(g, path, on_path, visit);
}

}  // namespace mag
