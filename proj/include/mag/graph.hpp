#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mag {

// Dense node index, 0..n-1 within one graph.
using NodeId = std::size_t;

// Simple path: distinct nodes, each consecutive pair adjacent.
using Path = std::vector<NodeId>;

/// Subset of the nodes of one graph.
class NodeSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const NodeId*;
    using reference = NodeId;

    const_iterator() = default;
    const_iterator(const boost::dynamic_bitset<>* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

    NodeId operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const boost::dynamic_bitset<>* bits_ = nullptr;
    std::size_t pos_ = boost::dynamic_bitset<>::npos;
  };

  NodeSet() = default;
  explicit NodeSet(std::size_t universe) : bits_(universe) {}
  NodeSet(std::size_t universe, std::initializer_list<NodeId> members);
  static NodeSet all(std::size_t universe);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(NodeId v) const { return v < bits_.size() && bits_.test(v); }

  void insert(NodeId v) { bits_.set(v); }
  void erase(NodeId v) { bits_.reset(v); }

  bool is_subset_of(const NodeSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const NodeSet& other) const { return bits_.intersects(other.bits_); }

  NodeSet& operator|=(const NodeSet& other) {
    bits_ |= other.bits_;
    return *this;
  }
  NodeSet& operator&=(const NodeSet& other) {
    bits_ &= other.bits_;
    return *this;
  }
  NodeSet& operator-=(const NodeSet& other) {
    bits_ -= other.bits_;
    return *this;
  }
  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, boost::dynamic_bitset<>::npos}; }
  std::vector<NodeId> members() const { return {begin(), end()}; }

  friend bool operator==(const NodeSet& a, const NodeSet& b) { return a.bits_ == b.bits_; }

 private:
  boost::dynamic_bitset<> bits_;
};

enum class EdgeKind : std::uint8_t { Directed, Bidirected };

// For Directed, u is the tail and v the head. For Bidirected, u < v.
struct Edge {
  EdgeKind kind = EdgeKind::Directed;
  NodeId u = 0;
  NodeId v = 0;

  static Edge directed(NodeId tail, NodeId head) { return {EdgeKind::Directed, tail, head}; }
  static Edge bidirected(NodeId a, NodeId b) {
    return a < b ? Edge{EdgeKind::Bidirected, a, b} : Edge{EdgeKind::Bidirected, b, a};
  }
  NodeId low() const noexcept { return u < v ? u : v; }
  NodeId high() const noexcept { return u < v ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// How node j looks from node i.
enum class Link : std::uint8_t {
  None,
  Out,  // i -> j
  In,   // i <- j
  Bi,   // i <-> j
};

/// Mixed graph with directed and bi-directed edges, at most one edge per
/// unordered pair and no self-loops. Nodes carry unique text labels; when none
/// are given they default to the decimal index.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(std::size_t node_count);
  explicit MixedGraph(std::vector<std::string> labels);
  MixedGraph(std::vector<std::string> labels, std::initializer_list<Edge> edges);

  std::size_t node_count() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeId v) const;
  std::optional<NodeId> find(std::string_view label) const;
  // Like find, but throws InputError naming the label.
  NodeId node(std::string_view label) const;

  void add_edge(const Edge& e);
  void add_directed(NodeId tail, NodeId head) { add_edge(Edge::directed(tail, head)); }
  void add_bidirected(NodeId a, NodeId b) { add_edge(Edge::bidirected(a, b)); }
  // Replaces whatever edge joins e's endpoints; the pair must already be adjacent.
  void replace_edge(const Edge& e);
  void remove_edge(NodeId a, NodeId b);

  Link link(NodeId i, NodeId j) const { return links_[i * n_ + j]; }
  bool adjacent(NodeId a, NodeId b) const { return link(a, b) != Link::None; }
  bool has_directed(NodeId tail, NodeId head) const { return link(tail, head) == Link::Out; }
  bool has_bidirected(NodeId a, NodeId b) const { return link(a, b) == Link::Bi; }
  // True when the edge between `other` and `at` exists and has an arrowhead at `at`.
  bool arrowhead_at(NodeId at, NodeId other) const {
    const Link l = link(at, other);
    return l == Link::In || l == Link::Bi;
  }
  std::optional<Edge> edge_between(NodeId a, NodeId b) const;

  // Sorted by endpoint pair.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  NodeSet parents(NodeId v) const;
  NodeSet children(NodeId v) const;
  NodeSet spouses(NodeId v) const;
  NodeSet neighbors(NodeId v) const;

  void check_node(NodeId v) const;
  bool same_nodes(const MixedGraph& other) const { return labels_ == other.labels_; }

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

 private:
  void set_link(const Edge& e);

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Link> links_;
};

/// Deterministic labeled serialization: "<n>;" followed by ";"-joined edge
/// tokens ordered by endpoint pair, "i>j" for i->j and "i<>j" (i<j) for i<->j.
std::string canonical_key(const MixedGraph& g);

// One canonical_key token: "i>j" or "i<>j".
std::string edge_token(const Edge& e);

// Both path edges at `mid` carry arrowheads into it.
inline bool is_collider(const MixedGraph& g, NodeId prev, NodeId mid, NodeId next) {
  return g.arrowhead_at(mid, prev) && g.arrowhead_at(mid, next);
}

// Throws InputError unless p is a simple path of g with at least two nodes.
void check_path(const MixedGraph& g, const Path& p);

enum class PathAction { Extend, Skip, Stop };

/// Depth-first enumeration of every simple path that starts at `start` and
/// has at least two nodes. The visitor decides whether to extend the current
/// path, skip its extensions, or stop the whole walk. Returns false if stopped.
bool walk_simple_paths(const MixedGraph& g, NodeId start,
                       const std::function<PathAction(const Path&)>& visit);

}  // namespace mag
