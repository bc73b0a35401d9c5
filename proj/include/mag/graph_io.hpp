#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mag/graph.hpp"
#include "mag/mag_core.hpp"

namespace mag {

/// Parses {"nodes": [...], "edges": [{"u":..,"v":..,"type":"directed"|"bidirected"}]}.
/// For directed edges u is the tail. Throws ParseError naming the offending
/// element.
MixedGraph graph_from_json(const nlohmann::json& j);
MixedGraph parse_graph_json(std::string_view text);

nlohmann::json graph_to_json(const MixedGraph& g);

/// DOT digraph: one statement per node in index order, directed edges as
/// `A -> B;`, bi-directed as `A -> B [dir=both];` with A the lower index.
std::string to_dot(const MixedGraph& g);

// Reads the DOT subset written by to_dot.
MixedGraph parse_dot(std::string_view text);

// JSON if the first non-blank character is '{', DOT otherwise.
MixedGraph parse_graph(std::string_view text);

// "X→Y", "X←Y" or "X↔Y" for each step, e.g. "A↔B→C".
std::string format_path(const MixedGraph& g, const Path& p);
// "(A, B, C)"
std::string format_sequence(const MixedGraph& g, const Path& p);
// "{A, B}"
std::string format_set(const MixedGraph& g, const NodeSet& s);
std::string format_edge(const MixedGraph& g, const Edge& e);

std::string describe(const MixedGraph& g, const AncestralViolation& v);

}  // namespace mag
