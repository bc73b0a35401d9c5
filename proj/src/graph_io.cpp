#include "mag/graph_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "mag/errors.hpp"

namespace mag {

using nlohmann::json;

MixedGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  if (!j.contains("nodes") || !j["nodes"].is_array()) {
    throw ParseError("graph needs a \"nodes\" array");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j["nodes"].size(); ++i) {
    const json& node = j["nodes"][i];
    if (!node.is_string()) throw ParseError("nodes[" + std::to_string(i) + "] is not a string");
    labels.push_back(node.get<std::string>());
  }
  MixedGraph g = [&] {
    try {
      return MixedGraph(std::move(labels));
    } catch (const InputError& e) {
      throw ParseError(std::string("nodes: ") + e.what());
    }
  }();

  if (!j.contains("edges")) return g;
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const json& e = j["edges"][i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(where + " is not an object");
    for (const char* field : {"u", "v", "type"}) {
      if (!e.contains(field) || !e[field].is_string()) {
        throw ParseError(where + " needs a string field \"" + field + "\"");
      }
    }
    const auto u_label = e["u"].get<std::string>();
    const auto v_label = e["v"].get<std::string>();
    const auto type = e["type"].get<std::string>();
    const auto u = g.find(u_label);
    const auto v = g.find(v_label);
    if (!u) throw ParseError(where + ": unknown node label '" + u_label + "'");
    if (!v) throw ParseError(where + ": unknown node label '" + v_label + "'");
    try {
      if (type == "directed") {
        g.add_directed(*u, *v);
      } else if (type == "bidirected") {
        g.add_bidirected(*u, *v);
      } else {
        throw ParseError(where + ": unknown edge type '" + type + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& err) {
      throw ParseError(where + ": " + err.what());
    }
  }
  return g;
}

MixedGraph parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

json graph_to_json(const MixedGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", g.label(e.u)},
                     {"v", g.label(e.v)},
                     {"type", e.kind == EdgeKind::Directed ? "directed" : "bidirected"}});
  }
  return {{"nodes", g.labels()}, {"edges", std::move(edges)}};
}

namespace {

bool dot_keyword(std::string_view s) {
  static constexpr std::array<std::string_view, 6> kKeywords{"node",  "edge",     "graph",
                                                             "digraph", "subgraph", "strict"};
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return std::find(kKeywords.begin(), kKeywords.end(), lower) != kKeywords.end();
}

bool id_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

std::string dot_id(const std::string& label) {
  const bool plain_id = !label.empty() && !std::isdigit(static_cast<unsigned char>(label[0])) &&
                        std::all_of(label.begin(), label.end(),
                                    [](char c) { return id_char(static_cast<unsigned char>(c)); });
  const bool numeral = !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if ((plain_id && !dot_keyword(label)) || numeral) return label;
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  // Identifier, quoted string (unescaped), or a punctuation token.
  std::optional<std::string> next() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    const char c = text_[pos_];
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return "->";
    }
    if (std::string_view("{}[];=,").find(c) != std::string_view::npos) {
      ++pos_;
      return std::string(1, c);
    }
    if (c == '"') {
      std::string out = "\"";
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        out += text_[pos_++];
      }
      if (pos_ >= text_.size()) throw ParseError("DOT: unterminated string");
      ++pos_;
      return out;
    }
    if (id_char(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && id_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return std::string(text_.substr(start, pos_ - start));
    }
    throw ParseError(std::string("DOT: unexpected character '") + c + "'");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_name(const std::string& tok) {
  return tok.front() == '"' || id_char(static_cast<unsigned char>(tok.front()));
}

std::string unquote(const std::string& tok) { return tok.front() == '"' ? tok.substr(1) : tok; }

}  // namespace

std::string to_dot(const MixedGraph& g) {
  std::string out = "digraph mag {\n";
  for (const auto& l : g.labels()) out += "  " + dot_id(l) + ";\n";
  for (const Edge& e : g.edges()) {
    out += "  " + dot_id(g.label(e.u)) + " -> " + dot_id(g.label(e.v));
    out += e.kind == EdgeKind::Bidirected ? " [dir=both];\n" : ";\n";
  }
  return out + "}\n";
}

MixedGraph parse_dot(std::string_view text) {
  DotLexer lex(text);
  auto expect_token = [&](const char* what) {
    auto tok = lex.next();
    if (!tok) throw ParseError(std::string("DOT: expected ") + what + " before end of input");
    return *tok;
  };

  std::string tok = expect_token("'digraph'");
  if (tok != "digraph") throw ParseError("DOT: expected 'digraph', got '" + tok + "'");
  tok = expect_token("'{'");
  if (tok != "{") tok = expect_token("'{'");
  if (tok != "{") throw ParseError("DOT: expected '{', got '" + tok + "'");

  std::vector<std::string> labels;
  struct PendingEdge {
    std::string u, v;
    bool both;
  };
  std::vector<PendingEdge> edges;
  auto declare = [&](const std::string& l) {
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
  };

  while (true) {
    tok = expect_token("'}'");
    if (tok == "}") break;
    if (tok == ";") continue;
    if (!is_name(tok)) throw ParseError("DOT: unexpected token '" + tok + "'");
    const std::string first = unquote(tok);
    declare(first);
    tok = expect_token("';'");
    if (tok == ";") continue;
    if (tok == "}") break;
    if (tok != "->") throw ParseError("DOT: expected '->' after '" + first + "', got '" + tok + "'");
    tok = expect_token("node name");
    if (!is_name(tok)) throw ParseError("DOT: expected node name after '->', got '" + tok + "'");
    const std::string second = unquote(tok);
    declare(second);
    bool both = false;
    tok = expect_token("';'");
    if (tok == "[") {
      while (true) {
        const std::string key = expect_token("attribute");
        if (key == "]") break;
        if (key == ",") continue;
        if (expect_token("'='") != "=") throw ParseError("DOT: expected '=' after '" + key + "'");
        const std::string value = unquote(expect_token("attribute value"));
        if (key == "dir") {
          if (value == "both") {
            both = true;
          } else if (value != "forward") {
            throw ParseError("DOT: unsupported edge direction '" + value + "'");
          }
        }
      }
      tok = expect_token("';'");
    }
    edges.push_back({first, second, both});
    if (tok == "}") break;
    if (tok != ";") throw ParseError("DOT: expected ';', got '" + tok + "'");
  }

  MixedGraph g = [&] {
    try {
      return MixedGraph(labels);
    } catch (const InputError& e) {
      throw ParseError(std::string("DOT: ") + e.what());
    }
  }();
  for (const auto& e : edges) {
    try {
      const NodeId u = g.node(e.u);
      const NodeId v = g.node(e.v);
      if (e.both) {
        g.add_bidirected(u, v);
      } else {
        g.add_directed(u, v);
      }
    } catch (const InputError& err) {
      throw ParseError("DOT: edge " + e.u + " -> " + e.v + ": " + err.what());
    }
  }
  return g;
}

MixedGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty graph input");
  return text[first] == '{' ? parse_graph_json(text) : parse_dot(text);
}

std::string format_path(const MixedGraph& g, const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) {
      switch (g.link(p[i - 1], p[i])) {
        case Link::Out: out += "→"; break;
        case Link::In: out += "←"; break;
        case Link::Bi: out += "↔"; break;
        case Link::None: out += " · "; break;
      }
    }
    out += g.label(p[i]);
  }
  return out;
}

std::string format_sequence(const MixedGraph& g, const Path& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ", ";
    out += g.label(p[i]);
  }
  return out + ")";
}

std::string format_set(const MixedGraph& g, const NodeSet& s) {
  std::string out = "{";
  bool first = true;
  for (NodeId v : s) {
    if (!first) out += ", ";
    first = false;
    out += g.label(v);
  }
  return out + "}";
}

std::string format_edge(const MixedGraph& g, const Edge& e) {
  return g.label(e.u) + (e.kind == EdgeKind::Directed ? "→" : "↔") + g.label(e.v);
}

std::string describe(const MixedGraph& g, const AncestralViolation& v) {
  if (v.kind == AncestralViolation::Kind::DirectedCycle) {
    Path closed = v.path;
    closed.push_back(v.path.front());
    return "directed cycle " + format_path(g, closed);
  }
  return "directed path " + format_path(g, v.path) + " between spouses " +
         format_edge(g, Edge::bidirected(v.path.front(), v.path.back()));
}

}  // namespace mag
