#include "mag/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "mag/enumeration.hpp"
#include "mag/equivalence.hpp"
#include "mag/errors.hpp"
#include "mag/graph_io.hpp"
#include "mag/mag_core.hpp"
#include "mag/separation.hpp"
#include "mag/transform.hpp"

namespace mag::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Dot };

class Session {
 public:
  Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  MixedGraph load(const std::string& source) {
    std::string text;
    if (source == "-") {
      if (stdin_used_) throw InputError("stdin can only be read once");
      stdin_used_ = true;
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream file(source);
      if (!file) throw InputError("cannot read '" + source + "'");
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    try {
      return parse_graph(text);
    } catch (const ParseError& e) {
      throw ParseError(source + ": " + e.what());
    }
  }

  Mag load_mag(const std::string& source) {
    MixedGraph g = load(source);
    try {
      return Mag(std::move(g));
    } catch (const NotAMagError& e) {
      throw InputError(source + ": " + e.what());
    }
  }

  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

std::string render_text(const MixedGraph& g) {
  std::string out = "nodes:";
  for (const auto& l : g.labels()) out += " " + l;
  out += "\n";
  for (const Edge& e : g.edges()) out += format_edge(g, e) + "\n";
  return out;
}

void emit_graph(std::ostream& out, const MixedGraph& g, Format f) {
  switch (f) {
    case Format::Json: out << graph_to_json(g).dump() << "\n"; break;
    case Format::Dot: out << to_dot(g); break;
    case Format::Text: out << render_text(g); break;
  }
}

NodeSet parse_given(const MixedGraph& g, const std::string& list) {
  NodeSet z(g.node_count());
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) z.insert(g.node(item));
  }
  return z;
}

json move_json(const MixedGraph& g, const MoveDescriptor& mv) {
  return {{"kind", to_string(mv.kind)}, {"x", g.label(mv.x)}, {"y", g.label(mv.y)}};
}

int cmd_validate(Session& s, const std::string& source, Format f) {
  const MixedGraph g = s.load(source);
  json j{{"ancestral", true}, {"maximal", nullptr}, {"mag", false}};
  std::string line;
  if (auto bad = find_ancestral_violation(g)) {
    j["ancestral"] = false;
    j["witness"] = describe(g, *bad);
    line = "ancestral: no; witness " + describe(g, *bad);
  } else if (auto gap = find_maximality_violation(g)) {
    j["maximal"] = false;
    j["witness"] = "inducing path " + format_path(g, gap->inducing_path);
    line = "ancestral: yes; maximal: no; witness inducing path " + format_path(g, gap->inducing_path);
  } else {
    j["maximal"] = true;
    j["mag"] = true;
    line = "ancestral: yes; maximal: yes";
  }
  const bool ok = j["mag"].get<bool>();
  if (f == Format::Json) {
    s.out() << j.dump() << "\n";
  } else {
    s.out() << line << "\n" << "mag: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kOk : kNegative;
}

int cmd_separate(Session& s, const std::string& source, const std::string& x_label,
                 const std::string& y_label, const std::string& given, Format f) {
  const MixedGraph g = s.load(source);
  const NodeId x = g.node(x_label);
  const NodeId y = g.node(y_label);
  const NodeSet z = parse_given(g, given);
  const bool connected = m_connected(g, x, y, z);
  std::optional<Path> path;
  if (connected) path = find_m_connecting_path(g, x, y, z);
  if (f == Format::Json) {
    json j{{"connected", connected}, {"given", json::array()}};
    for (NodeId v : z) j["given"].push_back(g.label(v));
    if (path) {
      j["path"] = json::array();
      for (NodeId v : *path) j["path"].push_back(g.label(v));
    }
    s.out() << j.dump() << "\n";
  } else if (connected) {
    s.out() << "connected given " << format_set(g, z);
    if (path) s.out() << " via " << format_path(g, *path);
    s.out() << "\n";
  } else {
    s.out() << "separated given " << format_set(g, z) << "\n";
  }
  return kOk;
}

int cmd_equiv(Session& s, const std::string& a, const std::string& b, bool oracle, Format f) {
  const Mag m1 = s.load_mag(a);
  const Mag m2 = s.load_mag(b);
  Verdict v;
  if (oracle) {
    v = markov_equivalent_bruteforce(m1, m2)
            ? Verdict::yes()
            : Verdict::no("m-separation differs for some query");
  } else {
    v = explain_markov_equivalence(m1, m2);
  }
  if (f == Format::Json) {
    json j{{"equivalent", v.holds}, {"method", oracle ? "bruteforce" : "graphical"}};
    if (!v.holds) j["reason"] = v.reason;
    s.out() << j.dump() << "\n";
  } else if (v.holds) {
    s.out() << "equivalent\n";
  } else {
    s.out() << "not equivalent: " << v.reason << "\n";
  }
  return v.holds ? kOk : kNegative;
}

int cmd_moves(Session& s, const std::string& source, Format f) {
  const Mag m = s.load_mag(source);
  const auto moves = legal_moves(m);
  if (f == Format::Json) {
    json j = json::array();
    for (const auto& mv : moves) j.push_back(move_json(m.graph(), mv));
    s.out() << j.dump() << "\n";
  } else {
    for (const auto& mv : moves) {
      s.out() << to_string(mv.kind) << " " << m.graph().label(mv.x) << " "
              << m.graph().label(mv.y) << "\n";
    }
  }
  return kOk;
}

int cmd_apply(Session& s, const std::string& source, const std::string& kind,
              const std::string& x_label, const std::string& y_label, Format f) {
  const Mag m = s.load_mag(source);
  const MoveDescriptor mv{parse_move_kind(kind), m.graph().node(x_label), m.graph().node(y_label)};
  emit_graph(s.out(), apply_move(m, mv).graph(), f);
  return kOk;
}

int cmd_class(Session& s, const std::string& source, std::size_t max, Format f) {
  const Mag m = s.load_mag(source);
  const Closure c = equivalence_class_closure(m, max);
  if (f == Format::Json) {
    json members = json::array();
    for (std::size_t i = 0; i < c.keys.size(); ++i) {
      members.push_back({{"key", c.keys[i]}, {"graph", graph_to_json(c.members[i].graph())}});
    }
    s.out() << json{{"truncated", c.truncated}, {"size", c.keys.size()}, {"members", members}}.dump()
            << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < c.keys.size(); ++i) {
    if (f == Format::Dot) {
      s.out() << "// " << c.keys[i] << "\n";
      emit_graph(s.out(), c.members[i].graph(), f);
    } else {
      s.out() << c.keys[i] << " :";
      for (const Edge& e : c.members[i].graph().edges()) {
        s.out() << " " << format_edge(c.members[i].graph(), e);
      }
      s.out() << "\n";
    }
  }
  if (f == Format::Text) {
    s.out() << c.keys.size() << " graph(s)" << (c.truncated ? ", truncated" : "") << "\n";
  }
  return kOk;
}

int cmd_enumerate(Session& s, std::size_t n, Format f) {
  for (const Mag& m : enumerate_mags(n)) {
    switch (f) {
      case Format::Text: s.out() << canonical_key(m.graph()) << "\n"; break;
      case Format::Json: s.out() << graph_to_json(m.graph()).dump() << "\n"; break;
      case Format::Dot: s.out() << to_dot(m.graph()); break;
    }
  }
  return kOk;
}

int cmd_conjecture(Session& s, std::size_t n) {
  s.out() << to_json(test_conjecture1(n)).dump(2) << "\n";
  return kOk;
}

int cmd_dot(Session& s, const std::string& source) {
  s.out() << to_dot(s.load(source));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Maximal ancestral graphs: validation, m-separation, Markov equivalence and "
               "equivalence-preserving edge moves",
               "magtool"};
  app.require_subcommand(1);

  Format format = Format::Text;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}};
  std::string graph, graph2, x, y, given, kind;
  bool oracle = false;
  std::size_t max = 1000;
  std::size_t n = 0;
  std::function<int(Session&)> action;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text, json or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* validate = app.add_subcommand("validate", "Check ancestrality and maximality");
  validate->add_option("graph", graph, "Graph file or -")->required();
  add_format(validate);
  validate->callback([&] { action = [&](Session& s) { return cmd_validate(s, graph, format); }; });

  auto* separate = app.add_subcommand("separate", "Decide m-separation of two nodes");
  separate->add_option("graph", graph, "Graph file or -")->required();
  separate->add_option("--x", x, "First node")->required();
  separate->add_option("--y", y, "Second node")->required();
  separate->add_option("--given", given, "Comma-separated conditioning set");
  add_format(separate);
  separate->callback(
      [&] { action = [&](Session& s) { return cmd_separate(s, graph, x, y, given, format); }; });

  auto* equiv = app.add_subcommand("equiv", "Test two MAGs for Markov equivalence");
  equiv->add_option("graph1", graph, "First MAG")->required();
  equiv->add_option("graph2", graph2, "Second MAG")->required();
  equiv->add_flag("--oracle", oracle, "Compare every m-separation query instead");
  add_format(equiv);
  equiv->callback(
      [&] { action = [&](Session& s) { return cmd_equiv(s, graph, graph2, oracle, format); }; });

  auto* moves = app.add_subcommand("moves", "List equivalence-preserving single-edge moves");
  moves->add_option("graph", graph, "MAG file or -")->required();
  add_format(moves);
  moves->callback([&] { action = [&](Session& s) { return cmd_moves(s, graph, format); }; });

  auto* apply = app.add_subcommand("apply", "Apply one move and print the resulting MAG");
  apply->add_option("graph", graph, "MAG file or -")->required();
  apply->add_option("--kind", kind, "dir-to-bi, bi-to-dir or reverse")->required();
  apply->add_option("--x", x, "Move's first node (tail, or the node blanketed against)")
      ->required();
  apply->add_option("--y", y, "Move's second node")->required();
  add_format(apply);
  apply->callback(
      [&] { action = [&](Session& s) { return cmd_apply(s, graph, kind, x, y, format); }; });

  auto* klass = app.add_subcommand("class", "Closure of a MAG under legal moves");
  klass->add_option("graph", graph, "MAG file or -")->required();
  klass->add_option("--max", max, "Stop after this many graphs")->check(CLI::PositiveNumber);
  add_format(klass);
  klass->callback([&] { action = [&](Session& s) { return cmd_class(s, graph, max, format); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Print every MAG on n labeled nodes");
  enumerate->add_option("--n", n, "Node count")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerationNodes));
  add_format(enumerate);
  enumerate->callback([&] { action = [&](Session& s) { return cmd_enumerate(s, n, format); }; });

  auto* conjecture =
      app.add_subcommand("conjecture", "Search all equivalent MAG pairs for a blanketed delta edge");
  conjecture->add_option("--n", n, "Node count")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerationNodes));
  conjecture->callback([&] { action = [&](Session& s) { return cmd_conjecture(s, n); }; });

  auto* dot = app.add_subcommand("dot", "Export a graph as DOT");
  dot->add_option("graph", graph, "Graph file or -")->required();
  dot->callback([&] { action = [&](Session& s) { return cmd_dot(s, graph); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Session session(in, out);
  try {
    return action(session);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace mag::cli
