#include "mag/enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <unordered_map>

#include "mag/equivalence.hpp"
#include "mag/errors.hpp"
#include "mag/graph_io.hpp"
#include "mag/transform.hpp"

namespace mag {

namespace {

constexpr std::size_t kMaxExamples = 10;

void check_node_range(std::size_t n, std::size_t max_n) {
  if (n < 1 || n > max_n) {
    throw InputError("node count " + std::to_string(n) + " outside 1.." + std::to_string(max_n));
  }
}

// Reorders by canonical key and wraps each graph as a Mag.
std::vector<Mag> finish(std::vector<std::pair<std::string, MixedGraph>> found) {
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Mag> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.emplace_back(std::move(g));
  return out;
}

}  // namespace

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::uint64_t assignment_count(std::size_t n) { return std::uint64_t{1} << (2 * pair_count(n)); }

MixedGraph graph_from_assignment(std::size_t n, std::uint64_t code) {
  MixedGraph g(n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      switch (code & 3U) {
        case 1: g.add_directed(i, j); break;
        case 2: g.add_directed(j, i); break;
        case 3: g.add_bidirected(i, j); break;
        default: break;
      }
      code >>= 2;
    }
  }
  return g;
}

std::vector<Mag> enumerate_mags_serial(std::size_t n) {
  check_node_range(n, kMaxEnumerationNodes);
  std::vector<std::pair<std::string, MixedGraph>> found;
  const std::uint64_t total = assignment_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    MixedGraph g = graph_from_assignment(n, code);
    if (is_mag(g)) found.emplace_back(canonical_key(g), std::move(g));
  }
  return finish(std::move(found));
}

std::vector<Mag> enumerate_mags(std::size_t n) {
  check_node_range(n, kMaxEnumerationNodes);
  const auto total = static_cast<std::int64_t>(assignment_count(n));
  std::vector<std::vector<std::pair<std::string, MixedGraph>>> per_thread(
      static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t code = 0; code < total; ++code) {
      MixedGraph g = graph_from_assignment(n, static_cast<std::uint64_t>(code));
      if (is_mag(g)) local.emplace_back(canonical_key(g), std::move(g));
    }
  }

  std::vector<std::pair<std::string, MixedGraph>> found;
  for (auto& local : per_thread) {
    std::move(local.begin(), local.end(), std::back_inserter(found));
  }
  return finish(std::move(found));
}

namespace {

void check_common_nodes(std::span<const Mag> mags) {
  for (const Mag& m : mags) {
    if (!m.graph().same_nodes(mags.front().graph())) {
      throw InputError("partition input mixes graphs over different node sets");
    }
  }
}

// Groups by signature, visiting members in key order so class ids follow the
// smallest member key.
ClassPartition group_by_signature(std::span<const Mag> mags,
                                  const std::vector<SeparationSignature>& sigs,
                                  const std::vector<std::string>& keys) {
  std::vector<std::size_t> order(mags.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  ClassPartition part;
  part.class_of.assign(mags.size(), 0);
  std::map<SeparationSignature, std::size_t> id_of;
  for (std::size_t i : order) {
    auto [it, fresh] = id_of.emplace(sigs[i], part.classes.size());
    if (fresh) {
      part.classes.emplace_back();
      part.member_keys.emplace_back();
    }
    part.class_of[i] = it->second;
    part.classes[it->second].push_back(i);
    part.member_keys[it->second].push_back(keys[i]);
    part.class_by_key[keys[i]] = it->second;
  }
  return part;
}

}  // namespace

ClassPartition partition_into_classes_serial(std::span<const Mag> mags) {
  if (mags.empty()) return {};
  check_common_nodes(mags);
  std::vector<SeparationSignature> sigs;
  std::vector<std::string> keys;
  for (const Mag& m : mags) {
    sigs.push_back(separation_signature(m.graph()));
    keys.push_back(canonical_key(m.graph()));
  }
  return group_by_signature(mags, sigs, keys);
}

ClassPartition partition_into_classes(std::span<const Mag> mags) {
  if (mags.empty()) return {};
  check_common_nodes(mags);
  const auto count = static_cast<std::int64_t>(mags.size());
  std::vector<SeparationSignature> sigs(mags.size());
  std::vector<std::string> keys(mags.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    sigs[k] = separation_signature(mags[k].graph());
    keys[k] = canonical_key(mags[k].graph());
  }
  return group_by_signature(mags, sigs, keys);
}

std::optional<Path> find_lemma1_violation(const Mag& m, NodeId x, NodeId y) {
  const MixedGraph& g = m.graph();
  g.check_node(x);
  g.check_node(y);
  const bool directed_ok = g.has_directed(x, y) && is_blanketed_directed(m, x, y);
  const bool bidirected_ok = g.has_bidirected(x, y) && is_blanketed_bidirected_against(m, x, y);
  if (!directed_ok && !bidirected_ok) {
    throw InputError(g.label(x) + "-" + g.label(y) +
                     " is neither a blanketed directed edge nor blanketed against " + g.label(x));
  }

  const NodeSet sp_y = g.spouses(y);
  const NodeSet pa_y = g.parents(y);
  std::optional<Path> violation;
  // Paths are grown from x, so p = (x, Ak, ..., A1).
  walk_simple_paths(g, x, [&](const Path& p) {
    const NodeId tip = p.back();
    if (tip == y) return PathAction::Skip;
    if (p.size() == 2 && !g.has_bidirected(x, tip)) return PathAction::Skip;
    if (p.size() >= 3 && !is_collider(g, p[p.size() - 3], p[p.size() - 2], tip)) {
      return PathAction::Skip;
    }
    bool some_spouse = false;
    bool all_parents = true;
    for (std::size_t i = 1; i < p.size(); ++i) {
      some_spouse = some_spouse || sp_y.contains(p[i]);
      all_parents = all_parents && pa_y.contains(p[i]);
    }
    if (!some_spouse && !all_parents) {
      violation = Path(p.rbegin(), p.rend());
      return PathAction::Stop;
    }
    return PathAction::Extend;
  });
  return violation;
}

bool check_lemma1(const Mag& m, NodeId x, NodeId y) { return !find_lemma1_violation(m, x, y); }

namespace {

// Thread-safe accumulation of one check's outcome.
class CheckAccumulator {
 public:
  explicit CheckAccumulator(std::string name) { result_.name = std::move(name); }

  void add_case() { cases_.fetch_add(1, std::memory_order_relaxed); }
  void add_violation(std::string what) {
    violations_.fetch_add(1, std::memory_order_relaxed);
#pragma omp critical(mag_check_examples)
    {
      if (examples_.size() < kMaxExamples) examples_.push_back(std::move(what));
    }
  }

  CheckResult finish() {
    result_.cases = cases_.load();
    result_.violation_count = violations_.load();
    std::sort(examples_.begin(), examples_.end());
    result_.examples = std::move(examples_);
    return std::move(result_);
  }

 private:
  CheckResult result_;
  std::atomic<std::uint64_t> cases_{0};
  std::atomic<std::uint64_t> violations_{0};
  std::vector<std::string> examples_;
};

std::string where(const MixedGraph& g, const Edge& e) {
  return canonical_key(g) + " edge " + edge_token(e);
}

void lemma2_on(const Mag& m, CheckAccumulator& acc) {
  for (const Edge& e : m.graph().edges()) {
    if (e.kind != EdgeKind::Directed) continue;
    acc.add_case();
    if (is_screened(m, e.u, e.v) && !is_blanketed_directed(m, e.u, e.v)) {
      acc.add_violation(where(m.graph(), e) + ": screened but not blanketed");
    }
  }
}

// Every MAG on n nodes with its key, signature and class.
struct Catalog {
  std::vector<Mag> mags;
  std::vector<std::string> keys;
  std::unordered_map<std::string, std::size_t> index;
  ClassPartition classes;
  std::vector<SeparationSignature> sigs;

  explicit Catalog(std::size_t n) : mags(enumerate_mags(n)) {
    for (std::size_t i = 0; i < mags.size(); ++i) {
      keys.push_back(canonical_key(mags[i].graph()));
      index.emplace(keys[i], i);
    }
    sigs.resize(mags.size());
    const auto count = static_cast<std::int64_t>(mags.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      sigs[k] = separation_signature(mags[k].graph());
    }
    classes = group_by_signature(mags, sigs, keys);
  }

  // Class of a graph if it is one of the MAGs, otherwise nothing.
  std::optional<std::size_t> class_of(const MixedGraph& g) const {
    auto it = index.find(canonical_key(g));
    if (it == index.end()) return std::nullopt;
    return classes.class_of[it->second];
  }
};

}  // namespace

CheckResult check_lemma2(std::span<const Mag> mags) {
  CheckAccumulator acc("lemma2");
  const auto count = static_cast<std::int64_t>(mags.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) lemma2_on(mags[static_cast<std::size_t>(i)], acc);
  return acc.finish();
}

bool EquivalenceReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult& EquivalenceReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw InputError("no check named '" + std::string(name) + "'");
}

namespace {

std::vector<CheckResult> run_theorem_checks(const Catalog& cat) {
  CheckAccumulator sound("thm3_sound");
  CheckAccumulator necessary("thm3_necessary");
  CheckAccumulator thm4("thm4_iff");
  CheckAccumulator lemma1("lemma1");
  CheckAccumulator lemma2("lemma2");
  CheckAccumulator thm2("thm2_vs_oracle");

  const auto count = static_cast<std::int64_t>(cat.mags.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const Mag& m = cat.mags[i];
    const MixedGraph& g = m.graph();
    const std::size_t cls = cat.classes.class_of[i];
    auto equivalent_mag = [&](const MixedGraph& h) {
      auto c = cat.class_of(h);
      return c && *c == cls;
    };

    for (const MoveDescriptor& mv : legal_moves(m)) {
      if (mv.kind == MoveKind::Reverse) continue;
      sound.add_case();
      const MixedGraph next = replace_edge(g, mv);
      if (!is_mag(next)) {
        sound.add_violation(cat.keys[i] + " " + std::string(to_string(mv.kind)) + " " +
                            std::to_string(mv.x) + "," + std::to_string(mv.y) + ": not a MAG");
      } else if (!equivalent_mag(next)) {
        sound.add_violation(cat.keys[i] + " " + std::string(to_string(mv.kind)) + " " +
                            std::to_string(mv.x) + "," + std::to_string(mv.y) +
                            ": not equivalent");
      }
    }

    for (const Edge& e : g.edges()) {
      if (e.kind == EdgeKind::Directed) {
        const NodeId x = e.u;
        const NodeId y = e.v;
        // x -> y against its bi-directed twin
        const MixedGraph twin = replace_edge(g, {MoveKind::DirToBi, x, y});
        if (equivalent_mag(twin)) {
          necessary.add_case();
          if (!is_blanketed_directed(m, x, y)) {
            necessary.add_violation(where(g, e) + ": equivalent twin but edge not blanketed");
          }
          if (!is_blanketed_bidirected_against(Mag(twin), x, y)) {
            necessary.add_violation(canonical_key(twin) + " edge " + edge_token(Edge::bidirected(x, y)) +
                                    ": equivalent twin but not blanketed against " +
                                    std::to_string(x));
          }
        }

        thm4.add_case();
        const bool reversible = equivalent_mag(replace_edge(g, {MoveKind::Reverse, x, y}));
        const bool screened = is_screened(m, x, y);
        if (reversible != screened) {
          thm4.add_violation(where(g, e) + (screened ? ": screened but reversal not equivalent"
                                                     : ": reversal equivalent but not screened"));
        }

        if (is_blanketed_directed(m, x, y)) {
          lemma1.add_case();
          if (auto p = find_lemma1_violation(m, x, y)) {
            lemma1.add_violation(where(g, e) + ": path " + format_sequence(g, *p));
          }
        }
      } else {
        for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          if (!is_blanketed_bidirected_against(m, x, y)) continue;
          lemma1.add_case();
          if (auto p = find_lemma1_violation(m, x, y)) {
            lemma1.add_violation(where(g, e) + " against " + std::to_string(x) + ": path " +
                                 format_sequence(g, *p));
          }
        }
      }
    }

    lemma2_on(m, lemma2);

    for (std::size_t j = 0; j < cat.mags.size(); ++j) {
      thm2.add_case();
      const bool by_theorem = markov_equivalent(m, cat.mags[j]);
      const bool by_oracle = cat.sigs[i] == cat.sigs[j];
      if (by_theorem != by_oracle) {
        thm2.add_violation(cat.keys[i] + " vs " + cat.keys[j] + ": theorem says " +
                           (by_theorem ? "equivalent" : "not equivalent"));
      }
    }
  }

  std::vector<CheckResult> out;
  for (CheckAccumulator* acc : {&sound, &necessary, &thm4, &lemma1, &lemma2, &thm2}) {
    out.push_back(acc->finish());
  }
  return out;
}

}  // namespace

EquivalenceReport verify_theorems(std::size_t n) {
  check_node_range(n, 4);
  const Catalog cat(n);
  EquivalenceReport report;
  report.n = n;
  report.mag_count = cat.mags.size();
  report.class_count = cat.classes.classes.size();
  report.checks = run_theorem_checks(cat);
  return report;
}

ConjectureReport test_conjecture1(std::size_t n) {
  check_node_range(n, kMaxEnumerationNodes);
  const Catalog cat(n);
  const auto& classes = cat.classes.classes;

  struct PerClass {
    std::uint64_t pairs = 0;
    std::vector<Counterexample> counterexamples;
    std::size_t unreachable = 0;
  };
  std::vector<PerClass> per_class(classes.size());
  std::exception_ptr failure;

  const auto class_count = static_cast<std::int64_t>(classes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t cc = 0; cc < class_count; ++cc) {
    const auto c = static_cast<std::size_t>(cc);
    const auto& members = classes[c];
    PerClass& out = per_class[c];

    for (std::size_t a : members) {
      const Mag& m = cat.mags[a];
      for (std::size_t b : members) {
        if (a == b) continue;
        ++out.pairs;
        const DeltaSet diff = delta(m, cat.mags[b]);
        const bool has_move = std::any_of(diff.begin(), diff.end(), [&](const Edge& e) {
          if (e.kind == EdgeKind::Directed) return is_blanketed_directed(m, e.u, e.v);
          return is_blanketed_bidirected_against(m, e.u, e.v) ||
                 is_blanketed_bidirected_against(m, e.v, e.u);
        });
        if (!has_move) {
          Counterexample ce{cat.keys[a], cat.keys[b], {}};
          for (const Edge& e : diff) ce.delta.push_back(edge_token(e));
          out.counterexamples.push_back(std::move(ce));
        }
      }
    }

    try {
      const Closure closure =
          equivalence_class_closure(cat.mags[members.front()], cat.mags.size());
      for (const auto& key : cat.classes.member_keys[c]) {
        if (!std::binary_search(closure.keys.begin(), closure.keys.end(), key)) ++out.unreachable;
      }
    } catch (...) {
#pragma omp critical(mag_conjecture_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  ConjectureReport report;
  report.n = n;
  report.mag_count = cat.mags.size();
  report.class_count = classes.size();
  report.classes_examined = classes.size();
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    report.pairs_examined += per_class[c].pairs;
    std::move(per_class[c].counterexamples.begin(), per_class[c].counterexamples.end(),
              std::back_inserter(report.counterexamples));
    if (per_class[c].unreachable > 0) report.closure_gaps.push_back({c, per_class[c].unreachable});
  }
  if (n <= 4) {
    report.checks = run_theorem_checks(cat);
  } else {
    report.checks.push_back(check_lemma2(cat.mags));
  }
  return report;
}

nlohmann::json to_json(const CheckResult& c) {
  return {{"passed", c.passed()},
          {"cases", c.cases},
          {"violations", c.violation_count},
          {"examples", c.examples}};
}

nlohmann::json to_json(const EquivalenceReport& r) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : r.checks) checks[c.name] = to_json(c);
  return {{"n", r.n},
          {"mag_count", r.mag_count},
          {"class_count", r.class_count},
          {"all_passed", r.all_passed()},
          {"checks", std::move(checks)}};
}

nlohmann::json to_json(const ConjectureReport& r) {
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const auto& ce : r.counterexamples) {
    counterexamples.push_back({{"m1", ce.key1}, {"m2", ce.key2}, {"delta", ce.delta}});
  }
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& gap : r.closure_gaps) {
    gaps.push_back({{"class", gap.class_id}, {"unreachable", gap.unreachable}});
  }
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : r.checks) checks[c.name] = to_json(c);
  return {{"n", r.n},
          {"mag_count", r.mag_count},
          {"class_count", r.class_count},
          {"classes_examined", r.classes_examined},
          {"pairs_examined", r.pairs_examined},
          {"counterexamples", std::move(counterexamples)},
          {"closure_gaps", std::move(gaps)},
          {"checks", std::move(checks)}};
}

}  // namespace mag
