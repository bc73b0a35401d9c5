#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mag/graph.hpp"
#include "mag/mag_core.hpp"

namespace mag {

// Largest n the exhaustive operations accept: 4^10 mark assignments at n = 5.
inline constexpr std::size_t kMaxEnumerationNodes = 5;

std::size_t pair_count(std::size_t n);
std::uint64_t assignment_count(std::size_t n);

/// Decodes one mark assignment: base-4 digits over pairs (0,1), (0,2), ...,
/// (1,2), ... with 0 absent, 1 i->j, 2 j->i, 3 i<->j. Labels are indices.
MixedGraph graph_from_assignment(std::size_t n, std::uint64_t code);

/// Every MAG on n labeled nodes, in canonical-key order. OpenMP-parallel
/// over assignments. Throws InputError unless 1 <= n <= kMaxEnumerationNodes.
std::vector<Mag> enumerate_mags(std::size_t n);
// Single-threaded reference for enumerate_mags.
std::vector<Mag> enumerate_mags_serial(std::size_t n);

/// Markov equivalence classes of a MAG collection.
struct ClassPartition {
  std::vector<std::size_t> class_of;                  // input index -> class id
  std::vector<std::vector<std::size_t>> classes;      // member input indices, by key
  std::map<std::string, std::size_t> class_by_key;    // canonical key -> class id
  std::vector<std::vector<std::string>> member_keys;  // parallel to classes
};

/// Partition under brute-force m-separation equivalence. Classes are ordered
/// by their smallest member key. Signatures are computed in parallel.
/// Throws InputError if node sets differ.
ClassPartition partition_into_classes(std::span<const Mag> mags);
ClassPartition partition_into_classes_serial(std::span<const Mag> mags);

/// Checks, for a blanketed x -> y (or x <-> y blanketed against x), that
/// every path (A1, ..., Ak, x) avoiding y whose internal nodes are colliders
/// and with Ak a spouse of x has some Ai a spouse of y or all Ai parents of
/// y. Throws InputError if the edge is not blanketed as required.
bool check_lemma1(const Mag& m, NodeId x, NodeId y);
// The first violating path (A1, ..., Ak, x), if any.
std::optional<Path> find_lemma1_violation(const Mag& m, NodeId x, NodeId y);

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> examples;  // first few violations

  bool passed() const noexcept { return violation_count == 0; }
};

// Screened implies blanketed, over every directed edge of every given MAG.
CheckResult check_lemma2(std::span<const Mag> mags);

struct EquivalenceReport {
  std::size_t n = 0;
  std::size_t mag_count = 0;
  std::size_t class_count = 0;
  // thm3_sound, thm3_necessary, thm4_iff, lemma1, lemma2, thm2_vs_oracle
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult& check(std::string_view name) const;
};

/// Exhaustive checks of the edge-replacement results over all MAGs on n
/// nodes, plus agreement of markov_equivalent with the brute-force oracle.
/// Throws InputError unless 1 <= n <= 4.
EquivalenceReport verify_theorems(std::size_t n);

struct Counterexample {
  std::string key1;
  std::string key2;
  std::vector<std::string> delta;  // delta edges of the first graph, as canonical tokens
};

struct ClosureGap {
  std::size_t class_id;
  std::size_t unreachable;
};

struct ConjectureReport {
  std::size_t n = 0;
  std::size_t mag_count = 0;
  std::size_t class_count = 0;
  std::size_t classes_examined = 0;
  std::uint64_t pairs_examined = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<ClosureGap> closure_gaps;
  // verify_theorems for n <= 4; lemma2 alone at n = 5
  std::vector<CheckResult> checks;
};

/// For every ordered pair of distinct equivalent MAGs (M, M'), looks for an
/// edge of delta(M, M') that is blanketed in M (directed) or blanketed
/// against one of its endpoints in M (bi-directed); pairs without one are
/// counterexamples. Also records, per class, how many members the move
/// closure of the smallest-key member misses.
ConjectureReport test_conjecture1(std::size_t n);

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const EquivalenceReport& r);
nlohmann::json to_json(const ConjectureReport& r);

}  // namespace mag
