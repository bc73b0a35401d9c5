#pragma once

#include <stdexcept>
#include <string>

namespace mag {

// Malformed arguments: unknown nodes, overlapping query sets, bad edges.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that does not parse as a graph.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// A graph handed to Mag's constructor that fails ancestrality or maximality.
class NotAMagError : public InputError {
 public:
  using InputError::InputError;
};

// A move whose justifying predicate does not hold on the given MAG.
class MoveRejected : public InputError {
 public:
  using InputError::InputError;
};

// A caller broke an operation's documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A move passed its predicate but produced a graph that is not a MAG. Only
// reachable if the edge-replacement theorems were wrong.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Outcome of a multi-clause predicate. `reason` names the failing clause and
// its witness when `holds` is false.
struct Verdict {
  bool holds = true;
  std::string reason;

  static Verdict yes() { return {}; }
  static Verdict no(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return holds; }
};

}  // namespace mag
