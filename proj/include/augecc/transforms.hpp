#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augecc/graph.hpp"
#include "augecc/rational.hpp"

namespace augecc {

enum class TransformRule { PathMin, StarMax, BalanceShift, DegReducePath, P3Rebalance, PmShift };

std::string to_string(TransformRule rule);
std::optional<TransformRule> parse_rule(const std::string &name);

// Whether the rule is expected to raise (true) or lower (false) the index.
bool rule_increases(TransformRule rule);

// Reason the rule's precondition fails on t, or nullopt when it applies.
std::optional<std::string> precondition_failure(TransformRule rule, const Graph &t);
inline bool rule_applies(TransformRule rule, const Graph &t) {
  return !precondition_failure(rule, t);
}

// Each apply_* returns the transformed tree, keeping vertex ids; throws
// PreconditionError naming the violated condition.

// Moves every off-path neighbor of the chosen branching vertex u onto v_0
// of the farthest-branch diametric path. Lowers the index, raises diameter.
Graph apply_path_min(const Graph &t);
// Moves all pendant neighbors of v_1 (v_0 included) onto v_{D-1}, with the
// path oriented so that M(v_2)/deg(v_1) <= M(v_{D-2})/deg(v_{D-1}). D >= 5.
Graph apply_star_max(const Graph &t);
// D = 4: moves one pendant from the highest-degree to the lowest-degree
// neighbor of the center when their degrees differ by at least 2.
Graph apply_balance(const Graph &t);
// D = 4, neighbor degrees within 1, max degree >= 4: two pendants of the
// highest-degree neighbor become a pendant path of length 2 on the center.
Graph apply_deg_reduce_path(const Graph &t);
// TB_{n,k} with ceil((n-1)/k) = 3 and k != ceil((n-1)/3): detaches a
// degree-2 neighbor v_1 and its pendant, hanging them on two other
// degree-2 neighbors. Result is TB_{n,k-1}.
Graph apply_p3_rebalance(const Graph &t);
// Tree with perfect matching, D >= 5: moves every degree-2 neighbor of v_2
// other than v_3 onto v_3. Keeps the perfect matching.
Graph apply_pm_shift(const Graph &t);

Graph apply_rule(TransformRule rule, const Graph &t);

enum class Direction { Decreasing, Increasing, PmIncreasing };

std::string to_string(Direction d);

struct TraceStep {
  Graph graph;
  Rational value;
  TransformRule rule;
};

struct TreeTrace {
  Direction direction = Direction::Decreasing;
  Graph start;
  Rational start_value;
  std::vector<TraceStep> steps;

  const Graph &final_graph() const { return steps.empty() ? start : steps.back().graph; }
};

// Thrown when a rule application moves the index the wrong way.
struct MonotonicityViolation : Error {
  MonotonicityViolation(const std::string &what, Graph before, Graph after)
      : Error(what), before(std::move(before)), after(std::move(after)) {}
  Graph before, after;
};

// Iterates rules to a fixed point:
//   Decreasing   PathMin until the tree is a path;
//   Increasing   StarMax while D >= 5, then BalanceShift, DegReducePath,
//                P3Rebalance (first applicable, in that order) while any applies;
//   PmIncreasing PmShift while D >= 5 (input must have a perfect matching).
// Every step is checked for strict monotonicity of the augmented index.
TreeTrace reduce(const Graph &t, Direction direction);

} // namespace augecc
