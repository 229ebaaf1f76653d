#include "augecc/transforms.hpp"

#include <algorithm>

#include "augecc/families.hpp"

namespace augecc {

std::string to_string(TransformRule rule) {
  switch (rule) {
  case TransformRule::PathMin: return "pathmin";
  case TransformRule::StarMax: return "starmax";
  case TransformRule::BalanceShift: return "balance";
  case TransformRule::DegReducePath: return "degreduce";
  case TransformRule::P3Rebalance: return "p3";
  case TransformRule::PmShift: return "pmshift";
  }
  return "?";
}

std::optional<TransformRule> parse_rule(const std::string &name) {
  for (auto r : {TransformRule::PathMin, TransformRule::StarMax, TransformRule::BalanceShift,
                 TransformRule::DegReducePath, TransformRule::P3Rebalance,
                 TransformRule::PmShift})
    if (to_string(r) == name)
      return r;
  return std::nullopt;
}

bool rule_increases(TransformRule rule) { return rule != TransformRule::PathMin; }

std::string to_string(Direction d) {
  switch (d) {
  case Direction::Decreasing: return "decreasing";
  case Direction::Increasing: return "increasing";
  case Direction::PmIncreasing: return "pm-increasing";
  }
  return "?";
}

namespace {

// Replaces each edge (from, w) by (to, w).
Graph reattach(const Graph &t, Vertex from, std::span<const Vertex> movers, Vertex to) {
  std::vector<Edge> edges = t.edges();
  for (auto &[a, b] : edges)
    for (Vertex w : movers)
      if ((a == from && b == w) || (a == w && b == from)) {
        a = to;
        b = w;
      }
  return build_graph(t.order(), edges);
}

Graph rewire(const Graph &t, std::span<const Edge> remove, std::span<const Edge> add) {
  std::vector<Edge> edges;
  for (auto e : t.edges()) {
    bool drop = std::any_of(remove.begin(), remove.end(), [&](const Edge &r) {
      return (r.first == e.first && r.second == e.second) ||
             (r.first == e.second && r.second == e.first);
    });
    if (!drop)
      edges.push_back(e);
  }
  edges.insert(edges.end(), add.begin(), add.end());
  return build_graph(t.order(), edges);
}

Vertex smallest_pendant(const Graph &t, Vertex v) {
  for (Vertex w : t.neighbors(v))
    if (t.degree(w) == 1)
      return w;
  return -1;
}

// Shape of a diameter-4 tree around its unique center.
struct CenterView {
  Vertex center = -1;
  std::vector<Vertex> nbrs;  // ascending by (degree, id)
  int nonleaf = 0;
  int spread = 0;
};

std::optional<std::string> diameter_four_view(const Graph &t, CenterView &view) {
  if (!is_tree(t))
    return "input is not a tree";
  auto prof = eccentricities(t);
  if (prof.diameter != 4)
    return "diameter is " + std::to_string(prof.diameter) + ", rule needs D = 4";
  view.center = prof.center.front();
  auto nb = t.neighbors(view.center);
  view.nbrs.assign(nb.begin(), nb.end());
  std::stable_sort(view.nbrs.begin(), view.nbrs.end(),
                   [&](Vertex a, Vertex b) { return t.degree(a) < t.degree(b); });
  view.nonleaf = static_cast<int>(std::count_if(
      view.nbrs.begin(), view.nbrs.end(), [&](Vertex v) { return t.degree(v) >= 2; }));
  view.spread = t.degree(view.nbrs.back()) - t.degree(view.nbrs.front());
  if (view.nonleaf < 3)
    return "center has " + std::to_string(view.nonleaf) +
           " non-leaf neighbors, rule needs at least 3";
  return std::nullopt;
}

struct PathChoice {
  std::vector<Vertex> path;
  int diameter = 0;
};

std::optional<std::string> tree_with_path(const Graph &t, PathChoice &out) {
  if (!is_tree(t))
    return "input is not a tree";
  out.path = diametric_path_farthest_branch(t);
  out.diameter = static_cast<int>(out.path.size()) - 1;
  return std::nullopt;
}

std::optional<std::string> fail_path_min(const Graph &t) {
  if (!is_tree(t))
    return "input is not a tree";
  if (is_path(t))
    return "tree is already a path";
  return std::nullopt;
}

std::optional<std::string> fail_star_max(const Graph &t) {
  if (!is_tree(t))
    return "input is not a tree";
  int d = eccentricities(t).diameter;
  if (d < 5)
    return "diameter is " + std::to_string(d) + ", rule needs D >= 5";
  return std::nullopt;
}

std::optional<std::string> fail_balance(const Graph &t) {
  CenterView v;
  if (auto why = diameter_four_view(t, v))
    return why;
  if (v.spread < 2)
    return "center neighbor degrees differ by " + std::to_string(v.spread) +
           ", rule needs at least 2";
  return std::nullopt;
}

std::optional<std::string> fail_deg_reduce(const Graph &t) {
  CenterView v;
  if (auto why = diameter_four_view(t, v))
    return why;
  if (v.spread > 1)
    return "center neighbor degrees differ by " + std::to_string(v.spread) +
           ", rule needs at most 1";
  if (t.degree(v.nbrs.back()) < 4)
    return "largest center neighbor degree is " + std::to_string(t.degree(v.nbrs.back())) +
           ", rule needs at least 4";
  return std::nullopt;
}

std::optional<std::string> fail_p3(const Graph &t) {
  CenterView v;
  if (auto why = diameter_four_view(t, v))
    return why;
  if (v.spread > 1)
    return "tree is not degree balanced (neighbor degrees differ by " +
           std::to_string(v.spread) + ")";
  const int n = t.order();
  const int k = static_cast<int>(v.nbrs.size());
  if (ceil_div(n - 1, k) != 3)
    return "ceil((n-1)/k) = " + std::to_string(ceil_div(n - 1, k)) + ", rule needs 3";
  if (k == tb_third_degree(n))
    return "center degree already equals ceil((n-1)/3) = " + std::to_string(k);
  return std::nullopt;
}

std::optional<std::string> fail_pm_shift(const Graph &t) {
  if (!is_tree(t))
    return "input is not a tree";
  if (!tree_perfect_matching(t))
    return "tree has no perfect matching";
  int d = eccentricities(t).diameter;
  if (d < 5)
    return "diameter is " + std::to_string(d) + ", rule needs D >= 5";
  return std::nullopt;
}

void require(TransformRule rule, const Graph &t) {
  if (auto why = precondition_failure(rule, t))
    throw PreconditionError(to_string(rule) + ": " + *why);
}

} // namespace

std::optional<std::string> precondition_failure(TransformRule rule, const Graph &t) {
  switch (rule) {
  case TransformRule::PathMin: return fail_path_min(t);
  case TransformRule::StarMax: return fail_star_max(t);
  case TransformRule::BalanceShift: return fail_balance(t);
  case TransformRule::DegReducePath: return fail_deg_reduce(t);
  case TransformRule::P3Rebalance: return fail_p3(t);
  case TransformRule::PmShift: return fail_pm_shift(t);
  }
  return "unknown rule";
}

Graph apply_path_min(const Graph &t) {
  require(TransformRule::PathMin, t);
  PathChoice pc;
  tree_with_path(t, pc);
  const auto &p = pc.path;
  std::size_t i = *first_branching_index(t, p);
  std::size_t u_idx = (pc.diameter > 2 && i == 1 && t.degree(p[2]) > 2) ? 2 : i;
  Vertex u = p[u_idx];
  std::vector<Vertex> movers;
  for (Vertex w : t.neighbors(u))
    if (w != p[u_idx - 1] && w != p[u_idx + 1])
      movers.push_back(w);
  return reattach(t, u, movers, p[0]);
}

Graph apply_star_max(const Graph &t) {
  require(TransformRule::StarMax, t);
  PathChoice pc;
  tree_with_path(t, pc);
  auto p = pc.path;
  const int d = pc.diameter;
  auto ratio = [&](Vertex mid, Vertex near) {
    return Rational(neighbor_degree_product(t, mid), BigInt(t.degree(near)));
  };
  if (ratio(p[2], p[1]) > ratio(p[d - 2], p[d - 1]))
    std::reverse(p.begin(), p.end());
  std::vector<Vertex> movers;
  for (Vertex w : t.neighbors(p[1]))
    if (t.degree(w) == 1)
      movers.push_back(w);
  return reattach(t, p[1], movers, p[d - 1]);
}

Graph apply_balance(const Graph &t) {
  require(TransformRule::BalanceShift, t);
  CenterView v;
  diameter_four_view(t, v);
  Vertex low = v.nbrs.front(), high = v.nbrs.back();
  Vertex leaf = smallest_pendant(t, high);
  Vertex movers[] = {leaf};
  return reattach(t, high, movers, low);
}

Graph apply_deg_reduce_path(const Graph &t) {
  require(TransformRule::DegReducePath, t);
  CenterView v;
  diameter_four_view(t, v);
  Vertex high = v.nbrs.back();
  std::vector<Vertex> leaves;
  for (Vertex w : t.neighbors(high))
    if (t.degree(w) == 1 && leaves.size() < 2)
      leaves.push_back(w);
  Edge remove[] = {{high, leaves[0]}, {high, leaves[1]}};
  Edge add[] = {{v.center, leaves[0]}, {leaves[0], leaves[1]}};
  return rewire(t, remove, add);
}

Graph apply_p3_rebalance(const Graph &t) {
  require(TransformRule::P3Rebalance, t);
  CenterView v;
  diameter_four_view(t, v);
  Vertex v1 = v.nbrs[0], v2 = v.nbrs[1], v3 = v.nbrs[2];
  Vertex w1 = smallest_pendant(t, v1);
  Edge remove[] = {{v.center, v1}, {v1, w1}};
  Edge add[] = {{v2, v1}, {v3, w1}};
  return rewire(t, remove, add);
}

Graph apply_pm_shift(const Graph &t) {
  require(TransformRule::PmShift, t);
  PathChoice pc;
  tree_with_path(t, pc);
  const auto &p = pc.path;
  std::vector<Vertex> movers;
  for (Vertex w : t.neighbors(p[2]))
    if (w != p[3] && t.degree(w) == 2)
      movers.push_back(w);
  return reattach(t, p[2], movers, p[3]);
}

Graph apply_rule(TransformRule rule, const Graph &t) {
  switch (rule) {
  case TransformRule::PathMin: return apply_path_min(t);
  case TransformRule::StarMax: return apply_star_max(t);
  case TransformRule::BalanceShift: return apply_balance(t);
  case TransformRule::DegReducePath: return apply_deg_reduce_path(t);
  case TransformRule::P3Rebalance: return apply_p3_rebalance(t);
  case TransformRule::PmShift: return apply_pm_shift(t);
  }
  throw PreconditionError("unknown rule");
}

namespace {

std::optional<TransformRule> next_rule(const Graph &t, Direction direction) {
  switch (direction) {
  case Direction::Decreasing:
    return is_path(t) ? std::nullopt : std::optional(TransformRule::PathMin);
  case Direction::PmIncreasing:
    return eccentricities(t).diameter >= 5 ? std::optional(TransformRule::PmShift)
                                           : std::nullopt;
  case Direction::Increasing:
    for (auto r : {TransformRule::StarMax, TransformRule::BalanceShift,
                   TransformRule::DegReducePath, TransformRule::P3Rebalance})
      if (rule_applies(r, t))
        return r;
    return std::nullopt;
  }
  return std::nullopt;
}

} // namespace

TreeTrace reduce(const Graph &t, Direction direction) {
  if (!is_tree(t))
    throw GraphError("reduce requires a tree");
  if (direction == Direction::PmIncreasing && !tree_perfect_matching(t))
    throw PreconditionError("pm-increasing reduction needs a tree with a perfect matching");
  TreeTrace trace;
  trace.direction = direction;
  trace.start = t;
  trace.start_value = t.order() >= 2 ? index_value(t, IndexKind::Augmented) : Rational(0);
  const std::size_t max_steps = static_cast<std::size_t>(t.order()) * t.order() + 1;
  Graph cur = t;
  Rational cur_value = trace.start_value;
  while (auto rule = next_rule(cur, direction)) {
    if (trace.steps.size() >= max_steps)
      throw Error("reduction did not terminate within n^2 steps");
    Graph next = apply_rule(*rule, cur);
    Rational value = index_value(next, IndexKind::Augmented);
    bool ok = rule_increases(*rule) ? value > cur_value : value < cur_value;
    if (!ok)
      throw MonotonicityViolation(to_string(*rule) + " moved the index from " +
                                      cur_value.str() + " to " + value.str(),
                                  cur, next);
    trace.steps.push_back({next, value, *rule});
    cur = std::move(next);
    cur_value = std::move(value);
  }
  return trace;
}

} // namespace augecc
