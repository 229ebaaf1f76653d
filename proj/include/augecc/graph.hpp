#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "augecc/rational.hpp"

namespace augecc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed graph input: bad ids, loops, duplicate edges, disconnected input.
struct GraphError : Error {
  using Error::Error;
};

// A well-formed input that does not meet an operation's precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[check(v)]; }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  friend Graph build_graph(int n, std::span<const Edge> edges);
  Vertex check(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Throws GraphError on out-of-range ids, self-loops, or duplicate edges.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Image of g under v -> perm[v].
Graph relabel(const Graph &g, std::span<const Vertex> perm);

bool is_connected(const Graph &g);
bool is_tree(const Graph &g);
bool is_path(const Graph &g);

// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph &g, Vertex source);

struct EccProfile {
  std::vector<int> ecc;
  int diameter = 0;
  std::vector<Vertex> center;
};

// Throws GraphError when g is disconnected.
EccProfile eccentricities(const Graph &g);

BigInt neighbor_degree_product(const Graph &g, Vertex u);

enum class IndexKind { Augmented, SuperAugmented };

std::string to_string(IndexKind kind);

// Sum over vertices of M(u)/ecc(u) (Augmented) or M(u)/ecc(u)^2
// (SuperAugmented). Requires a connected graph on at least two vertices.
Rational index_value(const Graph &g, IndexKind kind);
Rational index_value(const Graph &g, const EccProfile &profile, IndexKind kind);

// Diametric path v_0..v_D of a tree maximizing the position of the first
// vertex of degree >= 3, ties broken by the lexicographically smallest
// vertex sequence. For a path graph this is the path itself, starting at
// its smaller endpoint.
std::vector<Vertex> diametric_path_farthest_branch(const Graph &t);

// Index of the first vertex of degree >= 3 along path, or nullopt.
std::optional<std::size_t> first_branching_index(const Graph &g,
                                                 std::span<const Vertex> path);

struct Matching {
  std::vector<Edge> edges;  // (u, v) with u < v, sorted

  bool covers(int n) const { return 2 * static_cast<int>(edges.size()) == n; }
  friend bool operator==(const Matching &, const Matching &) = default;
};

// Unique perfect matching of a tree by leaf stripping; nullopt when none
// exists. Throws GraphError for non-trees.
std::optional<Matching> tree_perfect_matching(const Graph &t);

} // namespace augecc
