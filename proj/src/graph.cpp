#include "augecc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace augecc {

Vertex Graph::check(Vertex v) const {
  if (v < 0 || v >= order())
    throw GraphError("vertex " + std::to_string(v) + " out of range 0.." +
                     std::to_string(order() - 1));
  return v;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  check(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v)
    out[v] = static_cast<int>(adj_[v].size());
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 1)
    throw GraphError("graph needs at least one vertex, got n=" + std::to_string(n));
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex u = 0; u < n; ++u) {
    auto &nb = g.adj_[u];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end())
      throw GraphError("duplicate edge (" + std::to_string(std::min(u, *dup)) +
                       "," + std::to_string(std::max(u, *dup)) + ")");
  }
  g.edge_count_ = edges.size();
  return g;
}

Graph relabel(const Graph &g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw GraphError("permutation size does not match graph order");
  std::vector<Edge> edges = g.edges();
  for (auto &[u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return build_graph(g.order(), edges);
}

std::vector<int> bfs_distances(const Graph &g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph &g) {
  if (g.order() == 0)
    return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph &g) {
  return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) &&
         is_connected(g);
}

bool is_path(const Graph &g) {
  if (!is_tree(g))
    return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2)
      return false;
  return true;
}

EccProfile eccentricities(const Graph &g) {
  EccProfile p;
  const int n = g.order();
  p.ecc.resize(static_cast<std::size_t>(n));
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue[0] = s;
    std::size_t tail = 1;
    int far = 0;
    for (std::size_t head = 0; head < tail; ++head) {
      Vertex u = queue[head];
      far = dist[u];
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    if (tail != static_cast<std::size_t>(n))
      throw GraphError("graph is disconnected; eccentricity is infinite");
    p.ecc[s] = far;
  }
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  int radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  for (Vertex v = 0; v < n; ++v)
    if (p.ecc[v] == radius)
      p.center.push_back(v);
  return p;
}

BigInt neighbor_degree_product(const Graph &g, Vertex u) {
  BigInt prod = 1;
  for (Vertex v : g.neighbors(u))
    prod *= g.degree(v);
  return prod;
}

std::string to_string(IndexKind kind) {
  return kind == IndexKind::Augmented ? "aeci" : "saeci";
}

Rational index_value(const Graph &g, IndexKind kind) {
  if (g.order() < 2)
    throw GraphError("index is undefined for a single vertex (eccentricity 0)");
  return index_value(g, eccentricities(g), kind);
}

Rational index_value(const Graph &g, const EccProfile &profile, IndexKind kind) {
  if (g.order() < 2)
    throw GraphError("index is undefined for a single vertex (eccentricity 0)");
  auto weight = [kind](int e) -> unsigned long {
    auto w = static_cast<unsigned long>(e);
    return kind == IndexKind::Augmented ? w : w * w;
  };
  // Sum over the common denominator lcm of all weights, reduce once.
  BigInt common = 1;
  for (int e : profile.ecc) {
    BigInt w = weight(e);
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), w.get_mpz_t());
  }
  BigInt total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    BigInt term = neighbor_degree_product(g, u);
    term *= common;
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), weight(profile.ecc[u]));
    total += term;
  }
  return Rational(total, common);
}

std::optional<std::size_t> first_branching_index(const Graph &g,
                                                 std::span<const Vertex> path) {
  for (std::size_t i = 0; i < path.size(); ++i)
    if (g.degree(path[i]) >= 3)
      return i;
  return std::nullopt;
}

std::vector<Vertex> diametric_path_farthest_branch(const Graph &t) {
  if (!is_tree(t))
    throw GraphError("diametric path selection requires a tree");
  const int n = t.order();
  if (n == 1)
    return {0};
  const EccProfile prof = eccentricities(t);
  const int diam = prof.diameter;

  std::vector<Vertex> best;
  int best_branch = -2;

  std::vector<int> depth(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> order;
  std::vector<int> branch(static_cast<std::size_t>(n));  // first branch depth on root path, -1 none
  std::vector<int> reach(static_cast<std::size_t>(n));   // best branch over diametric leaves below, -2 none

  for (Vertex a = 0; a < n; ++a) {
    if (prof.ecc[a] != diam)
      continue;
    // BFS tree rooted at a, children visited in increasing id order.
    std::fill(depth.begin(), depth.end(), -1);
    order.clear();
    depth[a] = 0;
    parent[a] = -1;
    order.push_back(a);
    for (std::size_t h = 0; h < order.size(); ++h) {
      Vertex u = order[h];
      for (Vertex v : t.neighbors(u))
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          order.push_back(v);
        }
    }
    for (Vertex u : order) {
      int inherited = parent[u] < 0 ? -1 : branch[parent[u]];
      branch[u] = inherited >= 0 ? inherited : (t.degree(u) >= 3 ? depth[u] : -1);
    }
    std::fill(reach.begin(), reach.end(), -2);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex u = *it;
      if (depth[u] == diam)
        reach[u] = branch[u];
      if (parent[u] >= 0)
        reach[parent[u]] = std::max(reach[parent[u]], reach[u]);
    }
    if (reach[a] <= best_branch)
      continue;
    best_branch = reach[a];
    // Greedy descent: smallest child that still attains the best branch.
    best.assign(1, a);
    Vertex cur = a;
    while (depth[cur] < diam) {
      Vertex next = -1;
      for (Vertex v : t.neighbors(cur))
        if (parent[v] == cur && depth[v] == depth[cur] + 1 && reach[v] == best_branch) {
          next = v;
          break;
        }
      cur = next;
      best.push_back(cur);
    }
  }
  return best;
}

std::optional<Matching> tree_perfect_matching(const Graph &t) {
  if (!is_tree(t))
    throw GraphError("perfect matching by leaf stripping requires a tree");
  const int n = t.order();
  if (n % 2 != 0)
    return std::nullopt;
  std::vector<int> deg = t.degrees();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1)
      leaves.push_back(v);
  Matching m;
  while (!leaves.empty()) {
    Vertex leaf = leaves.back();
    leaves.pop_back();
    if (removed[leaf])
      continue;
    Vertex mate = -1;
    for (Vertex v : t.neighbors(leaf))
      if (!removed[v]) {
        mate = v;
        break;
      }
    if (mate < 0)
      return std::nullopt;  // isolated after stripping
    removed[leaf] = removed[mate] = 1;
    m.edges.emplace_back(std::min(leaf, mate), std::max(leaf, mate));
    for (Vertex v : t.neighbors(mate))
      if (!removed[v] && --deg[v] == 1)
        leaves.push_back(v);
    for (Vertex v : t.neighbors(mate))
      if (!removed[v] && deg[v] == 0)
        return std::nullopt;
  }
  if (!m.covers(n))
    return std::nullopt;
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

} // namespace augecc
