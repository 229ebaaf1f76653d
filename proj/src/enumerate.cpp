#include "augecc/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <random>
#include <sstream>

namespace augecc {

std::string CanonicalCode::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < levels.size(); ++i)
    os << (i ? "," : "") << levels[i];
  return os.str();
}

namespace {

// Vertices of minimum eccentricity of a tree, found by peeling leaves.
std::vector<Vertex> tree_centers(const Graph &t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      all[v] = v;
    return all;
  }
  std::vector<int> deg = t.degrees();
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1)
      layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex v : t.neighbors(leaf))
        if (--deg[v] == 1)
          next.push_back(v);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Canonical level sequence of the subtree at root, not crossing `blocked`.
// Children are ordered by decreasing sequence.
std::vector<int> rooted_levels(const Graph &t, Vertex root, Vertex blocked) {
  const int n = t.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  parent[root] = root;
  for (std::size_t h = 0; h < order.size(); ++h) {
    Vertex u = order[h];
    for (Vertex v : t.neighbors(u))
      if (v != blocked && parent[v] < 0) {
        parent[v] = u;
        depth[v] = depth[u] + 1;
        order.push_back(v);
      }
  }
  std::vector<std::vector<std::vector<int>>> child_seqs(static_cast<std::size_t>(n));
  std::vector<int> result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex u = *it;
    auto &kids = child_seqs[u];
    std::sort(kids.begin(), kids.end(), std::greater<>());
    std::vector<int> seq{depth[u]};
    for (auto &k : kids)
      seq.insert(seq.end(), k.begin(), k.end());
    kids.clear();
    kids.shrink_to_fit();
    if (u == root)
      result = std::move(seq);
    else
      child_seqs[parent[u]].push_back(std::move(seq));
  }
  return result;
}

} // namespace

CanonicalCode canonical_code(const Graph &t) {
  if (!is_tree(t))
    throw GraphError("canonical code requires a tree");
  auto centers = tree_centers(t);
  if (centers.size() == 1)
    return {rooted_levels(t, centers[0], -1)};
  auto a = rooted_levels(t, centers[0], centers[1]);
  auto b = rooted_levels(t, centers[1], centers[0]);
  if (a < b)
    std::swap(a, b);
  a.insert(a.end(), b.begin(), b.end());
  return {std::move(a)};
}

Graph tree_from_levels(std::span<const int> levels) {
  if (levels.empty() || levels[0] != 0)
    throw GraphError("level sequence must start with the root at level 0");
  std::vector<Vertex> last_at(levels.size() + 1, -1);
  std::vector<Edge> edges;
  edges.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    int lv = levels[i];
    if (i > 0) {
      if (lv < 1 || last_at[static_cast<std::size_t>(lv - 1)] < 0)
        throw GraphError("invalid level sequence at position " + std::to_string(i));
      edges.emplace_back(last_at[static_cast<std::size_t>(lv - 1)], static_cast<Vertex>(i));
    }
    last_at[static_cast<std::size_t>(lv)] = static_cast<Vertex>(i);
  }
  return build_graph(static_cast<int>(levels.size()), edges);
}

FreeTreeStream::FreeTreeStream(int n) : n_(n) {
  if (n < 1 || n > kMaxFreeTreeOrder)
    throw PreconditionError("free tree generation supports 1 <= n <= " +
                            std::to_string(kMaxFreeTreeOrder) + ", got " +
                            std::to_string(n));
}

bool FreeTreeStream::advance_rooted(std::size_t p) {
  if (p == 0)
    return false;
  std::size_t q = p - 1;
  while (current_[q] != current_[p] - 1)
    --q;
  for (std::size_t i = p; i < current_.size(); ++i)
    current_[i] = current_[i - p + q];
  return true;
}

void FreeTreeStream::validate_or_jump() {
  // Split off the leftmost subtree of the root: positions [1, m).
  const std::size_t len = current_.size();
  std::size_t m = 2;
  while (m < len && current_[m] != 1)
    ++m;
  const std::size_t left_len = m - 1;
  const std::size_t rest_len = 1 + (len - m);
  int left_height = 0, rest_height = 0;
  for (std::size_t i = 1; i < m; ++i)
    left_height = std::max(left_height, current_[i] - 1);
  for (std::size_t i = m; i < len; ++i)
    rest_height = std::max(rest_height, current_[i]);

  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left_len > rest_len) {
      valid = false;
    } else if (left_len == rest_len) {
      // Compare left (shifted down one level) with [0] + rest.
      std::vector<int> left, rest{0};
      for (std::size_t i = 1; i < m; ++i)
        left.push_back(current_[i] - 1);
      rest.insert(rest.end(), current_.begin() + static_cast<std::ptrdiff_t>(m), current_.end());
      valid = !(left > rest);
    }
  }
  if (valid)
    return;

  const std::size_t p = left_len;
  const int old_at_p = current_[p];
  advance_rooted(p);
  if (old_at_p > 2) {
    std::size_t m2 = 2;
    while (m2 < len && current_[m2] != 1)
      ++m2;
    int new_left_height = 0;
    for (std::size_t i = 1; i < m2; ++i)
      new_left_height = std::max(new_left_height, current_[i] - 1);
    const std::size_t suffix = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t j = 0; j < suffix; ++j)
      current_[len - suffix + j] = static_cast<int>(j) + 1;
  }
}

bool FreeTreeStream::next() {
  if (done_)
    return false;
  if (!started_) {
    started_ = true;
    if (n_ == 1) {
      current_ = {0};
      return true;
    }
    // Path rooted at its center.
    for (int i = 0; i <= n_ / 2; ++i)
      current_.push_back(i);
    for (int i = 1; i < (n_ + 1) / 2; ++i)
      current_.push_back(i);
    validate_or_jump();
    return true;
  }
  if (n_ == 1) {
    done_ = true;
    return false;
  }
  std::size_t p = current_.size() - 1;
  while (p > 0 && current_[p] == 1)
    --p;
  if (!advance_rooted(p)) {
    done_ = true;
    return false;
  }
  validate_or_jump();
  return true;
}

void for_each_free_tree(int n, const std::function<void(const Graph &)> &fn, int part,
                        int parts) {
  if (parts < 1 || part < 0 || part >= parts)
    throw PreconditionError("invalid stream partition");
  FreeTreeStream stream(n);
  for (long idx = 0; stream.next(); ++idx)
    if (idx % parts == part)
      fn(stream.graph());
}

std::vector<Graph> free_trees(int n) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const Graph &g) { out.push_back(g); });
  return out;
}

void for_each_pm_tree(int n, const std::function<void(const Graph &)> &fn, int part,
                      int parts) {
  if (n % 2 != 0)
    throw PreconditionError("trees with a perfect matching need even n, got " +
                            std::to_string(n));
  for_each_free_tree(
      n,
      [&](const Graph &g) {
        if (tree_perfect_matching(g))
          fn(g);
      },
      part, parts);
}

std::vector<Graph> pm_trees(int n) {
  std::vector<Graph> out;
  for_each_pm_tree(n, [&](const Graph &g) { out.push_back(g); });
  return out;
}

Graph tree_from_pruefer(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n)
      throw GraphError("Pruefer entry out of range");
    ++deg[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1)
      leaves.push(v);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int x : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1)
      leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return build_graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2)
    throw PreconditionError("random tree needs n >= 2");
  std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(sseq);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int &x : seq)
    x = pick(rng);
  return tree_from_pruefer(seq);
}

void for_each_connected_labeled_graph(int n, const std::function<void(const Graph &)> &fn,
                                      int part, int parts) {
  if (n < 2 || n > kMaxLabeledGraphOrder)
    throw PreconditionError("labeled graph enumeration supports 2 <= n <= " +
                            std::to_string(kMaxLabeledGraphOrder) + ", got " +
                            std::to_string(n));
  if (parts < 1 || part < 0 || part >= parts)
    throw PreconditionError("invalid enumeration partition");
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      pairs.emplace_back(i, j);
  const std::uint32_t total = 1u << pairs.size();
  const std::uint32_t all = (1u << n) - 1;
  std::vector<Edge> edges;
  for (std::uint32_t mask = static_cast<std::uint32_t>(part); mask < total;
       mask += static_cast<std::uint32_t>(parts)) {
    if (std::popcount(mask) < n - 1)
      continue;
    std::uint32_t adj[kMaxLabeledGraphOrder] = {};
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1u) {
        adj[pairs[b].first] |= 1u << pairs[b].second;
        adj[pairs[b].second] |= 1u << pairs[b].first;
      }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1u)
          next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != all)
      continue;
    edges.clear();
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1u)
        edges.push_back(pairs[b]);
    fn(build_graph(n, edges));
  }
}

std::uint64_t count_connected_labeled_graphs(int n) {
  std::uint64_t count = 0;
  for_each_connected_labeled_graph(n, [&](const Graph &) { ++count; });
  return count;
}

} // namespace augecc
