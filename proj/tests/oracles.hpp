#pragma once

// Test-only reference computations. Nothing here calls the library's
// index, eccentricity, matching or canonical-code code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>
#include <string>
#include <utility>
#include <vector>

#include "augecc/graph.hpp"
#include "augecc/rational.hpp"

namespace oracle {

using augecc::Edge;
using augecc::Graph;
using augecc::Rational;

inline std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge> &edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// All-pairs distances by Floyd-Warshall; INF = n+1 when unreachable.
inline std::vector<std::vector<int>> floyd(int n, const std::vector<Edge> &edges) {
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i)
    d[i][i] = 0;
  for (auto [u, v] : edges)
    d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Term-by-term sum of M(u)/ecc(u)^power.
inline Rational index(int n, const std::vector<Edge> &edges, int power = 1) {
  auto d = floyd(n, edges);
  auto adj = adjacency(n, edges);
  Rational total(0);
  for (int u = 0; u < n; ++u) {
    int ecc = *std::max_element(d[u].begin(), d[u].end());
    augecc::BigInt m = 1;
    for (int v : adj[u])
      m *= static_cast<long>(adj[v].size());
    augecc::BigInt den = power == 1 ? augecc::BigInt(ecc) : augecc::BigInt(ecc * ecc);
    total += Rational(m, den);
  }
  return total;
}

inline Rational index(const Graph &g, int power = 1) {
  return index(g.order(), g.edges(), power);
}

// Every perfect matching, by recursion over the edge list.
inline std::vector<std::vector<Edge>> perfect_matchings(int n, const std::vector<Edge> &edges) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> cur;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (2 * static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (used[u] || used[v])
        continue;
      used[u] = used[v] = 1;
      cur.push_back({std::min(u, v), std::max(u, v)});
      rec(i + 1);
      cur.pop_back();
      used[u] = used[v] = 0;
    }
  };
  if (n % 2 == 0)
    rec(0);
  for (auto &m : out)
    std::sort(m.begin(), m.end());
  return out;
}

// Farthest-branch diametric path by listing every diametric vertex pair.
inline std::vector<int> farthest_branch_path(const Graph &t) {
  const int n = t.order();
  auto edges = t.edges();
  auto d = floyd(n, edges);
  auto adj = adjacency(n, edges);
  int diam = 0;
  for (auto &row : d)
    diam = std::max(diam, *std::max_element(row.begin(), row.end()));
  std::vector<int> best;
  int best_i = -2;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (d[a][b] != diam)
        continue;
      std::vector<int> path{a};
      while (path.back() != b)
        for (int w : adj[path.back()])
          if (d[w][b] == d[path.back()][b] - 1) {
            path.push_back(w);
            break;
          }
      int i = -1;
      for (std::size_t j = 0; j < path.size(); ++j)
        if (adj[path[j]].size() >= 3) {
          i = static_cast<int>(j);
          break;
        }
      if (i > best_i || (i == best_i && path < best)) {
        best_i = i;
        best = path;
      }
    }
  return best;
}

// Canonical parenthesis string of the subtree at v (AHU).
inline std::string ahu(const std::vector<std::vector<int>> &adj, int v, int from) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != from)
      kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto &k : kids)
    s += k;
  return s + ")";
}

// Isomorphism invariant of a free tree: minimum AHU string over all roots.
inline std::string tree_key(int n, const std::vector<Edge> &edges) {
  auto adj = adjacency(n, edges);
  std::string best;
  for (int r = 0; r < n; ++r) {
    auto s = ahu(adj, r, -1);
    if (r == 0 || s < best)
      best = s;
  }
  return best;
}

// Rooted AHU code as a left-aligned bit string: 1, children (sorted), 0.
struct BitCode {
  std::uint64_t bits;  // left-aligned in 64 bits
  int len;
  friend bool operator<(const BitCode &a, const BitCode &b) {
    return a.bits != b.bits ? a.bits > b.bits : a.len < b.len;
  }
  friend bool operator==(const BitCode &, const BitCode &) = default;
};

// Center-rooted AHU key of a labeled tree given as a parent-free edge list.
// Works for n <= 31.
inline std::pair<BitCode, BitCode> fast_tree_key(int n, const std::vector<Edge> &edges) {
  int deg[32] = {}, nb[32][32];
  for (auto [u, v] : edges) {
    nb[u][deg[u]++] = v;
    nb[v][deg[v]++] = u;
  }
  // Peel leaves to find the center(s).
  int d[32], layer[32], next_layer[32], ln = 0, remaining = n;
  for (int v = 0; v < n; ++v) {
    d[v] = deg[v];
    if (d[v] <= 1)
      layer[ln++] = v;
  }
  while (remaining > 2) {
    remaining -= ln;
    int nn = 0;
    for (int i = 0; i < ln; ++i)
      for (int j = 0; j < deg[layer[i]]; ++j)
        if (--d[nb[layer[i]][j]] == 1)
          next_layer[nn++] = nb[layer[i]][j];
    std::copy(next_layer, next_layer + nn, layer);
    ln = nn;
  }
  auto code_at = [&](int root, int blocked) {
    // BFS appends each vertex's children contiguously: [first, last).
    int order[32], parent[32], first[32], last[32], cnt = 0;
    order[cnt++] = root;
    parent[root] = blocked;
    for (int h = 0; h < cnt; ++h) {
      int v = order[h];
      first[h] = cnt;
      for (int j = 0; j < deg[v]; ++j) {
        int w = nb[v][j];
        if (w != parent[v]) {
          parent[w] = v;
          order[cnt++] = w;
        }
      }
      last[h] = cnt;
    }
    std::uint64_t bits[32];
    int len[32];
    for (int h = cnt - 1; h >= 0; --h) {
      BitCode kids[32];
      int nk = 0;
      for (int c = first[h]; c < last[h]; ++c)
        kids[nk++] = BitCode{bits[c], len[c]};
      std::sort(kids, kids + nk);
      std::uint64_t b = std::uint64_t{1} << 63;
      int l = 1;
      for (int i = 0; i < nk; ++i) {
        b |= kids[i].bits >> l;
        l += kids[i].len;
      }
      bits[h] = b;
      len[h] = l + 1;  // closing zero
    }
    return BitCode{bits[0], len[0]};
  };
  if (ln == 1)
    return {code_at(layer[0], -1), BitCode{}};
  BitCode a = code_at(layer[0], layer[1]), b = code_at(layer[1], layer[0]);
  if (b < a)
    std::swap(a, b);
  return {a, b};
}

// Decodes a Pruefer sequence with the quadratic textbook rule.
inline std::vector<Edge> pruefer_edges(const std::vector<int> &seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int x : seq)
    ++deg[x];
  std::vector<Edge> edges;
  for (int x : seq) {
    int leaf = 0;
    while (deg[leaf] != 1)
      ++leaf;
    edges.push_back({leaf, x});
    --deg[leaf];
    --deg[x];
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1)
      rest.push_back(v);
  edges.push_back({rest[0], rest[1]});
  return edges;
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t> &p) const {
    return std::hash<std::uint64_t>()(p.first * 0x9E3779B97F4A7C15ull ^ p.second);
  }
};

// Number of isomorphism classes among labeled trees, by Pruefer
// exhaustion. With leaves_fixed the entries avoid labels n-2 and n-1, so
// only trees where both are leaves are decoded; every tree on n >= 3
// vertices has two leaves, so every class still appears.
inline std::size_t pruefer_class_count(int n, bool leaves_fixed = false) {
  if (n <= 2)
    return 1;
  const int alphabet = leaves_fixed ? n - 2 : n;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> keys;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  std::vector<Edge> edges(static_cast<std::size_t>(n - 1));
  int deg[32];
  while (true) {
    // Quadratic textbook decoding.
    std::fill(deg, deg + n, 1);
    for (int x : seq)
      ++deg[x];
    std::size_t e = 0;
    for (int x : seq) {
      int leaf = 0;
      while (deg[leaf] != 1)
        ++leaf;
      edges[e++] = {leaf, x};
      --deg[leaf];
      --deg[x];
    }
    int a = 0;
    while (deg[a] != 1)
      ++a;
    int b = a + 1;
    while (deg[b] != 1)
      ++b;
    edges[e] = {a, b};
    auto [c1, c2] = fast_tree_key(n, edges);
    // Lengths are implied: a unicentral code has c2.len == 0.
    keys.insert({c1.bits | static_cast<std::uint64_t>(c2.len == 0), c2.bits});
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == alphabet)
      seq[i++] = 0;
    if (i == seq.size())
      break;
  }
  return keys.size();
}

} // namespace oracle
