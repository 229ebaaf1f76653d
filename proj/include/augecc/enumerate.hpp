#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "augecc/graph.hpp"

namespace augecc {

// Isomorphism-invariant code of a free tree: the canonical level sequence
// of the tree rooted at its center. A bicentral tree is split at the
// central edge; the two halves are coded separately (each starting at
// depth 0) and concatenated larger half first, so the code has exactly
// one zero iff the tree is unicentral. Length is always n.
struct CanonicalCode {
  std::vector<int> levels;

  std::string str() const;
  friend bool operator==(const CanonicalCode &, const CanonicalCode &) = default;
  friend auto operator<=>(const CanonicalCode &, const CanonicalCode &) = default;
};

CanonicalCode canonical_code(const Graph &t);

// Rooted tree from a level sequence (preorder depths, first entry 0).
// Vertex i of the result is position i of the sequence.
Graph tree_from_levels(std::span<const int> levels);

constexpr int kMaxFreeTreeOrder = 22;

// Isomorphism-free generator of all free trees on n vertices, one
// representative per class in a fixed order. Each tree is produced as a
// canonical (centroid-rooted) level sequence by a constant amortized time
// successor rule.
class FreeTreeStream {
public:
  explicit FreeTreeStream(int n);

  // Advances to the next tree; false once exhausted.
  bool next();
  std::span<const int> levels() const { return current_; }
  Graph graph() const { return tree_from_levels(current_); }
  int order() const { return n_; }

private:
  bool advance_rooted(std::size_t p);
  void validate_or_jump();

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

// Visits every free tree on n vertices. With parts > 1 only the trees whose
// position in the stream is congruent to part modulo parts are visited, so
// disjoint workers can cover the stream together.
void for_each_free_tree(int n, const std::function<void(const Graph &)> &fn,
                        int part = 0, int parts = 1);

std::vector<Graph> free_trees(int n);

// Free trees with a perfect matching; n must be even.
void for_each_pm_tree(int n, const std::function<void(const Graph &)> &fn,
                      int part = 0, int parts = 1);
std::vector<Graph> pm_trees(int n);

// Uniform labeled tree from a random Pruefer sequence; deterministic in seed.
Graph random_tree(int n, std::uint64_t seed);

// Decodes a Pruefer sequence of length n-2 over 0..n-1.
Graph tree_from_pruefer(std::span<const int> seq);

constexpr int kMaxLabeledGraphOrder = 7;

// Every connected labeled graph on n vertices (2 <= n <= 7), one per edge
// subset, in increasing subset-mask order. With parts > 1 the masks are
// split round-robin.
void for_each_connected_labeled_graph(int n,
                                      const std::function<void(const Graph &)> &fn,
                                      int part = 0, int parts = 1);
std::uint64_t count_connected_labeled_graphs(int n);

} // namespace augecc
