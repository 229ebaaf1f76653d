#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "augecc/enumerate.hpp"
#include "augecc/graph.hpp"
#include "augecc/rational.hpp"

namespace augecc {

enum class GraphClass { AllTrees, PmTrees, ConnectedGraphs };

std::string to_string(GraphClass c);

// An extremal graph up to isomorphism. Trees are keyed by canonical code,
// other graphs by the lexicographically smallest graph6 over all labelings.
struct Attainer {
  std::string key;
  Graph graph;
};

std::string isomorphism_key(const Graph &g);

struct ExtremalReport {
  int n = 0;
  GraphClass graph_class = GraphClass::AllTrees;
  IndexKind kind = IndexKind::Augmented;
  Rational min_value, max_value;
  std::vector<Attainer> min_attainers, max_attainers;
  std::uint64_t scanned = 0;
};

// Exact min/max of the index over the whole class on n vertices. Work is
// split round-robin over `threads` workers and merged exactly.
ExtremalReport scan(GraphClass graph_class, int n, IndexKind kind, int threads = 1);

enum class Claim { CorPath, TmMaxTrees, CorMaxMatch, PropMaxGraphs, PropMinGraphs, CrossoverLemma };

std::string to_string(Claim c);

struct ClaimVerdict {
  Claim claim = Claim::CorPath;
  GraphClass graph_class = GraphClass::AllTrees;
  int n = 0;
  bool pass = false;
  std::string expected;   // family name predicted to be the unique extremum
  Rational expected_value;
  Rational observed_value;
  std::optional<Graph> witness;  // counterexample on failure
  std::string detail;
};

struct VerifyOptions {
  int n_min = 4;
  int n_max = 16;                 // trees and PM trees
  int graph_n_max = 6;            // connected labeled graphs, at most 7
  std::vector<GraphClass> classes{GraphClass::AllTrees, GraphClass::PmTrees,
                                  GraphClass::ConnectedGraphs};
  bool crossover = true;
  int threads = 1;
};

// Checks the extremal statements for every n in range:
//   AllTrees        unique min P_n (CorPath); unique max S_n for n <= 15,
//                   TB_{n,ceil((n-1)/3)} for n >= 16 (TmMaxTrees);
//   PmTrees         unique min P_n (CorPath), unique max TB_{n,n/2} (CorMaxMatch);
//   ConnectedGraphs unique max K_n, unique min P_n (PropMaxGraphs/PropMinGraphs);
//   crossover       TB_{n,ceil((n-1)/3)} beats S_n iff n >= 16 (n >= 8).
// A co-attainer is reported as a failed uniqueness with the co-attainer as
// witness.
std::vector<ClaimVerdict> verify_claims(const VerifyOptions &options);

struct CrossoverRow {
  int n = 0;
  Rational star, balanced;  // closed forms (corrected constant)
  int sign = 0;             // +1 when the balanced tree is larger, -1 for the star
  bool direct_agrees = false;
};

// Rows for n_min..n_max (n_min >= 8), each cross-checked by direct evaluation.
std::vector<CrossoverRow> crossover_table(int n_min, int n_max);

struct P2Row {
  int t = 0;
  Rational formula, direct;
};

// f(t) = 2^(t-1) + (n-t-1)^2/3 + t/2 next to the directly evaluated
// TB_{n,n-t-1}, for 2 <= t <= floor((n-1)/2). Requires n >= 7.
std::vector<P2Row> p2_profile(int n);

// Row of p2_profile with the largest formula value (first on ties).
std::size_t p2_argmax(const std::vector<P2Row> &rows);

// Whether the super-augmented index shows the same extremal pattern: unique
// tree minimum P_n, unique tree maximum S_n or TB_{n,ceil((n-1)/3)}, and for
// even n >= 6 unique PM-tree maximum TB_{n,n/2}. Informational only.
struct SuperAugmentedRow {
  int n = 0;
  bool min_is_path = false;
  std::string tree_max;  // family name or "other"
  bool tree_max_unique = false;
  std::optional<bool> pm_max_is_tb;  // even n >= 6 only
  bool analogous = false;
  Rational tree_min_value, tree_max_value;
};

std::vector<SuperAugmentedRow> super_augmented_exploration(int n_min, int n_max,
                                                           int threads = 1);

// CSV renderings with stable columns.
std::string verdicts_csv(const std::vector<ClaimVerdict> &verdicts);
std::string crossover_csv(const std::vector<CrossoverRow> &rows);
std::string p2_csv(int n, const std::vector<P2Row> &rows);
std::string report_csv(const std::vector<ExtremalReport> &reports);
std::string super_augmented_csv(const std::vector<SuperAugmentedRow> &rows);

} // namespace augecc
