#pragma once

#include <map>
#include <mutex>
#include <string>

#include "augecc/graph.hpp"
#include "augecc/rational.hpp"

namespace augecc {

struct FamilyKind {
  enum class Tag { Path, Star, Complete, DegreeBalanced };
  Tag tag = Tag::Path;
  int central_degree = 0;  // DegreeBalanced only

  static FamilyKind path() { return {Tag::Path, 0}; }
  static FamilyKind star() { return {Tag::Star, 0}; }
  static FamilyKind complete() { return {Tag::Complete, 0}; }
  static FamilyKind degree_balanced(int k) { return {Tag::DegreeBalanced, k}; }

  friend bool operator==(const FamilyKind &, const FamilyKind &) = default;
};

std::string to_string(const FamilyKind &kind, int n);

// Ceiling of a / b for positive operands.
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Central degree of the tree that competes with the star: ceil((n-1)/3).
constexpr int tb_third_degree(int n) { return ceil_div(n - 1, 3); }

// Vertex numbering: hub/center is 0, its neighbors follow, pendants last.
// Degree-balanced trees hang the surplus pendants on the lowest-numbered
// neighbors. Path vertices are numbered in path order.
Graph make_family(const FamilyKind &kind, int n);

enum class BalanceClass { Balanced, AlmostPerfect, Perfect };

std::string to_string(BalanceClass c);

// Most specific balance class of TB_{n,k}.
BalanceClass balance_class(int n, int k);

// Harmonic numbers H_i, extended on demand. Safe to share between threads.
class HarmonicCache {
public:
  HarmonicCache();
  Rational operator()(int i);

private:
  std::mutex mu_;
  std::vector<Rational> values_;  // values_[i] = H_i, values_[0] = 0
};

Rational harmonic(int i, HarmonicCache &cache);
Rational harmonic(int i);

// The n = 3k-1 branch of the ceil((n-1)/3) formula: the printed constant
// (-1/2) is contradicted by direct evaluation, the corrected one is -2.
enum class ClosedFormVariant { Corrected, AsPrinted };

// Closed forms for P_n (n >= 5), S_n (n >= 4), K_n (n >= 2),
// TB_{n,ceil((n-1)/3)} (n >= 8) and TB_{n,n/2} (even n >= 6).
// Throws PreconditionError outside these ranges.
Rational closed_form_value(const FamilyKind &kind, int n,
                           ClosedFormVariant variant = ClosedFormVariant::Corrected);

// True when (kind, n) lies in a closed form's validity range.
bool has_closed_form(const FamilyKind &kind, int n);

} // namespace augecc
