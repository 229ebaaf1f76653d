#include "augecc/families.hpp"

#include <vector>

namespace augecc {

std::string to_string(const FamilyKind &kind, int n) {
  switch (kind.tag) {
  case FamilyKind::Tag::Path: return "P_" + std::to_string(n);
  case FamilyKind::Tag::Star: return "S_" + std::to_string(n);
  case FamilyKind::Tag::Complete: return "K_" + std::to_string(n);
  case FamilyKind::Tag::DegreeBalanced:
    return "TB_{" + std::to_string(n) + "," + std::to_string(kind.central_degree) + "}";
  }
  return "?";
}

Graph make_family(const FamilyKind &kind, int n) {
  std::vector<Edge> edges;
  switch (kind.tag) {
  case FamilyKind::Tag::Path:
    if (n < 2)
      throw PreconditionError("path needs n >= 2");
    for (Vertex v = 0; v + 1 < n; ++v)
      edges.emplace_back(v, v + 1);
    break;
  case FamilyKind::Tag::Star:
    if (n < 3)
      throw PreconditionError("star needs n >= 3");
    for (Vertex v = 1; v < n; ++v)
      edges.emplace_back(0, v);
    break;
  case FamilyKind::Tag::Complete:
    if (n < 2)
      throw PreconditionError("complete graph needs n >= 2");
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        edges.emplace_back(u, v);
    break;
  case FamilyKind::Tag::DegreeBalanced: {
    const int k = kind.central_degree;
    if (k < 3 || k > n - 1)
      throw PreconditionError("TB_{n,k} needs 3 <= k <= n-1, got n=" +
                              std::to_string(n) + " k=" + std::to_string(k));
    const int pendants = n - 1 - k;
    if (pendants < 2)
      throw PreconditionError("TB_{" + std::to_string(n) + "," + std::to_string(k) +
                              "} would have diameter < 4 (needs n-1-k >= 2)");
    for (Vertex v = 1; v <= k; ++v)
      edges.emplace_back(0, v);
    const int base = pendants / k, extra = pendants % k;
    Vertex next = k + 1;
    for (Vertex v = 1; v <= k; ++v) {
      int count = base + (v <= extra ? 1 : 0);
      for (int j = 0; j < count; ++j)
        edges.emplace_back(v, next++);
    }
    break;
  }
  }
  return build_graph(n, edges);
}

std::string to_string(BalanceClass c) {
  switch (c) {
  case BalanceClass::Balanced: return "balanced";
  case BalanceClass::AlmostPerfect: return "almost-perfect";
  case BalanceClass::Perfect: return "perfect";
  }
  return "?";
}

BalanceClass balance_class(int n, int k) {
  if (k < 3 || k > n - 1 || n - 1 - k < 2)
    throw PreconditionError("TB_{" + std::to_string(n) + "," + std::to_string(k) +
                            "} is not constructible");
  const int p = ceil_div(n - 1, k);
  if (p * k == n - 1)
    return BalanceClass::Perfect;
  if (k == ceil_div(n - 1, p))
    return BalanceClass::AlmostPerfect;
  return BalanceClass::Balanced;
}

HarmonicCache::HarmonicCache() : values_{Rational(0)} {}

Rational HarmonicCache::operator()(int i) {
  if (i < 1)
    throw PreconditionError("harmonic number needs i >= 1");
  std::lock_guard lock(mu_);
  while (static_cast<int>(values_.size()) <= i) {
    auto next = static_cast<std::int64_t>(values_.size());
    values_.push_back(values_.back() + Rational(1, next));
  }
  return values_[static_cast<std::size_t>(i)];
}

Rational harmonic(int i, HarmonicCache &cache) { return cache(i); }

Rational harmonic(int i) {
  static HarmonicCache cache;
  return cache(i);
}

bool has_closed_form(const FamilyKind &kind, int n) {
  switch (kind.tag) {
  case FamilyKind::Tag::Path: return n >= 5;
  case FamilyKind::Tag::Star: return n >= 4;
  case FamilyKind::Tag::Complete: return n >= 2;
  case FamilyKind::Tag::DegreeBalanced:
    if (n >= 8 && kind.central_degree == tb_third_degree(n))
      return true;
    return n >= 6 && n % 2 == 0 && kind.central_degree == n / 2;
  }
  return false;
}

namespace {

Rational int_pow(std::int64_t base, int exp) {
  return Rational(pow(BigInt(static_cast<long>(base)), static_cast<unsigned long>(exp)));
}

Rational path_form(int n) {
  const Rational nm1(n - 1), nm2(n - 2);
  if (n % 2 == 0)
    return 8 * (harmonic(n - 1) - harmonic((n - 2) / 2)) -
           (Rational(4) / nm1 + Rational(4) / nm2);
  return 8 * (harmonic(n - 1) - harmonic((n - 3) / 2)) -
         (Rational(12) / nm1 + Rational(4) / nm2);
}

Rational tb_third_form(int n, ClosedFormVariant variant) {
  const int k = tb_third_degree(n);
  const Rational common = Rational(std::int64_t{k} * k, 3) + Rational(3 * std::int64_t{k}, 2);
  switch (n % 3) {
  case 1:  // n = 3k+1
    return int_pow(3, k) / 2 + common;
  case 0:  // n = 3k
    return int_pow(3, k - 1) + common - 1;
  default:  // n = 3k-1
    return 2 * int_pow(3, k - 2) + common -
           (variant == ClosedFormVariant::Corrected ? Rational(2) : Rational(1, 2));
  }
}

} // namespace

Rational closed_form_value(const FamilyKind &kind, int n, ClosedFormVariant variant) {
  if (!has_closed_form(kind, n))
    throw PreconditionError("no closed form for " + to_string(kind, n) +
                            " (outside the formula's validity range)");
  switch (kind.tag) {
  case FamilyKind::Tag::Path: return path_form(n);
  case FamilyKind::Tag::Star:
    return 1 + Rational(std::int64_t{n - 1} * (n - 1), 2);
  case FamilyKind::Tag::Complete: return n * int_pow(n - 1, n - 1);
  case FamilyKind::Tag::DegreeBalanced:
    if (n >= 8 && kind.central_degree == tb_third_degree(n))
      return tb_third_form(n, variant);
    return int_pow(2, n / 2 - 2) +
           Rational(std::int64_t{n} * n + 3 * std::int64_t{n} - 6, 12);
  }
  return {};
}

} // namespace augecc
