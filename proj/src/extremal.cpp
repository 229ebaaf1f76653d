#include "augecc/extremal.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "augecc/families.hpp"
#include "augecc/graph_io.hpp"

namespace augecc {

std::string to_string(GraphClass c) {
  switch (c) {
  case GraphClass::AllTrees: return "trees";
  case GraphClass::PmTrees: return "pm-trees";
  case GraphClass::ConnectedGraphs: return "graphs";
  }
  return "?";
}

std::string to_string(Claim c) {
  switch (c) {
  case Claim::CorPath: return "CorPath";
  case Claim::TmMaxTrees: return "TmMaxTrees";
  case Claim::CorMaxMatch: return "CorMaxMatch";
  case Claim::PropMaxGraphs: return "PropMaxGraphs";
  case Claim::PropMinGraphs: return "PropMinGraphs";
  case Claim::CrossoverLemma: return "CrossoverLemma";
  }
  return "?";
}

std::string isomorphism_key(const Graph &g) {
  if (is_tree(g))
    return "T:" + canonical_code(g).str();
  const int n = g.order();
  if (n > 8)
    throw PreconditionError("isomorphism key for non-trees supports n <= 8");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = g.edges();
  // Bits in graph6 order, first pair most significant.
  auto bit_index = [](Vertex i, Vertex j) {
    if (i > j)
      std::swap(i, j);
    return j * (j - 1) / 2 + i;
  };
  const int total = n * (n - 1) / 2;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<Vertex> best_perm = perm;
  do {
    std::uint64_t code = 0;
    for (auto [u, v] : edges)
      code |= std::uint64_t{1} << (total - 1 - bit_index(perm[u], perm[v]));
    if (code < best) {
      best = code;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return "G:" + write_graph6(relabel(g, best_perm));
}

namespace {

struct Accumulator {
  bool any = false;
  Rational lo, hi;
  std::vector<Graph> lo_graphs, hi_graphs;
  std::uint64_t count = 0;

  void add(const Graph &g, const Rational &v) {
    ++count;
    if (!any) {
      any = true;
      lo = hi = v;
      lo_graphs = {g};
      hi_graphs = {g};
      return;
    }
    if (v < lo) {
      lo = v;
      lo_graphs = {g};
    } else if (v == lo) {
      lo_graphs.push_back(g);
    }
    if (v > hi) {
      hi = v;
      hi_graphs = {g};
    } else if (v == hi) {
      hi_graphs.push_back(g);
    }
  }

  void merge(Accumulator &&o) {
    if (!o.any)
      return;
    count += o.count;
    if (!any) {
      *this = std::move(o);
      return;
    }
    if (o.lo < lo) {
      lo = o.lo;
      lo_graphs = std::move(o.lo_graphs);
    } else if (o.lo == lo) {
      lo_graphs.insert(lo_graphs.end(), o.lo_graphs.begin(), o.lo_graphs.end());
    }
    if (o.hi > hi) {
      hi = o.hi;
      hi_graphs = std::move(o.hi_graphs);
    } else if (o.hi == hi) {
      hi_graphs.insert(hi_graphs.end(), o.hi_graphs.begin(), o.hi_graphs.end());
    }
  }
};

std::vector<Attainer> dedupe(const std::vector<Graph> &graphs) {
  std::vector<Attainer> out;
  std::set<std::string> seen;
  for (const auto &g : graphs) {
    auto key = isomorphism_key(g);
    if (seen.insert(key).second)
      out.push_back({key, g});
  }
  std::sort(out.begin(), out.end(),
            [](const Attainer &a, const Attainer &b) { return a.key < b.key; });
  return out;
}

// Runs fn(part, parts) on `threads` workers and rethrows the first failure.
void run_parallel(int threads, const std::function<void(int, int)> &fn) {
  threads = std::max(1, threads);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        fn(w, threads);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  try {
    fn(0, threads);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto &t : pool)
    t.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace

ExtremalReport scan(GraphClass graph_class, int n, IndexKind kind, int threads) {
  if (n < 2)
    throw PreconditionError("scan needs n >= 2");
  threads = std::max(1, threads);
  std::vector<Accumulator> acc(static_cast<std::size_t>(threads));
  auto visit = [&](int part) {
    return [&acc, part, kind](const Graph &g) {
      acc[static_cast<std::size_t>(part)].add(g, index_value(g, kind));
    };
  };
  switch (graph_class) {
  case GraphClass::AllTrees:
    FreeTreeStream{n};  // range check up front
    run_parallel(threads, [&](int part, int parts) {
      for_each_free_tree(n, visit(part), part, parts);
    });
    break;
  case GraphClass::PmTrees:
    if (n % 2 != 0)
      throw PreconditionError("pm-trees class needs even n, got " + std::to_string(n));
    FreeTreeStream{n};
    run_parallel(threads, [&](int part, int parts) {
      for_each_pm_tree(n, visit(part), part, parts);
    });
    break;
  case GraphClass::ConnectedGraphs:
    if (n > kMaxLabeledGraphOrder)
      throw PreconditionError("graphs class supports n <= " +
                              std::to_string(kMaxLabeledGraphOrder));
    run_parallel(threads, [&](int part, int parts) {
      for_each_connected_labeled_graph(n, visit(part), part, parts);
    });
    break;
  }
  Accumulator total;
  for (auto &a : acc)
    total.merge(std::move(a));
  if (!total.any)
    throw PreconditionError("class " + to_string(graph_class) + " is empty for n=" +
                            std::to_string(n));
  ExtremalReport r;
  r.n = n;
  r.graph_class = graph_class;
  r.kind = kind;
  r.min_value = total.lo;
  r.max_value = total.hi;
  r.min_attainers = dedupe(total.lo_graphs);
  r.max_attainers = dedupe(total.hi_graphs);
  r.scanned = total.count;
  return r;
}

namespace {

ClaimVerdict check_unique(Claim claim, const ExtremalReport &r, bool maximum,
                          const Graph &expected, const std::string &name) {
  ClaimVerdict v;
  v.claim = claim;
  v.graph_class = r.graph_class;
  v.n = r.n;
  v.expected = name;
  v.expected_value = index_value(expected, r.kind);
  v.observed_value = maximum ? r.max_value : r.min_value;
  const auto &att = maximum ? r.max_attainers : r.min_attainers;
  const std::string key = isomorphism_key(expected);
  auto other = std::find_if(att.begin(), att.end(),
                            [&](const Attainer &a) { return a.key != key; });
  bool found = std::any_of(att.begin(), att.end(),
                           [&](const Attainer &a) { return a.key == key; });
  v.pass = found && other == att.end();
  if (!v.pass) {
    v.witness = other->graph;
    v.detail = found ? "co-attainer breaks uniqueness"
                     : (maximum ? "maximum" : "minimum") +
                           std::string(" attained by a different graph");
  }
  return v;
}

} // namespace

std::vector<ClaimVerdict> verify_claims(const VerifyOptions &opt) {
  std::vector<ClaimVerdict> out;
  auto has = [&](GraphClass c) {
    return std::find(opt.classes.begin(), opt.classes.end(), c) != opt.classes.end();
  };
  const IndexKind kind = IndexKind::Augmented;
  if (has(GraphClass::AllTrees)) {
    for (int n = std::max(opt.n_min, 4); n <= opt.n_max; ++n) {
      auto r = scan(GraphClass::AllTrees, n, kind, opt.threads);
      out.push_back(check_unique(Claim::CorPath, r, false,
                                 make_family(FamilyKind::path(), n), "P_" + std::to_string(n)));
      FamilyKind top = n <= 15 ? FamilyKind::star()
                               : FamilyKind::degree_balanced(tb_third_degree(n));
      out.push_back(check_unique(Claim::TmMaxTrees, r, true, make_family(top, n),
                                 to_string(top, n)));
    }
  }
  if (has(GraphClass::PmTrees)) {
    for (int n = std::max(opt.n_min, 6); n <= opt.n_max; ++n) {
      if (n % 2 != 0)
        continue;
      auto r = scan(GraphClass::PmTrees, n, kind, opt.threads);
      out.push_back(check_unique(Claim::CorPath, r, false,
                                 make_family(FamilyKind::path(), n), "P_" + std::to_string(n)));
      auto tb = FamilyKind::degree_balanced(n / 2);
      out.push_back(check_unique(Claim::CorMaxMatch, r, true, make_family(tb, n),
                                 to_string(tb, n)));
    }
  }
  if (has(GraphClass::ConnectedGraphs)) {
    const int hi = std::min(opt.graph_n_max, kMaxLabeledGraphOrder);
    for (int n = std::max(opt.n_min, 3); n <= hi; ++n) {
      auto r = scan(GraphClass::ConnectedGraphs, n, kind, opt.threads);
      out.push_back(check_unique(Claim::PropMaxGraphs, r, true,
                                 make_family(FamilyKind::complete(), n),
                                 "K_" + std::to_string(n)));
      out.push_back(check_unique(Claim::PropMinGraphs, r, false,
                                 make_family(FamilyKind::path(), n), "P_" + std::to_string(n)));
    }
  }
  if (opt.crossover && opt.n_max >= 8) {
    for (const auto &row : crossover_table(std::max(opt.n_min, 8), opt.n_max)) {
      ClaimVerdict v;
      v.claim = Claim::CrossoverLemma;
      v.n = row.n;
      const bool tb_wins = row.n >= 16;
      v.expected = tb_wins ? to_string(FamilyKind::degree_balanced(tb_third_degree(row.n)), row.n)
                           : "S_" + std::to_string(row.n);
      v.expected_value = tb_wins ? row.balanced : row.star;
      v.observed_value = row.sign > 0 ? row.balanced : row.star;
      v.pass = row.direct_agrees && row.sign == (tb_wins ? 1 : -1);
      if (!v.pass) {
        v.detail = row.direct_agrees ? "wrong sign" : "closed form disagrees with direct value";
        v.witness = make_family(row.sign > 0 ? FamilyKind::degree_balanced(tb_third_degree(row.n))
                                             : FamilyKind::star(),
                                row.n);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<CrossoverRow> crossover_table(int n_min, int n_max) {
  if (n_min < 8)
    throw PreconditionError("crossover table needs n >= 8");
  std::vector<CrossoverRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    CrossoverRow row;
    row.n = n;
    auto tb = FamilyKind::degree_balanced(tb_third_degree(n));
    row.star = closed_form_value(FamilyKind::star(), n);
    row.balanced = closed_form_value(tb, n);
    row.sign = row.balanced > row.star ? 1 : (row.balanced < row.star ? -1 : 0);
    row.direct_agrees =
        row.star == index_value(make_family(FamilyKind::star(), n), IndexKind::Augmented) &&
        row.balanced == index_value(make_family(tb, n), IndexKind::Augmented);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<P2Row> p2_profile(int n) {
  if (n < 7)
    throw PreconditionError("p=2 profile needs n >= 7");
  std::vector<P2Row> rows;
  for (int t = 2; t <= (n - 1) / 2; ++t) {
    P2Row row;
    row.t = t;
    const std::int64_t k = n - t - 1;
    row.formula = Rational(pow(BigInt(2), static_cast<unsigned long>(t - 1))) +
                  Rational(k * k, 3) + Rational(t, 2);
    row.direct = index_value(make_family(FamilyKind::degree_balanced(static_cast<int>(k)), n),
                             IndexKind::Augmented);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t p2_argmax(const std::vector<P2Row> &rows) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].formula > rows[best].formula)
      best = i;
  return best;
}

std::vector<SuperAugmentedRow> super_augmented_exploration(int n_min, int n_max,
                                                           int threads) {
  std::vector<SuperAugmentedRow> rows;
  for (int n = std::max(n_min, 4); n <= n_max; ++n) {
    SuperAugmentedRow row;
    row.n = n;
    auto r = scan(GraphClass::AllTrees, n, IndexKind::SuperAugmented, threads);
    row.tree_min_value = r.min_value;
    row.tree_max_value = r.max_value;
    row.min_is_path = r.min_attainers.size() == 1 &&
                      r.min_attainers[0].key ==
                          isomorphism_key(make_family(FamilyKind::path(), n));
    row.tree_max_unique = r.max_attainers.size() == 1;
    row.tree_max = "other";
    const std::string max_key = r.max_attainers[0].key;
    if (max_key == isomorphism_key(make_family(FamilyKind::star(), n)))
      row.tree_max = "S_" + std::to_string(n);
    else if (n >= 8) {
      auto tb = FamilyKind::degree_balanced(tb_third_degree(n));
      if (max_key == isomorphism_key(make_family(tb, n)))
        row.tree_max = to_string(tb, n);
    }
    if (n >= 6 && n % 2 == 0) {
      auto pm = scan(GraphClass::PmTrees, n, IndexKind::SuperAugmented, threads);
      row.pm_max_is_tb = pm.max_attainers.size() == 1 &&
                         pm.max_attainers[0].key ==
                             isomorphism_key(make_family(FamilyKind::degree_balanced(n / 2), n));
    }
    row.analogous = row.min_is_path && row.tree_max_unique && row.tree_max != "other" &&
                    row.pm_max_is_tb.value_or(true);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string verdicts_csv(const std::vector<ClaimVerdict> &verdicts) {
  std::ostringstream os;
  os << "claim,class,n,verdict,expected,expected_value,observed_value,witness_graph6,detail\n";
  for (const auto &v : verdicts) {
    os << to_string(v.claim) << ','
       << (v.claim == Claim::CrossoverLemma ? "families" : to_string(v.graph_class)) << ','
       << v.n << ',' << (v.pass ? "PASS" : "FAIL") << ',' << v.expected << ','
       << v.expected_value << ',' << v.observed_value << ','
       << (v.witness ? write_graph6(*v.witness) : "") << ',' << v.detail << '\n';
  }
  return os.str();
}

std::string crossover_csv(const std::vector<CrossoverRow> &rows) {
  std::ostringstream os;
  os << "n,star,star_decimal,tb,tb_decimal,larger,direct_agrees\n";
  for (const auto &r : rows)
    os << r.n << ',' << r.star << ',' << r.star.decimal() << ',' << r.balanced << ','
       << r.balanced.decimal() << ',' << (r.sign > 0 ? "tb" : r.sign < 0 ? "star" : "equal")
       << ',' << (r.direct_agrees ? "yes" : "no") << '\n';
  return os.str();
}

std::string p2_csv(int n, const std::vector<P2Row> &rows) {
  std::ostringstream os;
  os << "n,t,k,f_t,f_t_decimal,direct,agrees\n";
  for (const auto &r : rows)
    os << n << ',' << r.t << ',' << n - r.t - 1 << ',' << r.formula << ','
       << r.formula.decimal() << ',' << r.direct << ',' << (r.formula == r.direct ? "yes" : "no")
       << '\n';
  return os.str();
}

std::string report_csv(const std::vector<ExtremalReport> &reports) {
  std::ostringstream os;
  os << "n,class,index,scanned,min,min_decimal,min_attainers,max,max_decimal,max_attainers\n";
  auto keys = [](const std::vector<Attainer> &att) {
    std::string s;
    for (const auto &a : att)
      s += (s.empty() ? "" : " ") + write_graph6(a.graph);
    return s;
  };
  for (const auto &r : reports)
    os << r.n << ',' << to_string(r.graph_class) << ',' << to_string(r.kind) << ','
       << r.scanned << ',' << r.min_value << ',' << r.min_value.decimal() << ','
       << keys(r.min_attainers) << ',' << r.max_value << ',' << r.max_value.decimal() << ','
       << keys(r.max_attainers) << '\n';
  return os.str();
}

std::string super_augmented_csv(const std::vector<SuperAugmentedRow> &rows) {
  std::ostringstream os;
  os << "n,min_is_path,tree_max,tree_max_unique,pm_max_is_tb,verdict,tree_min,tree_max_value\n";
  for (const auto &r : rows)
    os << r.n << ',' << (r.min_is_path ? "yes" : "no") << ',' << r.tree_max << ','
       << (r.tree_max_unique ? "yes" : "no") << ','
       << (r.pm_max_is_tb ? (*r.pm_max_is_tb ? "yes" : "no") : "n/a") << ','
       << (r.analogous ? "PASS" : "FAIL") << ',' << r.tree_min_value << ','
       << r.tree_max_value << '\n';
  return os.str();
}

} // namespace augecc
