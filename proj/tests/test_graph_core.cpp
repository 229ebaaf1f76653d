#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "augecc/enumerate.hpp"
#include "augecc/families.hpp"
#include "augecc/graph.hpp"
#include "oracles.hpp"

using namespace augecc;

namespace {

Graph path(int n) { return make_family(FamilyKind::path(), n); }
Graph star(int n) { return make_family(FamilyKind::star(), n); }
Graph complete(int n) { return make_family(FamilyKind::complete(), n); }

// Random connected graph: random labeled tree plus extra random edges.
Graph random_connected(int n, int extra, std::mt19937_64 &rng) {
  Graph t = random_tree(n, rng());
  auto edges = t.edges();
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    int u = pick(rng), v = pick(rng);
    if (u == v)
      continue;
    Edge e{std::min(u, v), std::max(u, v)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end())
      edges.push_back(e);
  }
  return build_graph(n, edges);
}

} // namespace

TEST_CASE("build_graph") {
  Graph k2 = build_graph(2, {{0, 1}});
  CHECK(k2.degrees() == std::vector<int>{1, 1});
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.size() == 3);
  CHECK(is_path(p4));
  CHECK(p4.has_edge(2, 1));
  CHECK_FALSE(p4.has_edge(0, 3));

  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(build_graph(0, {}), GraphError);
}

TEST_CASE("adjacency is symmetric and sorted") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = random_connected(9, 8, rng);
    for (Vertex u = 0; u < g.order(); ++u) {
      auto nb = g.neighbors(u);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex v : nb)
        CHECK(g.has_edge(v, u));
    }
  }
}

TEST_CASE("eccentricities") {
  auto p3 = eccentricities(path(3));
  CHECK(p3.ecc == std::vector<int>{2, 1, 2});
  CHECK(p3.diameter == 2);
  CHECK(p3.center == std::vector<Vertex>{1});

  auto k4 = eccentricities(complete(4));
  CHECK(k4.ecc == std::vector<int>{1, 1, 1, 1});
  CHECK(k4.diameter == 1);

  auto p6 = eccentricities(path(6));
  CHECK(p6.ecc == std::vector<int>{5, 4, 3, 3, 4, 5});
  CHECK(p6.diameter == 5);
  CHECK(p6.center == std::vector<Vertex>{2, 3});

  CHECK_THROWS_AS(eccentricities(build_graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("eccentricity properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + static_cast<int>(rng() % 12);
    Graph g = random_connected(n, static_cast<int>(rng() % 10), rng);
    auto prof = eccentricities(g);
    auto d = oracle::floyd(n, g.edges());
    for (Vertex u = 0; u < n; ++u) {
      CHECK(prof.ecc[u] == *std::max_element(d[u].begin(), d[u].end()));
      for (Vertex v : g.neighbors(u))
        CHECK(std::abs(prof.ecc[u] - prof.ecc[v]) <= 1);
    }
    int radius = *std::min_element(prof.ecc.begin(), prof.ecc.end());
    CHECK(2 * radius >= prof.diameter);
    if (is_tree(g))
      CHECK(prof.center.size() == (prof.diameter % 2 == 0 ? 1u : 2u));
  }
}

TEST_CASE("neighbor degree product") {
  Graph k3 = complete(3);
  for (Vertex u = 0; u < 3; ++u)
    CHECK(neighbor_degree_product(k3, u) == 4);
  Graph s4 = star(4);
  CHECK(neighbor_degree_product(s4, 0) == 1);
  CHECK(neighbor_degree_product(s4, 1) == 3);
  CHECK(neighbor_degree_product(path(6), 2) == 4);
  CHECK_THROWS_AS(neighbor_degree_product(s4, 4), GraphError);
  // Pure function: rebuilding the same graph gives the same products.
  Graph again = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  for (Vertex u = 0; u < 4; ++u)
    CHECK(neighbor_degree_product(again, u) == neighbor_degree_product(s4, u));
}

TEST_CASE("index_value examples") {
  CHECK(index_value(star(16), IndexKind::Augmented) == Rational(227, 2));
  CHECK(index_value(complete(3), IndexKind::Augmented) == Rational(12));
  CHECK(index_value(path(6), IndexKind::Augmented) == Rational(67, 15));
  CHECK(index_value(complete(5), IndexKind::SuperAugmented) == Rational(1280));
  CHECK(index_value(star(4), IndexKind::SuperAugmented) == Rational(13, 4));

  CHECK_THROWS_AS(index_value(build_graph(1, {}), IndexKind::Augmented), GraphError);
  CHECK_THROWS_AS(index_value(build_graph(4, {{0, 1}, {2, 3}}), IndexKind::Augmented),
                  GraphError);
}

TEST_CASE("index_value equals the term-by-term oracle") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 300; ++rep) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_connected(n, static_cast<int>(rng() % 12), rng);
    CHECK(index_value(g, IndexKind::Augmented) == oracle::index(g, 1));
    CHECK(index_value(g, IndexKind::SuperAugmented) == oracle::index(g, 2));
  }
}

TEST_CASE("index_value is invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + static_cast<int>(rng() % 14);
    Graph g = random_connected(n, static_cast<int>(rng() % 8), rng);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    CHECK(index_value(g, IndexKind::Augmented) == index_value(h, IndexKind::Augmented));
    CHECK(index_value(g, IndexKind::SuperAugmented) ==
          index_value(h, IndexKind::SuperAugmented));
  }
}

TEST_CASE("augmented denominator divides lcm(1..D)") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + static_cast<int>(rng() % 16);
    Graph g = random_connected(n, static_cast<int>(rng() % 4), rng);
    int diam = eccentricities(g).diameter;
    BigInt l = 1;
    for (int i = 1; i <= diam; ++i) {
      BigInt bi = i;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), bi.get_mpz_t());
    }
    CHECK(mpz_divisible_p(l.get_mpz_t(), index_value(g, IndexKind::Augmented)
                                             .denominator()
                                             .get_mpz_t()) != 0);
  }
}

TEST_CASE("both kinds coincide on complete graphs") {
  for (int n = 2; n <= 12; ++n)
    CHECK(index_value(complete(n), IndexKind::Augmented) ==
          index_value(complete(n), IndexKind::SuperAugmented));
}

TEST_CASE("diametric path with the farthest first branch") {
  CHECK(diametric_path_farthest_branch(star(4)) == std::vector<Vertex>{1, 0, 2});

  // Spider: hub 0 with legs 0-1-2-3, 0-4, 0-5.
  Graph spider = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}});
  auto p = diametric_path_farthest_branch(spider);
  CHECK(p == std::vector<Vertex>{3, 2, 1, 0, 4});
  CHECK(*first_branching_index(spider, p) == 3);

  auto p7 = diametric_path_farthest_branch(path(7));
  CHECK(p7 == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
  CHECK_FALSE(first_branching_index(path(7), p7));

  CHECK_THROWS_AS(diametric_path_farthest_branch(complete(3)), GraphError);
}

TEST_CASE("diametric path agrees with brute force over all diametric pairs") {
  for (int n = 2; n <= 10; ++n)
    for (const Graph &t : free_trees(n))
      CHECK(diametric_path_farthest_branch(t) == oracle::farthest_branch_path(t));
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 300; ++rep) {
    Graph t = random_tree(3 + static_cast<int>(rng() % 12), rng());
    CHECK(diametric_path_farthest_branch(t) == oracle::farthest_branch_path(t));
  }
}

TEST_CASE("tree perfect matching") {
  auto m = tree_perfect_matching(path(6));
  REQUIRE(m);
  CHECK(m->edges == std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});
  CHECK_FALSE(tree_perfect_matching(star(4)));
  CHECK_FALSE(tree_perfect_matching(path(5)));

  Graph tb63 = make_family(FamilyKind::degree_balanced(3), 6);
  auto mt = tree_perfect_matching(tb63);
  REQUIRE(mt);
  CHECK(mt->edges.size() == 3);
  auto brute = oracle::perfect_matchings(6, tb63.edges());
  REQUIRE(brute.size() == 1);
  CHECK(mt->edges == brute[0]);

  CHECK_THROWS_AS(tree_perfect_matching(complete(4)), GraphError);
}

TEST_CASE("tree perfect matching agrees with brute force for n <= 12") {
  for (int n = 1; n <= 12; ++n)
    for (const Graph &t : free_trees(n)) {
      auto brute = oracle::perfect_matchings(n, t.edges());
      CHECK(brute.size() <= 1);
      auto m = tree_perfect_matching(t);
      CHECK(m.has_value() == !brute.empty());
      if (m && !brute.empty())
        CHECK(m->edges == brute[0]);
    }
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 300; ++rep) {
    Graph t = random_tree(2 * (1 + static_cast<int>(rng() % 6)), rng());
    auto brute = oracle::perfect_matchings(t.order(), t.edges());
    CHECK(tree_perfect_matching(t).has_value() == !brute.empty());
  }
}
