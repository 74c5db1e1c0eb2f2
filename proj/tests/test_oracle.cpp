#include <doctest.h>

#include <random>

#include "hamspec/errors.hpp"
#include "hamspec/families.hpp"
#include "hamspec/oracle.hpp"
#include "support.hpp"

using namespace hamspec;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph family(Family f, int n, int k) { return construct(FamilySpec{f, n, k, std::nullopt}); }

}  // namespace

TEST_CASE("Hamilton cycle examples") {
  const auto c6 = is_hamiltonian(cycle_graph(6));
  REQUIRE(c6.found());
  CHECK(is_hamilton_cycle(cycle_graph(6), c6.witness));

  CHECK(is_hamiltonian(family(Family::N, 7, 2)).status == OracleStatus::not_found);
  CHECK(is_hamiltonian(petersen()).status == OracleStatus::not_found);
  CHECK_FALSE(is_hamiltonian(complete_graph(2)).found());
  CHECK_FALSE(is_hamiltonian(Graph(0)).found());
  CHECK(is_hamiltonian(complete_graph(3)).found());
  CHECK_THROWS_AS(is_hamiltonian(Graph(65)), DomainError);
}

TEST_CASE("Hamilton path examples") {
  const auto p5 = is_traceable(path_graph(5));
  REQUIRE(p5.found());
  CHECK(is_hamilton_path(path_graph(5), p5.witness));
  CHECK_FALSE(is_traceable(family(Family::barL, 6, 0)).found());
  CHECK_FALSE(is_traceable(family(Family::barN, 8, 1)).found());

  const auto single = is_traceable(Graph(1));
  CHECK(single.found());
  CHECK(single.witness == std::vector<int>{0});
  CHECK(is_traceable(complete_graph(2)).found());
  CHECK_FALSE(is_traceable(Graph(2)).found());
  CHECK_THROWS_AS(is_traceable(Graph(0)), DomainError);
}

TEST_CASE("witness validators reject bad orders") {
  const Graph c5 = cycle_graph(5);
  const std::vector<int> good{0, 1, 2, 3, 4};
  const std::vector<int> repeat{0, 1, 2, 3, 3};
  const std::vector<int> jump{0, 2, 1, 3, 4};
  CHECK(is_hamilton_cycle(c5, good));
  CHECK_FALSE(is_hamilton_cycle(c5, repeat));
  CHECK_FALSE(is_hamilton_cycle(c5, jump));
  CHECK(is_hamilton_path(path_graph(5), good));
  CHECK_FALSE(is_hamilton_cycle(path_graph(5), good));
}

TEST_CASE("oracle agrees with permutation brute force on every graph with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << testsupport::pair_count(n)); ++code) {
      const Graph g = testsupport::graph_from_code(n, code);
      const auto h = is_hamiltonian(g);
      REQUIRE(h.decided());
      CHECK(h.found() == testsupport::brute_hamiltonian(g));
      if (h.found()) CHECK(is_hamilton_cycle(g, h.witness));
      const auto t = is_traceable(g);
      CHECK(t.found() == testsupport::brute_traceable(g));
      if (t.found()) CHECK(is_hamilton_path(g, t.witness));
    }
  }
}

TEST_CASE("oracle agrees with brute force on random 7- and 8-vertex graphs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 2);
    const Graph g = testsupport::random_graph(n, std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng);
    CHECK(is_hamiltonian(g).found() == testsupport::brute_hamiltonian(g));
  }
}

TEST_CASE("subset DP fallback matches the backtracking answer") {
  OracleOptions tiny;
  tiny.node_budget = 1;
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph g = testsupport::random_graph(n, 0.45, rng);
    const auto full = is_hamiltonian(g);
    const auto dp = is_hamiltonian(g, tiny);
    CHECK(dp.decided());
    CHECK(dp.found() == full.found());
    if (dp.found()) CHECK(is_hamilton_cycle(g, dp.witness));
  }
  tiny.dp_fallback = false;
  CHECK(is_hamiltonian(petersen(), tiny).status == OracleStatus::budget_exceeded);
}

TEST_CASE("larger family instances stay within budget") {
  const auto n172 = is_hamiltonian(family(Family::N, 17, 2));
  CHECK(n172.status == OracleStatus::not_found);
  const auto l = is_hamiltonian(family(Family::L, 20, 4));
  CHECK(l.status == OracleStatus::not_found);
  const auto t = is_traceable(family(Family::barN, 16, 1));
  CHECK(t.status == OracleStatus::not_found);
}

TEST_CASE("scattering neighbourhoods settle large non-Hamiltonian graphs without search") {
  // Deleting X_H from B_n^k leaves its k private Y vertices isolated.
  for (int side = 11; side <= 14; ++side) {
    const auto b = construct_bipartite(FamilySpec{Family::B, side, 3, std::nullopt});
    const auto r = is_hamiltonian(b);
    CHECK(r.status == OracleStatus::not_found);
    CHECK(r.nodes == 0);
  }
  // Unbalanced complete bipartite graphs, through N(v) = the other side.
  CHECK(is_hamiltonian(complete_bipartite(15, 16)).status == OracleStatus::not_found);
  // Petersen is 1-tough, so it still needs the search.
  CHECK(is_hamiltonian(petersen()).nodes > 0);
}

TEST_CASE("adding an edge never destroys a Hamilton cycle") {
  std::mt19937_64 rng(21);
  for (int chain = 0; chain < 60; ++chain) {
    const int n = 4 + static_cast<int>(rng() % 7);
    Graph g = testsupport::random_graph(n, 0.25, rng);
    bool was = is_hamiltonian(g).found();
    for (int step = 0; step < 12; ++step) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (u == v) continue;
      g.add_edge(u, v);
      const bool now = is_hamiltonian(g).found();
      CHECK((!was || now));
      was = now;
    }
  }
}

TEST_CASE("Dirac and Moon-Moser consistency") {
  std::mt19937_64 rng(33);
  int dirac = 0;
  while (dirac < 200) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph g = testsupport::random_graph(n, 0.75, rng);
    if (2 * min_degree(g) < n) continue;
    CHECK(is_hamiltonian(g).found());
    ++dirac;
  }
  int mm = 0;
  while (mm < 200) {
    const int side = 2 + static_cast<int>(rng() % 6);
    const BipartiteGraph b = testsupport::random_bipartite(side, side, 0.8, rng);
    if (2 * b.min_degree() <= side) continue;
    CHECK(is_hamiltonian(b).found());
    ++mm;
  }
}

TEST_CASE("clique number") {
  CHECK(clique_number(complete_graph(5)) == 5);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(family(Family::N, 7, 2)) == 5);
  CHECK(clique_number(Graph(3)) == 1);
  CHECK_THROWS_AS(clique_number(Graph(0)), DomainError);

  // Cross-check against subset enumeration.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = testsupport::random_graph(n, 0.5, rng);
    int best = 0;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
      bool clique = true;
      for (int u = 0; u < n && clique; ++u) {
        for (int v = u + 1; v < n && clique; ++v) {
          if (((s >> u) & 1U) && ((s >> v) & 1U) && !g.has_edge(u, v)) clique = false;
        }
      }
      if (clique) best = std::max(best, std::popcount(s));
    }
    CHECK(clique_number(g) == best);
  }
}

TEST_CASE("biclique containment") {
  CHECK(contains_biclique(complete_bipartite(3, 3), 3, 3));
  const BipartiteGraph b42 = construct_bipartite(FamilySpec{Family::B, 4, 2, std::nullopt});
  CHECK(contains_biclique(b42, 4, 2));
  CHECK_FALSE(contains_biclique(b42, 3, 3));
  CHECK(contains_biclique(b42, 0, 4));
  CHECK_THROWS_AS(contains_biclique(b42, 5, 1), DomainError);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const BipartiteGraph b = testsupport::random_bipartite(5, 5, 0.6, rng);
    const int s = 1 + static_cast<int>(rng() % 5);
    const int t = 1 + static_cast<int>(rng() % 5);
    bool brute = false;
    for (std::uint32_t xs = 0; xs < 32 && !brute; ++xs) {
      if (std::popcount(xs) != s) continue;
      for (std::uint32_t ys = 0; ys < 32 && !brute; ++ys) {
        if (std::popcount(ys) != t) continue;
        bool all = true;
        for (int x = 0; x < 5 && all; ++x) {
          for (int y = 0; y < 5 && all; ++y) {
            if (((xs >> x) & 1U) && ((ys >> y) & 1U) && !b.has_edge(x, y)) all = false;
          }
        }
        brute = all;
      }
    }
    CHECK(contains_biclique(b, s, t) == brute);
  }
}
