#include <doctest.h>

#include <cmath>
#include <random>

#include "hamspec/errors.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/isomorphism.hpp"
#include "hamspec/oracle.hpp"
#include "hamspec/spectral.hpp"
#include "support.hpp"

using namespace hamspec;
using testsupport::binom;

namespace {

FamilySpec spec(Family f, int n, int k = 0) { return FamilySpec{f, n, k, std::nullopt}; }
Graph make(Family f, int n, int k = 0) { return construct(spec(f, n, k)); }

Graph h_member(int n, const Graph& inner) { return construct(FamilySpec{Family::H, n, 0, inner}); }

BipartiteGraph bset_member(int side, int k, std::uint64_t core_code) {
  Graph inner(side);
  int b = 0;
  for (int x = 0; x < k; ++x) {
    for (int y = k; y < side; ++y, ++b) {
      if ((core_code >> b) & 1U) inner.add_edge(x, y);
    }
  }
  return construct_bipartite(FamilySpec{Family::Bset, side, k, inner});
}

}  // namespace

TEST_CASE("FamilySpec text form") {
  const auto n72 = FamilySpec::parse("N:n=7,k=2");
  CHECK(n72.family == Family::N);
  CHECK(n72.n == 7);
  CHECK(n72.k == 2);
  CHECK(n72.to_string() == "N:n=7,k=2");
  CHECK(FamilySpec::parse(n72.to_string()) == n72);

  const auto g1 = FamilySpec::parse("Gamma1");
  CHECK(g1.family == Family::Gamma1);
  CHECK(FamilySpec::parse(g1.to_string()) == g1);

  const auto h = FamilySpec::parse("H:n=5,inner=A_");
  REQUIRE(h.inner.has_value());
  CHECK(h.inner->edge_count() == 1);
  CHECK(FamilySpec::parse(h.to_string()) == h);

  CHECK_THROWS_AS(FamilySpec::parse("Q:n=3"), DomainError);
  CHECK_THROWS_AS(FamilySpec::parse("N:n=x,k=2"), DomainError);
  CHECK_THROWS_AS(FamilySpec::parse("N:m=7"), DomainError);
  CHECK(family_from_string("barN") == Family::barN);
  CHECK_FALSE(family_from_string("nope").has_value());
}

TEST_CASE("construct examples") {
  const Graph n72 = make(Family::N, 7, 2);
  CHECK(n72.edge_count() == 14);
  CHECK(min_degree(n72) == 2);
  CHECK_FALSE(is_hamiltonian(n72).found());

  const BipartiteGraph b42 = construct_bipartite(spec(Family::B, 4, 2));
  CHECK(b42.nx() == 4);
  CHECK(b42.ny() == 4);
  CHECK(b42.edge_count() == 12);

  const BipartiteGraph g1 = construct_bipartite(spec(Family::Gamma1, 4));
  CHECK(g1.edge_count() == 9);
  const BipartiteGraph qc = quasi_complement(g1);
  CHECK(is_isomorphic(qc.to_graph(), disjoint_union(cycle_graph(6), complete_graph(2))));
  CHECK(std::abs(spectral_radius(qc.to_graph()).value - 2.0) < 1e-9);
  CHECK(std::abs(q_radius(qc.to_graph()).value - 4.0) < 1e-9);

  const BipartiteGraph g2 = construct_bipartite(spec(Family::Gamma2, 4));
  CHECK(g2.edge_count() == 10);
  CHECK(is_isomorphic(quasi_complement(g2).to_graph(), disjoint_union(cycle_graph(6), empty_graph(2))));
  CHECK_FALSE(is_hamiltonian(g1).found());
  CHECK_FALSE(is_hamiltonian(g2).found());
}

TEST_CASE("labelling is stable") {
  // Golden strings pin the documented vertex orders.
  CHECK(encode_graph6(make(Family::N, 5, 1)) == encode_graph6(join(complete_graph(1),
                                                                   disjoint_union(complete_graph(3), empty_graph(1)))));
  const Graph l = make(Family::L, 6, 2);
  CHECK(l.degree(0) == 5);
  CHECK(l.has_edge(1, 2));
  CHECK_FALSE(l.has_edge(2, 3));
  const Graph bn = make(Family::barN, 8, 1);
  CHECK(bn.degree(0) == 7);
  for (int v = 6; v < 8; ++v) CHECK(bn.degree(v) == 1);
}

TEST_CASE("parameter ranges") {
  CHECK_THROWS_AS(make(Family::L, 6, 3), DomainError);
  CHECK_THROWS_AS(make(Family::N, 5, 0), DomainError);
  CHECK_NOTHROW(make(Family::barL, 6, 2));
  CHECK_THROWS_AS(make(Family::barL, 6, 3), DomainError);
  CHECK_NOTHROW(make(Family::barN, 4, 0));
  CHECK_THROWS_AS(make(Family::barN, 4, -1), DomainError);
  CHECK_THROWS_AS(construct_bipartite(spec(Family::B, 4, 3)), DomainError);
  CHECK_THROWS_AS(construct(FamilySpec{Family::H, 6, 0, complete_graph(3)}), DomainError);
  CHECK_THROWS_AS(construct_bipartite(spec(Family::N, 7, 2)), DomainError);
}

TEST_CASE("edge counts match the sharpness formulas") {
  for (int n = 3; n <= 20; ++n) {
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      CHECK(make(Family::N, n, k).edge_count() == binom(n - k, 2) + k * k);
      CHECK(make(Family::L, n, k).edge_count() == binom(k + 1, 2) + binom(n - k, 2));
    }
    for (int k = 1; 2 * k <= n; ++k) {
      CHECK(construct_bipartite(spec(Family::B, n, k)).edge_count() == n * (n - k) + k * k);
    }
  }
}

TEST_CASE("family graphs are non-Hamiltonian or non-traceable") {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      CHECK_FALSE(is_hamiltonian(make(Family::L, n, k)).found());
      CHECK_FALSE(is_hamiltonian(make(Family::N, n, k)).found());
    }
    for (int k = 0; 2 * k + 2 <= n; ++k) {
      CHECK_FALSE(is_traceable(make(Family::barL, n, k)).found());
      CHECK_FALSE(is_traceable(make(Family::barN, n, k)).found());
    }
  }
  for (int side = 2; side <= 6; ++side) {
    for (int k = 1; 2 * k <= side; ++k) {
      CHECK_FALSE(is_hamiltonian(construct_bipartite(spec(Family::B, side, k))).found());
    }
  }
}

TEST_CASE("recognize examples") {
  CHECK(recognize(complete_bipartite(2, 3).to_graph(), spec(Family::H, 5)));
  CHECK_FALSE(recognize(cycle_graph(5), spec(Family::N, 5, 2)));
  Graph edge(4);
  edge.add_edge(0, 2);
  const BipartiteGraph member = construct_bipartite(FamilySpec{Family::Bset, 4, 2, edge});
  CHECK(recognize(member, spec(Family::Bset, 4, 2)));
  CHECK(recognize(member.to_graph(), spec(Family::Bset, 4, 2)));
  CHECK(recognize(make(Family::N, 7, 2), spec(Family::N, 7, 2)));
  CHECK_FALSE(recognize(make(Family::N, 7, 2), spec(Family::N, 8, 2)));
  CHECK_FALSE(recognize(make(Family::N, 7, 2), spec(Family::N, 7, 4)));
  CHECK(recognize(construct_bipartite(spec(Family::B, 5, 2)), spec(Family::B, 5, 2)));
  CHECK(recognize(construct_bipartite(spec(Family::B, 5, 2)), spec(Family::Bset, 5, 2)));
  CHECK_FALSE(recognize(construct_bipartite(spec(Family::Gamma1, 4)), spec(Family::Gamma2, 4)));
}

TEST_CASE("H recognizer agrees with brute force membership") {
  for (int n = 3; n <= 6; ++n) {
    const int s = (n + 1) / 2 - 1;
    std::vector<Graph> members;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << testsupport::pair_count(s)); ++c) {
      members.push_back(h_member(n, testsupport::graph_from_code(s, c)));
    }
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << testsupport::pair_count(n)); ++code) {
      const Graph g = testsupport::graph_from_code(n, code);
      bool brute = false;
      for (const auto& m : members) brute = brute || testsupport::brute_isomorphic(g, m);
      CHECK(recognize(g, spec(Family::H, n)) == brute);
    }
  }
}

TEST_CASE("Bset recognizer agrees with brute force membership on side 3") {
  for (int k = 1; 2 * k <= 3; ++k) {
    std::vector<BipartiteGraph> members;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (k * (3 - k))); ++c) members.push_back(bset_member(3, k, c));
    for (std::uint64_t code = 0; code < 512; ++code) {
      const BipartiteGraph b = testsupport::bipartite_from_code(3, code);
      bool brute = false;
      for (const auto& m : members) {
        brute = brute || (m.edge_count() == b.edge_count() && testsupport::brute_bipartite_spanning(b, m));
      }
      CHECK(recognize(b, spec(Family::Bset, 3, k)) == brute);
    }
  }
}

TEST_CASE("recognizers survive relabelling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>((n - 1) / 2));
    const auto p = testsupport::random_permutation(n, rng);
    CHECK(recognize(relabel(make(Family::N, n, k), p), spec(Family::N, n, k)));
    CHECK(recognize(relabel(make(Family::L, n, k), p), spec(Family::L, n, k)));
    const int s = (n + 1) / 2 - 1;
    const Graph inner = testsupport::random_graph(s, 0.5, rng);
    CHECK(recognize(relabel(h_member(n, inner), p), spec(Family::H, n)));

    const int side = 4 + static_cast<int>(rng() % 3);
    const int bk = 1 + static_cast<int>(rng() % static_cast<unsigned>(side / 2));
    const auto core = rng() & ((std::uint64_t{1} << (bk * (side - bk))) - 1);
    const Graph bg = bset_member(side, bk, core).to_graph();
    CHECK(recognize(relabel(bg, testsupport::random_permutation(2 * side, rng)), spec(Family::Bset, side, bk)));
  }
}

TEST_CASE("spanning_subgraph_of examples") {
  Graph n72 = make(Family::N, 7, 2);
  n72.remove_edge(0, 1);
  CHECK(spanning_subgraph_of(n72, Family::N, 7, 2));
  CHECK_FALSE(spanning_subgraph_of(cycle_graph(7), Family::L, 7, 2));
  CHECK_THROWS_AS(spanning_subgraph_of(cycle_graph(7), Family::L, 8, 2), DomainError);
  CHECK_THROWS_AS(spanning_subgraph_of(cycle_graph(7), Family::H, 7, 2), DomainError);
}

TEST_CASE("spanning_subgraph_of agrees with brute force on every 6-vertex graph") {
  struct Target {
    Family f;
    int k;
    Graph g;
  };
  std::vector<Target> targets;
  for (int k = 1; k <= 2; ++k) {
    targets.push_back({Family::L, k, make(Family::L, 6, k)});
    targets.push_back({Family::N, k, make(Family::N, 6, k)});
  }
  for (int k = 0; k <= 2; ++k) {
    targets.push_back({Family::barL, k, make(Family::barL, 6, k)});
    targets.push_back({Family::barN, k, make(Family::barN, 6, k)});
  }
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << 15); ++code) {
    const Graph g = testsupport::graph_from_code(6, code);
    for (const auto& t : targets) {
      CHECK(spanning_subgraph_of(g, t.f, 6, t.k) == testsupport::brute_spanning_subgraph(g, t.g));
    }
  }
}

TEST_CASE("B containment agrees with brute force") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    const BipartiteGraph b = testsupport::bipartite_from_code(3, code);
    const BipartiteGraph ref = construct_bipartite(spec(Family::B, 3, 1));
    CHECK(spanning_subgraph_of(b, Family::B, 3, 1) == testsupport::brute_bipartite_spanning(b, ref));
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1500; ++trial) {
    const BipartiteGraph b = testsupport::random_bipartite(4, 4, std::uniform_real_distribution<double>(0.3, 0.8)(rng), rng);
    for (int k = 1; k <= 2; ++k) {
      const BipartiteGraph ref = construct_bipartite(spec(Family::B, 4, k));
      const bool brute = testsupport::brute_bipartite_spanning(b, ref);
      CHECK(spanning_subgraph_of(b, Family::B, 4, k) == brute);
      if (testsupport::connected_bfs(b.to_graph())) CHECK(spanning_subgraph_of(b.to_graph(), Family::B, 4, k) == brute);
    }
  }
}

TEST_CASE("H members sit inside the extremal graphs and share complement spectra") {
  for (int n = 3; n <= 10; ++n) {
    const int s = (n + 1) / 2 - 1;
    double rho0 = -1.0;
    double q0 = -1.0;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << testsupport::pair_count(s)); ++c) {
      const Graph g = h_member(n, testsupport::graph_from_code(s, c));
      if (n % 2 == 1) {
        CHECK(spanning_subgraph_of(g, Family::N, n, (n - 1) / 2));
      } else {
        CHECK(spanning_subgraph_of(g, Family::barN, n, n / 2 - 1));
      }
      const Graph gc = complement(g);
      const double rho = spectral_radius(gc).value;
      const double q = q_radius(gc).value;
      if (rho0 < 0) {
        rho0 = rho;
        q0 = q;
      }
      CHECK(std::abs(rho - rho0) < 1e-9);
      CHECK(std::abs(q - q0) < 1e-9);
    }
  }
}

TEST_CASE("Bset members share quasi-complement spectra") {
  for (int side = 2; side <= 6; ++side) {
    for (int k = 1; 2 * k <= side; ++k) {
      const auto cores = std::uint64_t{1} << (k * (side - k));
      const double rho0 = spectral_radius(quasi_complement(bset_member(side, k, 0)).to_graph()).value;
      const double q0 = q_radius(quasi_complement(bset_member(side, k, 0)).to_graph()).value;
      CHECK(std::abs(rho0 - std::sqrt(static_cast<double>(k * (side - k)))) < 1e-9);
      CHECK(std::abs(q0 - side) < 1e-9);
      for (std::uint64_t c = 1; c < cores; ++c) {
        const Graph qc = quasi_complement(bset_member(side, k, c)).to_graph();
        CHECK(std::abs(spectral_radius(qc).value - rho0) < 1e-9);
        CHECK(std::abs(q_radius(qc).value - q0) < 1e-9);
      }
    }
  }
}

TEST_CASE("comparison relations between the families") {
  for (int n = 5; n <= 30; ++n) {
    for (int k = 2; 2 * k + 1 <= n; ++k) {
      const Graph nn = make(Family::N, n, k);
      const Graph ll = make(Family::L, n, k);
      const double rn = spectral_radius(nn).value;
      const double rl = spectral_radius(ll).value;
      CHECK(rn > rl + 1e-9);
      CHECK(rl > n - k - 1 + 1e-9);
      const double qn = q_radius(nn).value;
      const double ql = q_radius(ll).value;
      CHECK(qn > ql + 1e-9);
      CHECK(ql > 2 * n - 2 * k - 2 + 1e-9);
    }
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      const double rc = spectral_radius(complement(make(Family::N, n, k))).value;
      const double bound = std::sqrt(static_cast<double>(k * (n - k - 1)));
      // k = 1 gives K_1 + K_{1,n-2}, which meets the bound exactly.
      if (k == 1 || (n % 2 == 1 && k == (n - 1) / 2)) {
        CHECK(std::abs(rc - bound) < 1e-9);
      } else {
        CHECK(rc > bound + 1e-9);
      }
    }
    for (int k = 1; 2 * k + 2 <= n; ++k) {
      const Graph bn = make(Family::barN, n, k);
      CHECK(spectral_radius(bn).value > n - k - 2 + 1e-9);
      CHECK(q_radius(bn).value > 2 * n - 2 * k - 4 + 1e-9);
      const double rc = spectral_radius(complement(bn)).value;
      const double bound = std::sqrt(static_cast<double>((k + 1) * (n - k - 1)));
      if (n % 2 == 0 && k == n / 2 - 1) {
        CHECK(std::abs(rc - bound) < 1e-9);
      } else {
        CHECK(rc > bound + 1e-9);
      }
    }
  }
}

TEST_CASE("B_n^k against the complete bipartite comparison graphs") {
  for (int side = 2; side <= 15; ++side) {
    for (int k = 1; 2 * k <= side; ++k) {
      const BipartiteGraph b = construct_bipartite(spec(Family::B, side, k));
      CHECK(spectral_radius(b.to_graph()).value > std::sqrt(static_cast<double>(side * (side - k))) + 1e-9);
      CHECK(q_radius(b.to_graph()).value > 2 * side - k + 1e-9);
      const Graph hat = quasi_complement(b).to_graph();
      CHECK(std::abs(spectral_radius(hat).value - std::sqrt(static_cast<double>(k * (side - k)))) < 1e-9);
      CHECK(std::abs(q_radius(hat).value - side) < 1e-9);
    }
  }
}
