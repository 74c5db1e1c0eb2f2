#include <doctest.h>

#include <cmath>
#include <random>

#include "hamspec/certifier.hpp"
#include "hamspec/errors.hpp"
#include "hamspec/families.hpp"
#include "hamspec/oracle.hpp"
#include "support.hpp"

using namespace hamspec;

namespace {

Graph make(Family f, int n, int k = 0) { return construct(FamilySpec{f, n, k, std::nullopt}); }

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

bool slacks_nonnegative(const std::map<std::string, double>& evidence) {
  for (const auto& [key, value] : evidence) {
    if (key.rfind("slack_", 0) == 0 && value < -kTolerance) return false;
  }
  return true;
}

// Shared soundness checks for one certificate.
void audit(const Graph& g, const Certificate& c, bool truth) {
  if (c.verdict == Verdict::certified_positive) {
    CHECK(truth);
    CHECK(c.theorem.has_value());
    CHECK(slacks_nonnegative(c.evidence));
  }
  if (c.verdict == Verdict::exceptional) {
    CHECK_FALSE(truth);
    REQUIRE(c.exceptional.has_value());
    CHECK(recognize(g, *c.exceptional));
  }
}

}  // namespace

TEST_CASE("theorem names round trip") {
  for (int i = 0; i <= static_cast<int>(TheoremId::bip_q_qc); ++i) {
    const auto id = static_cast<TheoremId>(i);
    CHECK(theorem_from_string(to_string(id)) == id);
  }
  CHECK_FALSE(theorem_from_string("nope").has_value());
  CHECK(is_bipartite_theorem(TheoremId::bip_rho));
  CHECK_FALSE(is_bipartite_theorem(TheoremId::ore));
  CHECK(has_traceable_part(TheoremId::main_q));
  CHECK_FALSE(has_traceable_part(TheoremId::dirac));
}

TEST_CASE("Hamiltonicity examples") {
  const auto k7 = certify_hamiltonicity(complete_graph(7));
  CHECK(k7.verdict == Verdict::certified_positive);
  CHECK(k7.theorem == TheoremId::ore);
  CHECK(k7.evidence.at("e") == 21);
  CHECK(k7.evidence.at("threshold_edges") == 16);

  const auto n172 = certify_hamiltonicity(make(Family::N, 17, 2));
  CHECK(n172.verdict == Verdict::exceptional);
  CHECK(n172.theorem == TheoremId::main_rho);
  REQUIRE(n172.exceptional.has_value());
  CHECK(*n172.exceptional == FamilySpec{Family::N, 17, 2, std::nullopt});

  CertifyOptions with_oracle;
  with_oracle.use_oracle = true;
  const auto pet = certify_hamiltonicity(petersen(), with_oracle);
  CHECK(pet.verdict == Verdict::oracle_resolved);
  CHECK(pet.oracle_answer == false);
  CHECK(pet.witness.empty());
  CHECK(certify_hamiltonicity(petersen()).verdict == Verdict::inconclusive);

  CHECK_THROWS_AS(certify_hamiltonicity(complete_graph(2)), DomainError);
}

TEST_CASE("traceability examples") {
  const auto p6 = certify_traceability(path_graph(6));
  CHECK(p6.verdict == Verdict::inconclusive);
  CertifyOptions with_oracle;
  with_oracle.use_oracle = true;
  const auto p6o = certify_traceability(path_graph(6), with_oracle);
  CHECK(p6o.verdict == Verdict::oracle_resolved);
  CHECK(p6o.oracle_answer == true);
  CHECK(is_hamilton_path(path_graph(6), p6o.witness));

  const auto bn = certify_traceability(make(Family::barN, 16, 1));
  CHECK(bn.verdict == Verdict::exceptional);
  CHECK(bn.theorem == TheoremId::main_rho);
  CHECK(*bn.exceptional == FamilySpec{Family::barN, 16, 1, std::nullopt});

  // barL_8^0 = K_7 + K_1 is also barN_8^0, so the adjacency statement reaches
  // it first; the complement statement names barL on its own.
  const Graph bl = make(Family::barL, 8, 0);
  const auto c = certify_traceability(bl);
  CHECK(c.verdict == Verdict::exceptional);
  CHECK_FALSE(c.notes.empty());
  const auto comp = check_theorem(bl, TheoremId::fn_rho_complement, Property::traceable);
  CHECK(comp.held());
  CHECK(comp.evidence.at("rho_complement") == doctest::Approx(std::sqrt(7.0)));
  REQUIRE(comp.exceptional.has_value());
  CHECK(*comp.exceptional == FamilySpec{Family::barL, 8, 0, std::nullopt});

  CHECK_THROWS_AS(certify_traceability(Graph(0)), DomainError);
}

TEST_CASE("bipartite examples") {
  const auto k44 = certify_bipartite_hamiltonicity(complete_bipartite(4, 4));
  CHECK(k44.verdict == Verdict::certified_positive);
  CHECK(k44.theorem == TheoremId::moon_moser_delta);
  const auto qc = check_bipartite_theorem(complete_bipartite(4, 4), TheoremId::bip_q_qc);
  CHECK(qc.held());
  CHECK_FALSE(qc.exceptional.has_value());
  CHECK(qc.evidence.at("q_quasi_complement") == 0.0);

  const auto b92 = certify_bipartite_hamiltonicity(construct_bipartite(FamilySpec{Family::B, 9, 2, std::nullopt}));
  CHECK(b92.verdict == Verdict::exceptional);
  CHECK(b92.theorem == TheoremId::bip_rho);
  CHECK(b92.exceptional->family == Family::B);

  const auto g1 = certify_bipartite_hamiltonicity(construct_bipartite(FamilySpec{Family::Gamma1, 4, 0, std::nullopt}));
  CHECK(g1.verdict == Verdict::exceptional);
  CHECK(g1.theorem == TheoremId::bip_q_qc);
  CHECK(g1.exceptional->family == Family::Gamma1);

  CHECK_THROWS_AS(certify_bipartite_hamiltonicity(complete_bipartite(2, 3)), DomainError);
  CHECK_THROWS_AS(certify_bipartite_hamiltonicity(complete_bipartite(1, 1)), DomainError);
}

TEST_CASE("small counterexamples to the q condition are not certified") {
  const Graph star = complete_bipartite(1, 3).to_graph();
  CHECK(certify_traceability(star).verdict != Verdict::certified_positive);
  CHECK(check_theorem(star, TheoremId::yu_fan_q, Property::traceable).status == HypothesisStatus::not_applicable);

  const Graph k113 = join(complete_graph(2), empty_graph(3));
  CHECK(certify_hamiltonicity(k113).verdict != Verdict::certified_positive);
  CHECK(check_theorem(k113, TheoremId::yu_fan_q, Property::hamiltonian).status == HypothesisStatus::not_applicable);
}

TEST_CASE("strict inequalities at equality are borderline") {
  // rho(K_6 + K_1) = 5 = n - 2 exactly; the Hamiltonian part needs rho > n - 2.
  const Graph g = disjoint_union(complete_graph(6), complete_graph(1));
  const auto check = check_theorem(g, TheoremId::fn_rho, Property::hamiltonian);
  CHECK(check.status == HypothesisStatus::borderline);
  CHECK_FALSE(check.held());
  // The traceable part is non-strict and reaches its exceptional graph.
  const auto path = check_theorem(g, TheoremId::fn_rho, Property::traceable);
  CHECK(path.held());
  CHECK(path.boundary);
  CHECK(path.exceptional.has_value());
}

TEST_CASE("explicit k and range guards") {
  const Graph n = make(Family::N, 17, 2);
  // rho(N_17^2) sits below rho(N_17^1), so the weaker k does not help.
  CHECK(check_theorem(n, TheoremId::main_rho, Property::hamiltonian, 1).status == HypothesisStatus::failed);
  CHECK(check_theorem(n, TheoremId::main_rho, Property::hamiltonian, 3).status == HypothesisStatus::failed);
  // Order guard n >= max{6k+5, ...} fails for N_16^2 with k = 2.
  CHECK(check_theorem(make(Family::N, 16, 2), TheoremId::main_rho, Property::hamiltonian).status ==
        HypothesisStatus::not_applicable);
  CHECK(check_theorem(n, TheoremId::dirac, Property::traceable).status == HypothesisStatus::not_applicable);
  CHECK_THROWS_AS(check_bipartite_theorem(complete_bipartite(2, 3), TheoremId::bip_q), DomainError);
}

TEST_CASE("threshold spectra match direct computation") {
  CHECK(threshold_rho(Family::N, 17, 2) == doctest::Approx(spectral_radius(make(Family::N, 17, 2)).value).epsilon(1e-12));
  CHECK(threshold_q(Family::barN, 16, 1) == doctest::Approx(q_radius(make(Family::barN, 16, 1)).value).epsilon(1e-12));
  const auto b = construct_bipartite(FamilySpec{Family::B, 9, 2, std::nullopt}).to_graph();
  CHECK(threshold_rho(Family::B, 9, 2) == doctest::Approx(spectral_radius(b).value).epsilon(1e-12));
  // Cached value is stable.
  CHECK(threshold_rho(Family::N, 17, 2) == threshold_rho(Family::N, 17, 2));
}

TEST_CASE("cascade is sound on every graph with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << testsupport::pair_count(n)); ++code) {
      const Graph g = testsupport::graph_from_code(n, code);
      if (n >= 3) audit(g, certify_hamiltonicity(g), testsupport::brute_hamiltonian(g));
      audit(g, certify_traceability(g), testsupport::brute_traceable(g));
    }
  }
}

TEST_CASE("cascade is sound on random graphs") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph g = testsupport::random_graph(n, std::uniform_real_distribution<double>(0.3, 1.0)(rng), rng);
    audit(g, certify_hamiltonicity(g), is_hamiltonian(g).found());
    audit(g, certify_traceability(g), is_traceable(g).found());
  }
}

TEST_CASE("bipartite cascade is sound on every side-3 graph and random side-4 graphs") {
  auto run = [](const BipartiteGraph& b) {
    const auto c = certify_bipartite_hamiltonicity(b);
    const bool truth = is_hamiltonian(b).found();
    if (c.verdict == Verdict::certified_positive) {
      CHECK(truth);
      CHECK(slacks_nonnegative(c.evidence));
    }
    if (c.verdict == Verdict::exceptional) {
      CHECK_FALSE(truth);
      CHECK(recognize(b, *c.exceptional));
    }
  };
  for (std::uint64_t code = 0; code < 512; ++code) run(testsupport::bipartite_from_code(3, code));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 3000; ++trial) run(testsupport::random_bipartite(4, 4, std::uniform_real_distribution<double>(0.4, 1.0)(rng), rng));
}

TEST_CASE("certificates are deterministic") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testsupport::random_graph(9, 0.7, rng);
    const auto a = certify_hamiltonicity(g);
    const auto b = certify_hamiltonicity(g);
    CHECK(a.verdict == b.verdict);
    CHECK(a.theorem == b.theorem);
    CHECK(a.evidence == b.evidence);
    CHECK(a.notes == b.notes);
  }
}
