#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamspec/bipartite.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/oracle.hpp"
#include "hamspec/spectral.hpp"

namespace hamspec {

enum class TheoremId {
  dirac,
  ore,
  erdos,
  fn_rho,
  fn_rho_complement,
  main_rho,
  main_rho_complement,
  yu_fan_q,
  main_q,
  moon_moser_delta,
  moon_moser_edges,
  bip_rho,
  bip_q,
  bip_rho_qc,
  bip_q_qc,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);
bool is_bipartite_theorem(TheoremId id);
// Whether the statement has a traceability part (only the general-graph
// spectral theorems do).
bool has_traceable_part(TheoremId id);

enum class Property { hamiltonian, traceable };
std::string_view to_string(Property p);

enum class HypothesisStatus {
  not_applicable,  // no such part, parameter out of range, or order below the guard
  failed,
  borderline,  // a strict inequality is within the tolerance band
  held,
};
std::string_view to_string(HypothesisStatus s);

struct TheoremCheck {
  TheoremId theorem = TheoremId::ore;
  Property property = Property::hamiltonian;
  int k = 0;
  HypothesisStatus status = HypothesisStatus::not_applicable;
  // Held only because a non-strict inequality sits inside the tolerance band.
  bool boundary = false;
  // Set when the hypothesis held and the graph is one of the statement's
  // exceptional graphs.
  std::optional<FamilySpec> exceptional;
  // n, k, e, delta, measured spectral values, thresholds and one
  // slack_<name> entry per compared hypothesis (measured minus threshold for
  // lower bounds on the graph, threshold minus measured for upper bounds).
  std::map<std::string, double> evidence;
  std::vector<std::string> notes;

  bool held() const { return status == HypothesisStatus::held; }
};

struct CheckOptions {
  double tolerance = kTolerance;
  SpectralOptions spectral{};
};

// Evaluate one statement. k defaults to the minimum degree and is ignored by
// statements without a degree parameter.
TheoremCheck check_theorem(const Graph& g, TheoremId id, Property property, std::optional<int> k = std::nullopt,
                           const CheckOptions& opts = {});

// Bipartite statements on a balanced graph; throws DomainError when
// unbalanced.
TheoremCheck check_bipartite_theorem(const BipartiteGraph& b, TheoremId id, std::optional<int> k = std::nullopt,
                                     const CheckOptions& opts = {});

enum class Verdict { certified_positive, exceptional, inconclusive, oracle_resolved };
std::string_view to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  Property property = Property::hamiltonian;
  std::optional<TheoremId> theorem;
  std::map<std::string, double> evidence;
  std::optional<FamilySpec> exceptional;
  std::optional<bool> oracle_answer;  // set for oracle_resolved
  std::vector<int> witness;           // cycle or path when the oracle found one
  std::vector<std::string> notes;
};

struct CertifyOptions {
  bool use_oracle = false;
  CheckOptions check{};
  OracleOptions oracle{};
};

// Cascade orders:
//   hamiltonicity   ore, dirac, erdos, fn_rho, main_rho, yu_fan_q, main_q,
//                   fn_rho_complement, main_rho_complement
//   traceability    fn_rho, main_rho, yu_fan_q, main_q, fn_rho_complement,
//                   main_rho_complement
//   bipartite       moon_moser_delta, moon_moser_edges, bip_rho, bip_q,
//                   bip_q_qc, bip_rho_qc
// The first statement that holds decides: certified_positive, or exceptional
// if the graph is its exceptional graph. Boundary and borderline cases are
// noted and skipped.
std::vector<TheoremId> cascade(Property property);
std::vector<TheoremId> bipartite_cascade();

// Hamiltonicity needs n >= 3 and traceability n >= 1 (DomainError otherwise).
Certificate certify_hamiltonicity(const Graph& g, const CertifyOptions& opts = {});
Certificate certify_traceability(const Graph& g, const CertifyOptions& opts = {});
// Balanced input with side >= 2, else DomainError.
Certificate certify_bipartite_hamiltonicity(const BipartiteGraph& b, const CertifyOptions& opts = {});

// Cached threshold spectra of the extremal graphs (rho or q of N_n^k,
// barN_n^k, B_n^k). Thread safe.
double threshold_rho(Family f, int n, int k);
double threshold_q(Family f, int n, int k);

}  // namespace hamspec
