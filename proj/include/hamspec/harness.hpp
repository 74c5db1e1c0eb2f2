#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamspec/bipartite.hpp"
#include "hamspec/certifier.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/oracle.hpp"

namespace hamspec {

enum class SpaceKind { all_labeled, labeled_min_degree, balanced_bipartite_labeled, graph6_file, random_model };
enum class RandomModel { uniform_gnp, bipartite_gnp };

std::string_view to_string(SpaceKind k);
std::string_view to_string(RandomModel m);

inline constexpr int kMaxLabeledOrder = 8;
inline constexpr int kMaxBipartiteSide = 5;

struct SearchSpace {
  SpaceKind kind = SpaceKind::all_labeled;
  int n = 0;           // order, or side size for bipartite spaces
  int min_degree = 0;  // filter applied after generation
  RandomModel model = RandomModel::uniform_gnp;
  // Each random sample draws its own p uniformly from [p_lo, p_hi].
  double p_lo = 0.5;
  double p_hi = 0.5;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::string path;

  static SearchSpace all_labeled(int n);
  static SearchSpace labeled_min_degree(int n, int k);
  static SearchSpace balanced_bipartite_labeled(int side, int min_degree = 0);
  static SearchSpace graph6_file(std::string path);
  static SearchSpace gnp(int n, double p, std::uint64_t samples, std::uint64_t seed);
  static SearchSpace bipartite_gnp(int side, double p, std::uint64_t samples, std::uint64_t seed);

  bool bipartite() const;
  std::string to_string() const;
};

// Random access over a space. Index i of a labeled space is the edge-subset
// code: bit b set means the b-th pair is an edge, pairs in the order
// (0,1),(0,2),...,(1,2),... for graphs and x*side+y for bipartite graphs.
// Random samples: mt19937_64 seeded with splitmix64(seed + i); p = p_lo +
// (p_hi - p_lo) u, then one uniform u < p per pair in the same order, where
// u = (draw >> 11) * 2^-53.
class Enumeration {
 public:
  // Throws DomainError when a cap is exceeded or the file cannot be read.
  explicit Enumeration(const SearchSpace& space);

  const SearchSpace& space() const { return space_; }
  std::uint64_t size() const { return size_; }

  // nullopt when the item is removed by the min-degree filter. Graph spaces
  // only (bipartite spaces convert with to_graph()).
  std::optional<Graph> graph(std::uint64_t i) const;
  // Bipartite spaces only.
  std::optional<BipartiteGraph> bipartite(std::uint64_t i) const;

 private:
  SearchSpace space_;
  std::uint64_t size_ = 0;
  std::vector<std::string> lines_;
};

// Materialise a space (small spaces only; used by tests and the CLI).
std::vector<Graph> enumerate_graphs(const SearchSpace& space);
std::vector<BipartiteGraph> enumerate_bipartite(const SearchSpace& space);

std::uint64_t splitmix64(std::uint64_t x);

enum class Lemma {
  clique_lemma,
  refined_hamilton_lemma,
  refined_traceable_lemma,
  ainouche_christofides,
  biclique_lemma,
  refined_bipartite_lemma,
  ferrara_jacobson_powell,
};
std::string_view to_string(Lemma l);

// "<theorem>" (Hamiltonian part), "<theorem>:path" (traceable part) or a
// lemma name.
struct Target {
  std::optional<TheoremId> theorem;
  Property property = Property::hamiltonian;
  std::optional<Lemma> lemma;

  static Target parse(std::string_view text);  // throws DomainError
  std::string to_string() const;
  bool bipartite() const;
};

struct VerifyOptions {
  // Degree parameter; defaults to the minimum degree for theorems and to 1
  // (0 for the traceable lemma) for lemmas.
  std::optional<int> k;
  int jobs = 1;
  CheckOptions check{};
  OracleOptions oracle{};
};

struct Counterexample {
  std::uint64_t index = 0;
  std::string graph6;
};

struct VerificationReport {
  std::string target;
  std::string space;
  std::uint64_t examined = 0;
  std::uint64_t hypothesis_count = 0;
  std::vector<Counterexample> conclusion_failures;  // sorted by graph6, then index
  std::uint64_t exceptional_matches = 0;
  std::map<std::string, std::uint64_t> exceptional_by_family;
  std::uint64_t borderline = 0;
  std::vector<Counterexample> undecided;  // oracle budget exhausted
  double wall_seconds = 0.0;

  bool clean() const { return conclusion_failures.empty() && undecided.empty(); }
};

// Refuses (DomainError) when the space's fixed order violates the statement's
// order precondition or the space and target kinds do not fit. Graph spaces
// feed bipartite statements through every balanced 2-colouring.
VerificationReport verify_theorem(const Target& target, const SearchSpace& space, const VerifyOptions& opts = {});

// Same over an explicit list (family instances and perturbations).
VerificationReport verify_graphs(const Target& target, std::span<const Graph> graphs, std::string label,
                                 const VerifyOptions& opts = {});

enum class Objective { max_rho, max_q, min_rho_complement, min_rho_qc, min_q_qc };
enum class Constraint { non_hamiltonian, non_traceable };
std::string_view to_string(Objective o);
std::string_view to_string(Constraint c);
std::optional<Objective> objective_from_string(std::string_view s);
std::optional<Constraint> constraint_from_string(std::string_view s);

struct ExtremalResult {
  std::optional<double> best;
  // One graph6 per isomorphism class attaining the optimum within tolerance,
  // each the lexicographically smallest labelled copy seen; sorted.
  std::vector<std::string> argmax;
  std::uint64_t examined = 0;     // graphs passing the degree filter
  std::uint64_t oracle_calls = 0;  // candidates not pruned by the running optimum
  std::uint64_t undecided = 0;
  double wall_seconds = 0.0;
};

// Optimum over graphs of the space with minimum degree >= k satisfying the
// constraint. min_rho_qc and min_q_qc need a bipartite space.
ExtremalResult extremal_search(int k, Objective objective, Constraint constraint, const SearchSpace& space,
                               const VerifyOptions& opts = {});

}  // namespace hamspec
