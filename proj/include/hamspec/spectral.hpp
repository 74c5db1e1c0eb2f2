#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hamspec/bipartite.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

// Comparison tolerance used wherever a computed eigenvalue meets a closed form
// or another computed eigenvalue.
inline constexpr double kTolerance = 1e-9;

enum class SpectralMethod { dense_eigensolver, power_iteration, closed_form };

std::string_view to_string(SpectralMethod m);

struct SpectralResult {
  double value = 0.0;
  SpectralMethod method = SpectralMethod::closed_form;
  double residual = 0.0;  // ||Mx - value x||_inf for the returned unit eigenvector
  int iterations = 0;     // Jacobi sweeps or power steps
};

struct SpectralOptions {
  double tolerance = kTolerance;         // maximum accepted residual
  double off_diagonal_tolerance = 1e-12;  // Jacobi stopping rule
  int max_sweeps = 100;
  int power_threshold = 200;  // orders above this use power iteration
  int max_power_iterations = 2'000'000;
};

// Dense row-major symmetric matrix.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }

 private:
  int n_;
  std::vector<double> a_;
};

SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix signless_laplacian(const Graph& g);

struct EigenDecomposition {
  std::vector<double> values;   // unsorted, values[i] pairs with column i
  std::vector<double> vectors;  // column-major n x n, orthonormal columns
  int sweeps = 0;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// off_tolerance. Throws SpectralError after max_sweeps.
EigenDecomposition jacobi_eigen(SymmetricMatrix m, double off_tolerance, int max_sweeps);

// Largest eigenvalue of a dense symmetric matrix via jacobi_eigen.
SpectralResult largest_eigenvalue(const SymmetricMatrix& m, const SpectralOptions& opts = {});

// rho(G) = lambda_max(A), q(G) = lambda_max(A + D). Edgeless graphs return 0
// exactly without a solve. Throw DomainError for n = 0 and SpectralError on
// non-convergence or a residual above opts.tolerance.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});
SpectralResult q_radius(const Graph& g, const SpectralOptions& opts = {});

enum class ClosedForm {
  rho_complete,            // rho(K_a) = a - 1
  q_complete,              // q(K_a) = 2a - 2
  rho_complete_bipartite,  // rho(K_{a,b}) = sqrt(ab)
  q_complete_bipartite,    // q(K_{a,b}) = a + b
  rho_complete_split,      // rho(K_k v (n-2k)K_1), a = k, b = n, 1 <= k <= (n-1)/2
};

// Throws DomainError when the parameters are outside the family's range.
double closed_form(ClosedForm target, int a, int b = 0);

enum class BoundId {
  nikiforov,
  feng_yu,
  bipartite_sqrt_e,
  degree_mean,
  balanced_bipartite_q,
  berman_zhang,
  anderson_morley,
};

inline constexpr BoundId kAllBounds[] = {BoundId::nikiforov,     BoundId::feng_yu,
                                         BoundId::bipartite_sqrt_e, BoundId::degree_mean,
                                         BoundId::balanced_bipartite_q, BoundId::berman_zhang,
                                         BoundId::anderson_morley};

std::string_view to_string(BoundId id);

enum class BoundDirection { upper, lower };

struct BoundRecord {
  BoundId id;
  BoundDirection direction;
  bool applicable = false;
  double bound_value = 0.0;
  double measured_value = 0.0;
  // upper: bound - measured; lower: measured - bound.
  double slack = 0.0;
  bool satisfied = false;  // slack >= -tolerance; false when inapplicable
  std::string_view reason;  // why a record is inapplicable
};

struct BoundReport {
  std::vector<BoundRecord> records;  // one per BoundId, in kAllBounds order
  double rho = 0.0;
  double q = 0.0;

  const BoundRecord& at(BoundId id) const;
  bool all_satisfied() const;  // over applicable records
};

// k defaults to the minimum degree; a k above the minimum degree makes the
// Nikiforov record inapplicable. The two bipartite bounds apply when g has a
// (balanced) 2-colouring.
BoundReport bound_report(const Graph& g, std::optional<int> k = std::nullopt, const SpectralOptions& opts = {});

// Same inequalities with the given sides used for the bipartite records.
BoundReport bound_report(const BipartiteGraph& b, std::optional<int> k = std::nullopt, const SpectralOptions& opts = {});

}  // namespace hamspec
