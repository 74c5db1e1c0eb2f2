#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hamspec/bipartite.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

enum class OracleStatus { found, not_found, budget_exceeded };

std::string_view to_string(OracleStatus s);

struct OracleOptions {
  std::uint64_t node_budget = 100'000'000;
  // Subset DP over vertex sets when backtracking runs out of budget.
  bool dp_fallback = true;
  int dp_max_order = 20;
};

struct OracleResult {
  OracleStatus status = OracleStatus::not_found;
  // Cycle (each consecutive pair and last->first adjacent) or path order.
  std::vector<int> witness;
  std::uint64_t nodes = 0;
  bool used_dp = false;

  bool found() const { return status == OracleStatus::found; }
  bool decided() const { return status != OracleStatus::budget_exceeded; }
};

// Exact Hamilton cycle search. n <= 2 is never Hamiltonian. Throws
// DomainError for n > 64.
OracleResult is_hamiltonian(const Graph& g, const OracleOptions& opts = {});

// Hamilton path via a cycle search in G v K_1 with the apex removed from the
// witness. Throws DomainError for n = 0 or n > 63.
OracleResult is_traceable(const Graph& g, const OracleOptions& opts = {});

// Balanced bipartite graphs go through to_graph(); witness vertices use that
// labelling (X first, then Y).
OracleResult is_hamiltonian(const BipartiteGraph& b, const OracleOptions& opts = {});

bool is_hamilton_cycle(const Graph& g, std::span<const int> order);
bool is_hamilton_path(const Graph& g, std::span<const int> order);

// Exact clique number by branch and bound with greedy colouring bounds.
// Throws DomainError for n = 0 or n > 64.
int clique_number(const Graph& g);

// Whether some s vertices of X and t vertices of Y are pairwise adjacent
// across. Throws DomainError when s > nx, t > ny, or a side exceeds 64.
bool contains_biclique(const BipartiteGraph& b, int s, int t);

}  // namespace hamspec
