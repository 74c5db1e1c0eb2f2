#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hamspec/bipartite.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

enum class Family {
  L,                   // K_1 v (K_k + K_{n-k-1})
  N,                   // K_k v (K_{n-2k} + kK_1)
  barL,                // K_{k+1} + K_{n-k-1}
  barN,                // K_k v (K_{n-2k-1} + (k+1)K_1)
  H,                   // S v (floor(n/2)+1)K_1 with |S| = ceil(n/2)-1, any edges in S
  B,                   // K_{n,n} minus the edges of a K_{n-k,k}
  Bset,                // core H (k x (n-k)) plus k vertices on X_H, n-k vertices on Y_H
  Gamma1,              // 4+4 bipartite exception
  Gamma2,              // Gamma1 plus x1y1
  complete,            // K_n
  complete_bipartite,  // K_{n,k}
  complete_split,      // K_k v (n-2k)K_1
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);
bool is_bipartite_family(Family f);

// Text form: "<name>[:key=value,...]" with keys n, k and inner (graph6), e.g.
// "N:n=7,k=2", "H:n=5,inner=A_", "B:n=4,k=2", "Gamma1".
//
// For B and Bset, n is the side size (order 2n). For H, `inner` is the graph
// on S; absent means S is independent. For Bset, `inner` is a graph on n
// vertices whose first k vertices form X_H and the rest Y_H; absent means the
// core has no edges.
struct FamilySpec {
  Family family = Family::complete;
  int n = 0;
  int k = 0;
  std::optional<Graph> inner;

  static FamilySpec parse(std::string_view text);  // throws DomainError
  std::string to_string() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Throws DomainError unless the parameters are in range:
// L, N: 1 <= k, 2k+1 <= n.   barL, barN: 0 <= k, 2k+2 <= n.
// B, Bset: 1 <= k, 2k <= n.  H: n >= 2.   complete_split: 1 <= k, 2k+1 <= n.
void validate(const FamilySpec& spec);

// Labelling:
//   L      apex 0, K_k on 1..k, K_{n-k-1} on k+1..n-1
//   N      K_k on 0..k-1, K_{n-2k} next, the k independent vertices last
//   barL   K_{k+1} first, then K_{n-k-1}
//   barN   K_k first, then K_{n-2k-1}, then the k+1 independent vertices
//   H      S on 0..|S|-1, the independent set after it
//   B/Bset (bipartite) X: X_H = 0..k-1, added vertices k..n-1;
//          Y: Y_H = 0..n-k-1, added vertices n-k..n-1
//   Gamma  x1..x4 = X 0..3, y1..y4 = Y 0..3
// Bipartite families return to_graph() of construct_bipartite().
Graph construct(const FamilySpec& spec);

// Only for B, Bset, Gamma1, Gamma2 and complete_bipartite.
BipartiteGraph construct_bipartite(const FamilySpec& spec);

// Membership up to isomorphism. For H and Bset the inner payload is ignored
// (membership in the whole set). Bipartite families accept a Graph through
// its balanced 2-colourings. n (and k) must match the FamilySpec; a mismatched
// order simply yields false.
bool recognize(const Graph& g, const FamilySpec& spec);
bool recognize(const BipartiteGraph& b, const FamilySpec& spec);

// G isomorphic to a spanning subgraph of the family graph, for L, N, barL,
// barN (order n) and B (balanced bipartite, side n). Throws DomainError on an
// order mismatch or another family.
bool spanning_subgraph_of(const Graph& g, Family family, int n, int k);
bool spanning_subgraph_of(const BipartiteGraph& b, Family family, int n, int k);

}  // namespace hamspec
