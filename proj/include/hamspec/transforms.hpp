#pragma once

#include <span>

#include "hamspec/bipartite.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

struct ClosureResult {
  Graph graph;
  int rounds = 0;  // number of edges added
};

struct BipartiteClosureResult {
  BipartiteGraph graph;
  int rounds = 0;
};

// Bondy-Chvatal closure: repeatedly join nonadjacent pairs with degree sum at
// least n, scanning pairs lexicographically until a pass adds nothing.
ClosureResult bc_closure(const Graph& g);

// Same closure with candidate pairs visited in the given order first. Pairs
// not listed are still considered afterwards. Used to test order independence.
ClosureResult bc_closure(const Graph& g, std::span<const Edge> scan_order);

// Bipartite closure with threshold side + 1 across the sides. Throws
// DomainError for unbalanced input.
BipartiteClosureResult bipartite_closure(const BipartiteGraph& b);
BipartiteClosureResult bipartite_closure(const BipartiteGraph& b, std::span<const Edge> scan_order);

bool is_closed(const Graph& g);
bool is_b_closed(const BipartiteGraph& b);

// For every w in N(u) \ (N(v) + v), replace uw by vw. u stays in the graph,
// possibly isolated. Throws DomainError when u == v or either is out of range.
Graph kelmans(const Graph& g, int u, int v);

}  // namespace hamspec
