#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

// Bipartite graph with labelled sides X = {0..nx-1} and Y = {0..ny-1}. Only
// cross pairs can be adjacent, so the quasi-complement is always defined.
// Edges are (x, y) pairs indexed within their own side.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int nx, int ny);

  static BipartiteGraph from_edges(int nx, int ny, std::span<const Edge> cross_edges);

  // Throws GraphError unless x_side and y_side partition V(g) and every edge
  // of g crosses. Side order follows the given vertex lists.
  static BipartiteGraph from_graph(const Graph& g, std::span<const int> x_side, std::span<const int> y_side);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  bool balanced() const { return nx_ == ny_; }
  // Common side size; throws DomainError when unbalanced.
  int side() const;

  bool has_edge(int x, int y) const {
    return (x_bits_[x_offset(x) + static_cast<std::size_t>(y) / kWordBits] >> (y % kWordBits)) & 1U;
  }
  bool add_edge(int x, int y);
  bool remove_edge(int x, int y);

  int degree_x(int x) const;
  int degree_y(int y) const;
  int edge_count() const { return m_; }
  // Minimum over both sides; throws DomainError for the empty graph.
  int min_degree() const;

  // Neighbourhood of x as a subset of Y, and of y as a subset of X.
  VertexSet x_neighbors(int x) const;
  VertexSet y_neighbors(int y) const;

  std::vector<Edge> edges() const;

  // X becomes vertices 0..nx-1, Y becomes nx..nx+ny-1.
  Graph to_graph() const;

  // Same graph with the roles of X and Y exchanged.
  BipartiteGraph swapped() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::size_t x_offset(int x) const { return static_cast<std::size_t>(x) * static_cast<std::size_t>(words_y_); }
  std::size_t y_offset(int y) const { return static_cast<std::size_t>(y) * static_cast<std::size_t>(words_x_); }
  void check_pair(int x, int y) const;

  int nx_ = 0;
  int ny_ = 0;
  int words_x_ = 0;
  int words_y_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> x_bits_;  // rows over Y
  std::vector<std::uint64_t> y_bits_;  // rows over X
};

// Flips exactly the cross pairs.
BipartiteGraph quasi_complement(const BipartiteGraph& b);

BipartiteGraph complete_bipartite(int nx, int ny);

// Some balanced 2-colouring of g, if one exists. Components are oriented by a
// subset-sum over their colour-class sizes, preferring the orientation chosen
// by bipartition().
std::optional<BipartiteGraph> balanced_view(const Graph& g);

// Every balanced 2-colouring of g with the component containing vertex 0
// fixed in one orientation (so X/Y swaps are not repeated). Stops after
// `limit` results.
std::vector<BipartiteGraph> balanced_views(const Graph& g, std::size_t limit = 1U << 16);

}  // namespace hamspec
