#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hamspec {

using Edge = std::pair<int, int>;

inline constexpr int kWordBits = 64;

inline int words_for(int universe) { return (universe + kWordBits - 1) / kWordBits; }

// Owning bitset over the vertex range [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::span<const std::uint64_t> words);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(int v) { words_[static_cast<std::size_t>(v) / kWordBits] |= std::uint64_t{1} << (v % kWordBits); }
  void erase(int v) { words_[static_cast<std::size_t>(v) / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits)); }

  int size() const;
  bool empty() const;
  std::vector<int> to_vector() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  std::span<const std::uint64_t> words() const { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<int>(w * kWordBits) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Undirected simple graph on vertices 0..n-1. Adjacency is one bitset row per
// vertex; rows are kept symmetric and loop-free by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws GraphError on an out-of-range endpoint or a loop. Duplicate pairs
  // collapse to a single edge.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    return (bits_[row_offset(u) + static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
  }
  int degree(int v) const;

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  VertexSet neighbors(int v) const { return VertexSet(n_, row(v)); }

  // Single-word adjacency row; only valid when order() <= 64.
  std::uint64_t mask(int v) const { return bits_[static_cast<std::size_t>(v)]; }

  std::vector<Edge> edges() const;

  // Both return whether the edge set changed.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);

  template <class F>
  void for_each_neighbor(int v, F&& f) const {
    const auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        f(static_cast<int>(w * kWordBits) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(int v) const { return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_); }
  void check_pair(int u, int v) const;

  int n_ = 0;
  int words_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  int min_degree = 0;
  int edge_count = 0;
};

// Throws DomainError for the 0-vertex graph, where the minimum is undefined.
DegreeProfile degree_profile(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

// Construction algebra. join and disjoint_union label the vertices of `a`
// first (0..n(a)-1) followed by those of `b`.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph copies(const Graph& g, int k);
Graph complement(const Graph& g);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
  std::vector<int> x;
  std::vector<int> y;
};

// Proper 2-colouring, built component by component with the smallest vertex
// of each component placed in X. Empty when g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

}  // namespace hamspec
