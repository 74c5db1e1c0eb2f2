#include "hamspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hamspec/errors.hpp"

namespace hamspec {

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>(words_for(universe)), 0) {}

VertexSet::VertexSet(int universe, std::span<const std::uint64_t> words)
    : universe_(universe), words_(words.begin(), words.end()) {
  words_.resize(static_cast<std::size_t>(words_for(universe)), 0);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside [0," +
                     std::to_string(n_) + ")");
  }
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for_each_neighbor(u, [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

bool Graph::add_edge(int u, int v) {
  check_pair(u, v);
  if (has_edge(u, v)) return false;
  bits_[row_offset(u) + static_cast<std::size_t>(v) / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  bits_[row_offset(v) + static_cast<std::size_t>(u) / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
  ++m_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!has_edge(u, v)) return false;
  bits_[row_offset(u) + static_cast<std::size_t>(v) / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  bits_[row_offset(v) + static_cast<std::size_t>(u) / kWordBits] &= ~(std::uint64_t{1} << (u % kWordBits));
  --m_;
  return true;
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw DomainError("minimum degree of the 0-vertex graph is undefined");
  DegreeProfile p;
  p.degrees.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) p.degrees[static_cast<std::size_t>(v)] = g.degree(v);
  p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
  p.edge_count = g.edge_count();
  return p;
}

int min_degree(const Graph& g) { return degree_profile(g).min_degree; }

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  const int off = a.order();
  for (const auto& [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u) {
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  }
  return g;
}

Graph copies(const Graph& g, int k) {
  if (k < 1) throw DomainError("k_copies requires k >= 1, got " + std::to_string(k));
  Graph out = g;
  for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("relabel: permutation size mismatch");
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> stack;
  for (int root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    comps.emplace_back();
    seen[static_cast<std::size_t>(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comps.back().push_back(u);
      g.for_each_neighbor(u, [&](int w) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      });
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> queue;
  for (int root = 0; root < g.order(); ++root) {
    if (colour[static_cast<std::size_t>(root)] != -1) continue;
    colour[static_cast<std::size_t>(root)] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      bool odd = false;
      g.for_each_neighbor(u, [&](int w) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (cw == colour[static_cast<std::size_t>(u)]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
  }
  Bipartition b;
  for (int v = 0; v < g.order(); ++v) (colour[static_cast<std::size_t>(v)] == 0 ? b.x : b.y).push_back(v);
  return b;
}

}  // namespace hamspec
