#include "hamspec/bipartite.hpp"

#include <algorithm>
#include <string>

#include "hamspec/errors.hpp"

namespace hamspec {

BipartiteGraph::BipartiteGraph(int nx, int ny)
    : nx_(nx), ny_(ny), words_x_(words_for(nx)), words_y_(words_for(ny)) {
  if (nx < 0 || ny < 0) throw GraphError("negative side size");
  x_bits_.assign(static_cast<std::size_t>(nx) * static_cast<std::size_t>(words_y_), 0);
  y_bits_.assign(static_cast<std::size_t>(ny) * static_cast<std::size_t>(words_x_), 0);
}

BipartiteGraph BipartiteGraph::from_edges(int nx, int ny, std::span<const Edge> cross_edges) {
  BipartiteGraph b(nx, ny);
  for (const auto& [x, y] : cross_edges) b.add_edge(x, y);
  return b;
}

BipartiteGraph BipartiteGraph::from_graph(const Graph& g, std::span<const int> x_side, std::span<const int> y_side) {
  const int n = g.order();
  if (static_cast<int>(x_side.size() + y_side.size()) != n) throw GraphError("sides do not cover the vertex set");
  std::vector<int> where(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < x_side.size(); ++i) {
    const int v = x_side[i];
    if (v < 0 || v >= n || where[static_cast<std::size_t>(v)] != -1) throw GraphError("invalid X side");
    where[static_cast<std::size_t>(v)] = 0;
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < y_side.size(); ++i) {
    const int v = y_side[i];
    if (v < 0 || v >= n || where[static_cast<std::size_t>(v)] != -1) throw GraphError("invalid Y side");
    where[static_cast<std::size_t>(v)] = 1;
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  BipartiteGraph b(static_cast<int>(x_side.size()), static_cast<int>(y_side.size()));
  for (const auto& [u, v] : g.edges()) {
    const int wu = where[static_cast<std::size_t>(u)];
    const int wv = where[static_cast<std::size_t>(v)];
    if (wu == wv) {
      throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies inside one side");
    }
    if (wu == 0) {
      b.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    } else {
      b.add_edge(index[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(u)]);
    }
  }
  return b;
}

int BipartiteGraph::side() const {
  if (!balanced()) {
    throw DomainError("bipartite graph is unbalanced (" + std::to_string(nx_) + " vs " + std::to_string(ny_) + ")");
  }
  return nx_;
}

void BipartiteGraph::check_pair(int x, int y) const {
  if (x < 0 || x >= nx_ || y < 0 || y >= ny_) {
    throw GraphError("cross pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
  }
}

bool BipartiteGraph::add_edge(int x, int y) {
  check_pair(x, y);
  if (has_edge(x, y)) return false;
  x_bits_[x_offset(x) + static_cast<std::size_t>(y) / kWordBits] |= std::uint64_t{1} << (y % kWordBits);
  y_bits_[y_offset(y) + static_cast<std::size_t>(x) / kWordBits] |= std::uint64_t{1} << (x % kWordBits);
  ++m_;
  return true;
}

bool BipartiteGraph::remove_edge(int x, int y) {
  check_pair(x, y);
  if (!has_edge(x, y)) return false;
  x_bits_[x_offset(x) + static_cast<std::size_t>(y) / kWordBits] &= ~(std::uint64_t{1} << (y % kWordBits));
  y_bits_[y_offset(y) + static_cast<std::size_t>(x) / kWordBits] &= ~(std::uint64_t{1} << (x % kWordBits));
  --m_;
  return true;
}

int BipartiteGraph::degree_x(int x) const {
  int d = 0;
  for (int w = 0; w < words_y_; ++w) d += std::popcount(x_bits_[x_offset(x) + static_cast<std::size_t>(w)]);
  return d;
}

int BipartiteGraph::degree_y(int y) const {
  int d = 0;
  for (int w = 0; w < words_x_; ++w) d += std::popcount(y_bits_[y_offset(y) + static_cast<std::size_t>(w)]);
  return d;
}

int BipartiteGraph::min_degree() const {
  if (nx_ + ny_ == 0) throw DomainError("minimum degree of the empty graph is undefined");
  int best = nx_ + ny_;
  for (int x = 0; x < nx_; ++x) best = std::min(best, degree_x(x));
  for (int y = 0; y < ny_; ++y) best = std::min(best, degree_y(y));
  return best;
}

VertexSet BipartiteGraph::x_neighbors(int x) const {
  return VertexSet(ny_, std::span<const std::uint64_t>(x_bits_.data() + x_offset(x), static_cast<std::size_t>(words_y_)));
}

VertexSet BipartiteGraph::y_neighbors(int y) const {
  return VertexSet(nx_, std::span<const std::uint64_t>(y_bits_.data() + y_offset(y), static_cast<std::size_t>(words_x_)));
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (int x = 0; x < nx_; ++x) {
    for (int y = 0; y < ny_; ++y) {
      if (has_edge(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

Graph BipartiteGraph::to_graph() const {
  Graph g(nx_ + ny_);
  for (const auto& [x, y] : edges()) g.add_edge(x, nx_ + y);
  return g;
}

BipartiteGraph BipartiteGraph::swapped() const {
  BipartiteGraph b(ny_, nx_);
  for (const auto& [x, y] : edges()) b.add_edge(y, x);
  return b;
}

BipartiteGraph quasi_complement(const BipartiteGraph& b) {
  BipartiteGraph out(b.nx(), b.ny());
  for (int x = 0; x < b.nx(); ++x) {
    for (int y = 0; y < b.ny(); ++y) {
      if (!b.has_edge(x, y)) out.add_edge(x, y);
    }
  }
  return out;
}

BipartiteGraph complete_bipartite(int nx, int ny) { return quasi_complement(BipartiteGraph(nx, ny)); }

namespace {

struct ComponentColouring {
  std::vector<int> side0;  // colour 0, contains the smallest vertex
  std::vector<int> side1;
};

std::optional<std::vector<ComponentColouring>> colour_components(const Graph& g) {
  const auto bp = bipartition(g);
  if (!bp) return std::nullopt;
  std::vector<int> colour(static_cast<std::size_t>(g.order()), 0);
  for (int v : bp->y) colour[static_cast<std::size_t>(v)] = 1;
  std::vector<ComponentColouring> out;
  for (const auto& comp : connected_components(g)) {
    ComponentColouring c;
    for (int v : comp) (colour[static_cast<std::size_t>(v)] == 0 ? c.side0 : c.side1).push_back(v);
    out.push_back(std::move(c));
  }
  return out;
}

BipartiteGraph assemble(const Graph& g, const std::vector<ComponentColouring>& comps, const std::vector<char>& flip) {
  std::vector<int> xs;
  std::vector<int> ys;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& a = flip[i] ? comps[i].side1 : comps[i].side0;
    const auto& b = flip[i] ? comps[i].side0 : comps[i].side1;
    xs.insert(xs.end(), a.begin(), a.end());
    ys.insert(ys.end(), b.begin(), b.end());
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  return BipartiteGraph::from_graph(g, xs, ys);
}

}  // namespace

std::optional<BipartiteGraph> balanced_view(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0) return std::nullopt;
  const auto comps = colour_components(g);
  if (!comps) return std::nullopt;
  const int half = n / 2;
  const std::size_t c = comps->size();
  // reach[i][s]: X-size s attainable using the first i components.
  std::vector<std::vector<char>> reach(c + 1, std::vector<char>(static_cast<std::size_t>(half) + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < c; ++i) {
    const int a = static_cast<int>((*comps)[i].side0.size());
    const int b = static_cast<int>((*comps)[i].side1.size());
    for (int s = 0; s <= half; ++s) {
      if (!reach[i][static_cast<std::size_t>(s)]) continue;
      if (s + a <= half) reach[i + 1][static_cast<std::size_t>(s + a)] = 1;
      if (s + b <= half) reach[i + 1][static_cast<std::size_t>(s + b)] = 1;
    }
  }
  if (!reach[c][static_cast<std::size_t>(half)]) return std::nullopt;
  std::vector<char> flip(c, 0);
  int s = half;
  for (std::size_t i = c; i-- > 0;) {
    const int a = static_cast<int>((*comps)[i].side0.size());
    if (s - a >= 0 && reach[i][static_cast<std::size_t>(s - a)]) {
      s -= a;
    } else {
      flip[i] = 1;
      s -= static_cast<int>((*comps)[i].side1.size());
    }
  }
  return assemble(g, *comps, flip);
}

std::vector<BipartiteGraph> balanced_views(const Graph& g, std::size_t limit) {
  std::vector<BipartiteGraph> out;
  const int n = g.order();
  if (n % 2 != 0 || limit == 0) return out;
  const auto comps = colour_components(g);
  if (!comps || comps->empty()) return out;
  const std::size_t c = comps->size();
  std::vector<char> flip(c, 0);
  // Depth-first over orientations of components 1..c-1.
  auto rec = [&](auto&& self, std::size_t i, int x_size) -> void {
    if (out.size() >= limit) return;
    if (i == c) {
      if (2 * x_size == n) out.push_back(assemble(g, *comps, flip));
      return;
    }
    for (char f : {char{0}, char{1}}) {
      if (i == 0 && f == 1) continue;
      flip[i] = f;
      const auto& part = f ? (*comps)[i].side1 : (*comps)[i].side0;
      self(self, i + 1, x_size + static_cast<int>(part.size()));
    }
    flip[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace hamspec
