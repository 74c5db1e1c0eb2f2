#include "hamspec/transforms.hpp"

#include <string>

#include "hamspec/errors.hpp"

namespace hamspec {

namespace {

// Listed pairs first (validated, normalized), then every remaining pair of
// [0,a) x [0,b) in lexicographic order. For the one-sided case pairs are u < v.
std::vector<Edge> scan_list(int a, int b, bool same_side, std::span<const Edge> first) {
  std::vector<Edge> out;
  std::vector<char> seen(static_cast<std::size_t>(a) * static_cast<std::size_t>(b), 0);
  auto index = [&](int u, int v) { return static_cast<std::size_t>(u) * static_cast<std::size_t>(b) + static_cast<std::size_t>(v); };
  for (auto [u, v] : first) {
    if (same_side && u > v) std::swap(u, v);
    if (u < 0 || u >= a || v < 0 || v >= b || (same_side && u == v)) {
      throw GraphError("scan order pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (seen[index(u, v)]) continue;
    seen[index(u, v)] = 1;
    out.emplace_back(u, v);
  }
  for (int u = 0; u < a; ++u) {
    for (int v = same_side ? u + 1 : 0; v < b; ++v) {
      if (!seen[index(u, v)]) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace

ClosureResult bc_closure(const Graph& g) { return bc_closure(g, {}); }

ClosureResult bc_closure(const Graph& g, std::span<const Edge> scan_order) {
  const int n = g.order();
  ClosureResult out{g, 0};
  Graph& h = out.graph;
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  const std::vector<Edge> pairs = scan_list(n, n, true, scan_order);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [u, v] : pairs) {
      if (h.has_edge(u, v) || deg[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(v)] < n) continue;
      h.add_edge(u, v);
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
      ++out.rounds;
      changed = true;
    }
  }
  return out;
}

BipartiteClosureResult bipartite_closure(const BipartiteGraph& b) { return bipartite_closure(b, {}); }

BipartiteClosureResult bipartite_closure(const BipartiteGraph& b, std::span<const Edge> scan_order) {
  const int n = b.side();
  BipartiteClosureResult out{b, 0};
  BipartiteGraph& h = out.graph;
  std::vector<int> dx(static_cast<std::size_t>(n));
  std::vector<int> dy(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    dx[static_cast<std::size_t>(i)] = b.degree_x(i);
    dy[static_cast<std::size_t>(i)] = b.degree_y(i);
  }
  const std::vector<Edge> pairs = scan_list(n, n, false, scan_order);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [x, y] : pairs) {
      if (h.has_edge(x, y) || dx[static_cast<std::size_t>(x)] + dy[static_cast<std::size_t>(y)] < n + 1) continue;
      h.add_edge(x, y);
      ++dx[static_cast<std::size_t>(x)];
      ++dy[static_cast<std::size_t>(y)];
      ++out.rounds;
      changed = true;
    }
  }
  return out;
}

bool is_closed(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) >= n) return false;
    }
  }
  return true;
}

bool is_b_closed(const BipartiteGraph& b) {
  const int n = b.side();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!b.has_edge(x, y) && b.degree_x(x) + b.degree_y(y) >= n + 1) return false;
    }
  }
  return true;
}

Graph kelmans(const Graph& g, int u, int v) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("kelmans: vertex out of range");
  if (u == v) throw DomainError("kelmans: u and v must differ");
  Graph out = g;
  g.for_each_neighbor(u, [&](int w) {
    if (w == v || g.has_edge(v, w)) return;
    out.remove_edge(u, w);
    out.add_edge(v, w);
  });
  return out;
}

}  // namespace hamspec
