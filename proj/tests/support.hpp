#pragma once

// Independent reference implementations used to cross-check the library.
// None of these share code with src/.

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hamspec/bipartite.hpp"
#include "hamspec/graph.hpp"

namespace testsupport {

using hamspec::BipartiteGraph;
using hamspec::Graph;

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Graph with edge set given by the bits of `code` over pairs in the order
// (0,1),(0,2),...,(0,n-1),(1,2),...
inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int b = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++b) {
      if ((code >> b) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

inline BipartiteGraph bipartite_from_code(int side, std::uint64_t code) {
  BipartiteGraph b(side, side);
  for (int x = 0; x < side; ++x) {
    for (int y = 0; y < side; ++y) {
      if ((code >> (x * side + y)) & 1U) b.add_edge(x, y);
    }
  }
  return b;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline BipartiteGraph random_bipartite(int nx, int ny, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  BipartiteGraph b(nx, ny);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      if (coin(rng)) b.add_edge(x, y);
    }
  }
  return b;
}

inline bool connected_bfs(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<int> stack{0};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (g.has_edge(v, w) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

// Largest eigenvalue via Eigen's self-adjoint solver.
inline double eigen_lambda_max(const Graph& g, bool signless) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (g.has_edge(u, v)) m(u, v) = 1.0;
    }
    if (signless) m(u, u) = g.degree(u);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// Try every cyclic order with vertex 0 fixed first.
inline bool brute_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.front() > rest.back()) continue;
    bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
    for (std::size_t i = 1; ok && i < rest.size(); ++i) ok = g.has_edge(rest[i - 1], rest[i]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

inline bool brute_traceable(const Graph& g) {
  const int n = g.order();
  if (n == 1) return true;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    if (order.front() > order.back()) continue;
    bool ok = true;
    for (std::size_t i = 1; ok && i < order.size(); ++i) ok = g.has_edge(order[i - 1], order[i]);
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// g is isomorphic to a spanning subgraph of h: some bijection maps every edge
// of g onto an edge of h.
inline bool brute_spanning_subgraph(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (h.order() != n || g.edge_count() > h.edge_count()) return false;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  const auto edges = g.edges();
  do {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (!h.has_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// b maps into h by permutations of each side, optionally swapping sides.
inline bool brute_bipartite_spanning(const BipartiteGraph& b, const BipartiteGraph& h) {
  const int side = b.nx();
  if (b.ny() != side || h.nx() != side || h.ny() != side) return false;
  if (b.edge_count() > h.edge_count()) return false;
  const auto edges = b.edges();
  for (int swap = 0; swap < 2; ++swap) {
    std::vector<int> px(static_cast<std::size_t>(side));
    std::iota(px.begin(), px.end(), 0);
    do {
      std::vector<int> py(static_cast<std::size_t>(side));
      std::iota(py.begin(), py.end(), 0);
      do {
        bool ok = true;
        for (const auto& [x, y] : edges) {
          const int ix = px[static_cast<std::size_t>(x)];
          const int iy = py[static_cast<std::size_t>(y)];
          if (!(swap ? h.has_edge(iy, ix) : h.has_edge(ix, iy))) {
            ok = false;
            break;
          }
        }
        if (ok) return true;
      } while (std::next_permutation(py.begin(), py.end()));
    } while (std::next_permutation(px.begin(), px.end()));
  }
  return false;
}

inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  return g.edge_count() == h.edge_count() && brute_spanning_subgraph(g, h);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline long long binom(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace testsupport
