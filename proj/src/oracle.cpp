#include "hamspec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "hamspec/errors.hpp"

namespace hamspec {

std::string_view to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::found:
      return "found";
    case OracleStatus::not_found:
      return "not_found";
    case OracleStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

Mask all_bits(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

bool connected_within(const std::vector<Mask>& adj, Mask region) {
  if (region == 0) return true;
  Mask seen = region & (~region + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= region & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == region;
}

int components_within(const std::vector<Mask>& adj, Mask region) {
  int count = 0;
  while (region != 0) {
    Mask seen = region & (~region + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= region & ~seen;
      seen |= next;
      frontier = next;
    }
    region &= ~seen;
    ++count;
  }
  return count;
}

// A Hamiltonian graph is 1-tough: deleting any S leaves at most |S|
// components. Cheap candidates: every neighbourhood N(v).
bool has_scattering_neighbourhood(const std::vector<Mask>& adj, int n) {
  for (int v = 0; v < n; ++v) {
    const Mask s = adj[static_cast<std::size_t>(v)];
    if (components_within(adj, all_bits(n) & ~s) > std::popcount(s)) return true;
  }
  return false;
}

// Depth-first extension of a path from `start`. The cycle's two neighbours of
// start are ordered: the second path vertex is the smaller one, so the last
// vertex must lie in `closing_` (neighbours of start above it).
class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::uint64_t budget) : n_(g.order()), budget_(budget) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.mask(v);
  }

  OracleStatus run() {
    if (n_ < 3) return OracleStatus::not_found;
    int start = 0;
    for (int v = 0; v < n_; ++v) {
      const int d = std::popcount(adj_[static_cast<std::size_t>(v)]);
      if (d < 2) return OracleStatus::not_found;
      if (d < std::popcount(adj_[static_cast<std::size_t>(start)])) start = v;
    }
    if (!connected_within(adj_, all_bits(n_))) return OracleStatus::not_found;
    if (has_scattering_neighbourhood(adj_, n_)) return OracleStatus::not_found;

    const Mask start_nbrs = adj_[static_cast<std::size_t>(start)];
    for (Mask a_bits = start_nbrs; a_bits != 0; a_bits &= a_bits - 1) {
      const int a = std::countr_zero(a_bits);
      closing_ = start_nbrs & ~all_bits(a + 1);
      if (closing_ == 0) break;
      path_.assign({start, a});
      if (extend(a, all_bits(n_) & ~bit(start) & ~bit(a))) return OracleStatus::found;
      if (exhausted_) return OracleStatus::budget_exceeded;
    }
    return OracleStatus::not_found;
  }

  const std::vector<int>& path() const { return path_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool extend(int cur, Mask unvisited) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (unvisited == 0) return (closing_ >> cur) & 1U;
    if ((adj_[static_cast<std::size_t>(cur)] & unvisited) == 0 || (closing_ & unvisited) == 0) return false;

    const Mask usable = unvisited | bit(cur);
    const bool last_step = std::has_single_bit(unvisited);
    int forced = -1;
    int forced_to_cur = 0;
    int forced_to_start = 0;
    for (Mask u_bits = unvisited; u_bits != 0; u_bits &= u_bits - 1) {
      const int u = std::countr_zero(u_bits);
      const Mask avail = adj_[static_cast<std::size_t>(u)] & usable;
      const bool to_start = (closing_ >> u) & 1U;
      const int options = std::popcount(avail) + (to_start ? 1 : 0);
      if (options < 2) return false;
      if (options > 2) continue;
      const bool to_cur = (avail >> cur) & 1U;
      if (to_cur && to_start && !last_step) return false;
      if (to_cur) {
        ++forced_to_cur;
        forced = u;
      }
      if (to_start) ++forced_to_start;
    }
    if (forced_to_cur > 1 || forced_to_start > 1) return false;
    if (!connected_within(adj_, unvisited)) return false;

    const Mask candidates = forced >= 0 ? bit(forced) : adj_[static_cast<std::size_t>(cur)] & unvisited;
    for (Mask c = candidates; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      path_.push_back(v);
      if (extend(v, unvisited & ~bit(v))) return true;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  Mask closing_ = 0;
  std::vector<Mask> adj_;
  std::vector<int> path_;
};

// reach[S] (S containing vertex 0) holds the end vertices v of paths that
// start at 0 and cover exactly S.
bool cycle_by_dp(const Graph& g, std::vector<int>& witness) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<Mask> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.mask(v);
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::uint32_t> reach(full + 1, 0);
  reach[1] = 1;
  for (std::size_t s = 1; s <= full; s += 2) {
    for (Mask ends = reach[s]; ends != 0; ends &= ends - 1) {
      const int v = std::countr_zero(ends);
      for (Mask next = adj[static_cast<std::size_t>(v)] & ~static_cast<Mask>(s); next != 0; next &= next - 1) {
        const int w = std::countr_zero(next);
        reach[s | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  const Mask closers = reach[full] & adj[0];
  if (closers == 0) return false;
  witness.assign(static_cast<std::size_t>(n), 0);
  std::size_t s = full;
  int v = std::countr_zero(closers);
  for (int pos = n - 1; pos >= 1; --pos) {
    witness[static_cast<std::size_t>(pos)] = v;
    s &= ~(std::size_t{1} << v);
    const Mask prev = reach[s] & adj[static_cast<std::size_t>(v)];
    v = std::countr_zero(prev);
  }
  witness[0] = 0;
  return true;
}

}  // namespace

OracleResult is_hamiltonian(const Graph& g, const OracleOptions& opts) {
  if (g.order() > 64) throw DomainError("Hamilton oracle supports at most 64 vertices");
  OracleResult out;
  CycleSearch search(g, opts.node_budget);
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == OracleStatus::found) {
    out.witness = search.path();
  } else if (out.status == OracleStatus::budget_exceeded && opts.dp_fallback && g.order() <= std::min(opts.dp_max_order, 24)) {
    out.used_dp = true;
    out.status = cycle_by_dp(g, out.witness) ? OracleStatus::found : OracleStatus::not_found;
  }
  return out;
}

OracleResult is_hamiltonian(const BipartiteGraph& b, const OracleOptions& opts) {
  return is_hamiltonian(b.to_graph(), opts);
}

OracleResult is_traceable(const Graph& g, const OracleOptions& opts) {
  const int n = g.order();
  if (n == 0) throw DomainError("traceability of the 0-vertex graph is undefined");
  if (n > 63) throw DomainError("Hamilton path oracle supports at most 63 vertices");
  if (n == 1) return {OracleStatus::found, {0}, 0, false};
  OracleResult out = is_hamiltonian(join(g, empty_graph(1)), opts);
  if (out.found()) {
    const auto apex = static_cast<std::size_t>(std::find(out.witness.begin(), out.witness.end(), n) - out.witness.begin());
    std::vector<int> path;
    for (std::size_t i = 1; i < out.witness.size(); ++i) path.push_back(out.witness[(apex + i) % out.witness.size()]);
    out.witness = std::move(path);
  }
  return out;
}

namespace {

bool covers_once(const Graph& g, std::span<const int> order) {
  if (order.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<char> seen(order.size(), 0);
  for (int v : order) {
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!g.has_edge(order[i - 1], order[i])) return false;
  }
  return true;
}

}  // namespace

bool is_hamilton_cycle(const Graph& g, std::span<const int> order) {
  return g.order() >= 3 && covers_once(g, order) && g.has_edge(order.back(), order.front());
}

bool is_hamilton_path(const Graph& g, std::span<const int> order) { return g.order() >= 1 && covers_once(g, order); }

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.order()) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.mask(v);
  }

  int run() {
    expand(all_bits(n_), 0);
    return best_;
  }

 private:
  void expand(Mask candidates, int size) {
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy colouring: vertices with colour c can extend the clique by at
    // most c more vertices.
    std::vector<int> order;
    std::vector<int> colour;
    int c = 0;
    for (Mask left = candidates; left != 0;) {
      ++c;
      for (Mask avail = left; avail != 0;) {
        const int v = std::countr_zero(avail);
        avail &= ~bit(v) & ~adj_[static_cast<std::size_t>(v)];
        left &= ~bit(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best_) return;
      const int v = order[i];
      expand(candidates & adj_[static_cast<std::size_t>(v)], size + 1);
      candidates &= ~bit(v);
    }
  }

  int n_;
  int best_ = 0;
  std::vector<Mask> adj_;
};

Mask first_word(const VertexSet& s) { return s.words().empty() ? 0 : s.words()[0]; }

bool extend_biclique(const std::vector<Mask>& y_rows, int s, int t, std::size_t from, int chosen, Mask common) {
  if (chosen == t) return std::popcount(common) >= s;
  for (std::size_t y = from; y < y_rows.size(); ++y) {
    if (static_cast<int>(y_rows.size() - y) < t - chosen) return false;
    const Mask next = common & y_rows[y];
    if (std::popcount(next) < s) continue;
    if (extend_biclique(y_rows, s, t, y + 1, chosen + 1, next)) return true;
  }
  return false;
}

}  // namespace

int clique_number(const Graph& g) {
  if (g.order() == 0) throw DomainError("clique number of the 0-vertex graph is undefined");
  if (g.order() > 64) throw DomainError("clique search supports at most 64 vertices");
  return CliqueSearch(g).run();
}

bool contains_biclique(const BipartiteGraph& b, int s, int t) {
  if (s < 0 || t < 0 || s > b.nx() || t > b.ny()) throw DomainError("biclique size exceeds a side");
  if (b.nx() > 64 || b.ny() > 64) throw DomainError("biclique search supports sides of at most 64");
  if (s == 0 || t == 0) return true;
  std::vector<Mask> y_rows;
  for (int y = 0; y < b.ny(); ++y) {
    if (b.degree_y(y) >= s) y_rows.push_back(first_word(b.y_neighbors(y)));
  }
  return extend_biclique(y_rows, s, t, 0, 0, all_bits(b.nx()));
}

}  // namespace hamspec
