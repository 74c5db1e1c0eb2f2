#include "hamspec/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "hamspec/errors.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/isomorphism.hpp"
#include "hamspec/oracle.hpp"
#include "hamspec/spectral.hpp"

namespace hamspec {

namespace {

struct NamedFamily {
  Family family;
  std::string_view name;
};

constexpr std::array<NamedFamily, 12> kNames{{
    {Family::L, "L"},
    {Family::N, "N"},
    {Family::barL, "barL"},
    {Family::barN, "barN"},
    {Family::H, "H"},
    {Family::B, "B"},
    {Family::Bset, "Bset"},
    {Family::Gamma1, "Gamma1"},
    {Family::Gamma2, "Gamma2"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::complete_split, "complete_split"},
}};

bool has_k(Family f) {
  return f == Family::L || f == Family::N || f == Family::barL || f == Family::barN || f == Family::B ||
         f == Family::Bset || f == Family::complete_bipartite || f == Family::complete_split;
}

bool has_n(Family f) { return f != Family::Gamma1 && f != Family::Gamma2; }

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("family spec: bad integer for " + std::string(key) + ": \"" + std::string(value) + "\"");
  }
  return out;
}

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// Raw Gamma graphs, built without the self-check.
BipartiteGraph gamma_graph(bool with_x1y1) {
  BipartiteGraph b(4, 4);
  for (int i = 1; i < 4; ++i) {
    b.add_edge(i, i);
    b.add_edge(0, i);
    b.add_edge(i, 0);
  }
  if (with_x1y1) b.add_edge(0, 0);
  return b;
}

// The figure is the only source for these two graphs; their quasi-complements
// must be C6 + K2 and C6 + 2K1 with rho = 2, q = 4, and neither graph is
// Hamiltonian.
void check_gamma_decoding() {
  static const bool ok = [] {
    const Graph c6 = cycle_graph(6);
    const std::array<Graph, 2> expected{disjoint_union(c6, complete_graph(2)), disjoint_union(c6, empty_graph(2))};
    for (int i = 0; i < 2; ++i) {
      const BipartiteGraph gamma = gamma_graph(i == 1);
      const Graph hat = quasi_complement(gamma).to_graph();
      if (!is_isomorphic(hat, expected[static_cast<std::size_t>(i)])) return false;
      if (std::abs(spectral_radius(hat).value - 2.0) > kTolerance) return false;
      if (std::abs(q_radius(hat).value - 4.0) > kTolerance) return false;
      if (is_hamiltonian(gamma.to_graph()).status != OracleStatus::not_found) return false;
    }
    return true;
  }();
  if (!ok) throw std::logic_error("Gamma1/Gamma2 edge lists fail their spectral self-check");
}

Graph h_inner(const FamilySpec& spec) {
  const int s = (spec.n + 1) / 2 - 1;
  if (!spec.inner) return empty_graph(s);
  if (spec.inner->order() != s) {
    throw DomainError("H: inner graph must have ceil(n/2)-1 = " + std::to_string(s) + " vertices");
  }
  return *spec.inner;
}

// Core of a Bset member as cross edges (x in X_H, y in Y_H).
std::vector<Edge> bset_core(const FamilySpec& spec) {
  std::vector<Edge> out;
  if (!spec.inner) return out;
  const Graph& h = *spec.inner;
  if (h.order() != spec.n) throw DomainError("Bset: inner graph must have n vertices (k on X_H, n-k on Y_H)");
  for (const auto& [u, v] : h.edges()) {
    if (u >= spec.k || v < spec.k) throw DomainError("Bset: inner edge inside a side of the core");
    out.emplace_back(u, v - spec.k);
  }
  return out;
}

BipartiteGraph bset_graph(int n, int k, std::span<const Edge> core) {
  BipartiteGraph b(n, n);
  for (const auto& [x, y] : core) b.add_edge(x, y);
  for (int x = 0; x < k; ++x) {
    for (int y = n - k; y < n; ++y) b.add_edge(x, y);
  }
  for (int x = k; x < n; ++x) {
    for (int y = 0; y < n - k; ++y) b.add_edge(x, y);
  }
  return b;
}

// Some k vertices of Y whose neighbourhoods all lie inside one k-set of X.
// Equivalent to the oriented Bset shape with Y_add = those vertices.
bool bset_oriented(const BipartiteGraph& b, int k) {
  const int n = b.side();
  for (int y = 0; y < n; ++y) {
    if (b.degree_y(y) != k) continue;
    const VertexSet xh = b.y_neighbors(y);
    VertexSet yadd(n);
    for (int y2 = 0; y2 < n; ++y2) {
      if (b.y_neighbors(y2) == xh) yadd.insert(y2);
    }
    if (yadd.size() != k) continue;
    VertexSet yh = VertexSet::full(n);
    yh -= yadd;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!xh.contains(x)) ok = b.x_neighbors(x) == yh;
    }
    if (ok) return true;
  }
  return false;
}

bool is_bset_member(const BipartiteGraph& b, int n, int k) {
  if (!b.balanced() || b.nx() != n || k < 1 || 2 * k > n) return false;
  return bset_oriented(b, k) || bset_oriented(b.swapped(), k);
}

bool is_h_member(const Graph& g, int n) {
  if (g.order() != n || n < 2) return false;
  const int s = (n + 1) / 2 - 1;
  const int t = n / 2 + 1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != s) continue;
    const VertexSet sset = g.neighbors(v);
    bool ok = true;
    int independent = 0;
    for (int w = 0; w < n && ok; ++w) {
      if (sset.contains(w)) continue;
      ++independent;
      ok = g.neighbors(w) == sset;
    }
    if (ok && independent == t) return true;
  }
  return false;
}

// Choose `count` of the candidate rows (neighbourhood masks) so that the union
// of their neighbourhoods has at most `limit` vertices. With `independent`,
// the chosen vertices must also be pairwise nonadjacent.
bool small_union(const std::vector<std::pair<int, Mask>>& cand, std::size_t from, int count, int limit, Mask chosen,
                 Mask uni, bool independent) {
  if (count == 0) return true;
  for (std::size_t i = from; i < cand.size(); ++i) {
    if (static_cast<int>(cand.size() - i) < count) return false;
    const auto& [v, row] = cand[i];
    if (independent && ((uni >> v) & 1U)) continue;
    const Mask next = uni | row;
    if (std::popcount(next) > limit) continue;
    if (small_union(cand, i + 1, count - 1, limit, chosen | bit(v), next, independent)) return true;
  }
  return false;
}

bool independent_with_small_neighbourhood(const Graph& g, int size, int limit) {
  std::vector<std::pair<int, Mask>> cand;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= limit) cand.emplace_back(v, g.mask(v));
  }
  return small_union(cand, 0, size, limit, 0, 0, true);
}

bool components_split(const std::vector<int>& sizes, int target) {
  std::vector<char> reach(static_cast<std::size_t>(target + 1), 0);
  reach[0] = 1;
  for (int s : sizes) {
    for (int t = target; t >= s; --t) {
      if (reach[static_cast<std::size_t>(t - s)]) reach[static_cast<std::size_t>(t)] = 1;
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

std::vector<int> component_sizes(const Graph& g, Mask region) {
  std::vector<int> sizes;
  while (region != 0) {
    Mask seen = region & (~region + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= g.mask(std::countr_zero(f));
      next &= region & ~seen;
      seen |= next;
      frontier = next;
    }
    sizes.push_back(std::popcount(seen));
    region &= ~seen;
  }
  return sizes;
}

Mask all_bits(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

bool b_subgraph_oriented(const BipartiteGraph& b, int k) {
  std::vector<std::pair<int, Mask>> cand;
  for (int y = 0; y < b.ny(); ++y) {
    if (b.degree_y(y) <= k) {
      const VertexSet row = b.y_neighbors(y);
      cand.emplace_back(y, row.words().empty() ? 0 : row.words()[0]);
    }
  }
  return small_union(cand, 0, k, k, 0, 0, false);
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [family, n] : kNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

bool is_bipartite_family(Family f) {
  return f == Family::B || f == Family::Bset || f == Family::Gamma1 || f == Family::Gamma2 ||
         f == Family::complete_bipartite;
}

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto family = family_from_string(name);
  if (!family) throw DomainError("family spec: unknown family \"" + std::string(name) + "\"");
  FamilySpec spec;
  spec.family = *family;
  bool seen_n = false;
  bool seen_k = false;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw DomainError("family spec: expected key=value, got \"" + std::string(item) + "\"");
      const std::string_view key = item.substr(0, eq);
      const std::string_view value = item.substr(eq + 1);
      if (key == "n") {
        spec.n = parse_int(key, value);
        seen_n = true;
      } else if (key == "k") {
        spec.k = parse_int(key, value);
        seen_k = true;
      } else if (key == "inner") {
        spec.inner = decode_graph6(value);
      } else {
        throw DomainError("family spec: unknown key \"" + std::string(key) + "\"");
      }
    }
  }
  if (has_n(spec.family) && !seen_n) throw DomainError("family spec: " + std::string(name) + " needs n");
  if (has_k(spec.family) && !seen_k) throw DomainError("family spec: " + std::string(name) + " needs k");
  if (spec.family == Family::Gamma1 || spec.family == Family::Gamma2) {
    spec.n = 4;
    spec.k = 2;
  }
  validate(spec);
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(hamspec::to_string(family));
  if (!has_n(family)) return out;
  out += ":n=" + std::to_string(n);
  if (has_k(family)) out += ",k=" + std::to_string(k);
  if (inner) out += ",inner=" + encode_graph6(*inner);
  return out;
}

void validate(const FamilySpec& spec) {
  const int n = spec.n;
  const int k = spec.k;
  auto fail = [&](const char* rule) {
    throw DomainError(std::string(hamspec::to_string(spec.family)) + ": " + rule + " (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  };
  if (spec.inner && spec.family != Family::H && spec.family != Family::Bset) fail("only H and Bset take an inner graph");
  switch (spec.family) {
    case Family::L:
    case Family::N:
    case Family::complete_split:
      if (k < 1 || 2 * k + 1 > n) fail("needs 1 <= k <= (n-1)/2");
      break;
    case Family::barL:
    case Family::barN:
      if (k < 0 || 2 * k + 2 > n) fail("needs 0 <= k <= n/2-1");
      break;
    case Family::H:
      if (n < 2) fail("needs n >= 2");
      h_inner(spec);
      break;
    case Family::B:
    case Family::Bset:
      if (k < 1 || 2 * k > n) fail("needs 1 <= k <= n/2");
      if (spec.family == Family::Bset) bset_core(spec);
      break;
    case Family::Gamma1:
    case Family::Gamma2:
      break;
    case Family::complete:
      if (n < 1) fail("needs n >= 1");
      break;
    case Family::complete_bipartite:
      if (n < 0 || k < 0 || n + k < 1) fail("needs sides >= 0 and at least one vertex");
      break;
  }
}

BipartiteGraph construct_bipartite(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::B: {
      std::vector<Edge> core;
      for (int x = 0; x < spec.k; ++x) {
        for (int y = 0; y < spec.n - spec.k; ++y) core.emplace_back(x, y);
      }
      return bset_graph(spec.n, spec.k, core);
    }
    case Family::Bset:
      return bset_graph(spec.n, spec.k, bset_core(spec));
    case Family::Gamma1:
    case Family::Gamma2:
      check_gamma_decoding();
      return gamma_graph(spec.family == Family::Gamma2);
    case Family::complete_bipartite:
      return complete_bipartite(spec.n, spec.k);
    default:
      throw DomainError(std::string(to_string(spec.family)) + " is not a bipartite family");
  }
}

Graph construct(const FamilySpec& spec) {
  validate(spec);
  const int n = spec.n;
  const int k = spec.k;
  switch (spec.family) {
    case Family::L:
      return join(complete_graph(1), disjoint_union(complete_graph(k), complete_graph(n - k - 1)));
    case Family::N:
      return join(complete_graph(k), disjoint_union(complete_graph(n - 2 * k), empty_graph(k)));
    case Family::barL:
      return disjoint_union(complete_graph(k + 1), complete_graph(n - k - 1));
    case Family::barN:
      return join(complete_graph(k), disjoint_union(complete_graph(n - 2 * k - 1), empty_graph(k + 1)));
    case Family::H:
      return join(h_inner(spec), empty_graph(n / 2 + 1));
    case Family::complete:
      return complete_graph(n);
    case Family::complete_split:
      return join(complete_graph(k), empty_graph(n - 2 * k));
    default:
      return construct_bipartite(spec).to_graph();
  }
}

bool recognize(const Graph& g, const FamilySpec& spec) {
  try {
    validate(spec);
  } catch (const DomainError&) {
    return false;
  }
  switch (spec.family) {
    case Family::H:
      return is_h_member(g, spec.n);
    case Family::Bset: {
      if (g.order() != 2 * spec.n) return false;
      for (const auto& view : balanced_views(g)) {
        if (is_bset_member(view, spec.n, spec.k)) return true;
      }
      return false;
    }
    default: {
      const Graph ref = construct(spec);
      return g.order() == ref.order() && is_isomorphic(g, ref);
    }
  }
}

bool recognize(const BipartiteGraph& b, const FamilySpec& spec) {
  try {
    validate(spec);
  } catch (const DomainError&) {
    return false;
  }
  switch (spec.family) {
    case Family::Bset:
      return is_bset_member(b, spec.n, spec.k);
    case Family::B:
      return is_bset_member(b, spec.n, spec.k) &&
             b.edge_count() == spec.n * (spec.n - spec.k) + spec.k * spec.k;
    default:
      return recognize(b.to_graph(), spec);
  }
}

bool spanning_subgraph_of(const Graph& g, Family family, int n, int k) {
  if (family == Family::B) {
    if (g.order() != 2 * n) throw DomainError("spanning_subgraph_of: B needs order 2n");
    for (const auto& view : balanced_views(g)) {
      if (spanning_subgraph_of(view, family, n, k)) return true;
    }
    return false;
  }
  if (g.order() != n) throw DomainError("spanning_subgraph_of: graph order differs from n");
  if (n > 64) throw DomainError("spanning_subgraph_of supports at most 64 vertices");
  validate(FamilySpec{family, n, k, std::nullopt});
  switch (family) {
    case Family::N:
      return independent_with_small_neighbourhood(g, k, k);
    case Family::barN:
      return independent_with_small_neighbourhood(g, k + 1, k);
    case Family::barL:
      return components_split(component_sizes(g, all_bits(n)), k + 1);
    case Family::L:
      for (int v = 0; v < n; ++v) {
        if (components_split(component_sizes(g, all_bits(n) & ~bit(v)), k)) return true;
      }
      return false;
    default:
      throw DomainError("spanning_subgraph_of: unsupported family " + std::string(to_string(family)));
  }
}

bool spanning_subgraph_of(const BipartiteGraph& b, Family family, int n, int k) {
  if (family != Family::B) return spanning_subgraph_of(b.to_graph(), family, n, k);
  validate(FamilySpec{family, n, k, std::nullopt});
  if (!b.balanced() || b.nx() != n) throw DomainError("spanning_subgraph_of: B needs a balanced graph with side n");
  if (n > 64) throw DomainError("spanning_subgraph_of supports sides of at most 64");
  return b_subgraph_oriented(b, k) || b_subgraph_oriented(b.swapped(), k);
}

}  // namespace hamspec
