#include "hamspec/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace hamspec {

namespace {

// Colours for the 2n vertices of g (first n) and h (last n). Returns false as
// soon as the colour histograms of the two graphs diverge.
bool refine_jointly(const Graph& g, const Graph& h, std::vector<int>& colour) {
  const int n = g.order();
  auto graph_of = [&](int v) -> const Graph& { return v < n ? g : h; };
  auto local = [&](int v) { return v < n ? v : v - n; };
  auto offset = [&](int v) { return v < n ? 0 : n; };

  colour.assign(static_cast<std::size_t>(2 * n), 0);
  for (int v = 0; v < 2 * n; ++v) colour[static_cast<std::size_t>(v)] = graph_of(v).degree(local(v));

  int classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < 2 * n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = colour[static_cast<std::size_t>(v)];
      graph_of(v).for_each_neighbor(local(v), [&](int w) { s.second.push_back(colour[static_cast<std::size_t>(w + offset(v))]); });
      std::sort(s.second.begin(), s.second.end());
      ids.emplace(s, 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> count_g(static_cast<std::size_t>(next), 0);
    std::vector<int> count_h(static_cast<std::size_t>(next), 0);
    for (int v = 0; v < 2 * n; ++v) {
      const int c = ids[sig[static_cast<std::size_t>(v)]];
      colour[static_cast<std::size_t>(v)] = c;
      (v < n ? count_g : count_h)[static_cast<std::size_t>(c)]++;
    }
    if (count_g != count_h) return false;
    if (next == classes) return true;
    classes = next;
  }
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, std::vector<int> colour)
      : g_(g), h_(h), n_(g.order()), colour_(std::move(colour)) {
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
    build_order();
  }

  std::optional<std::vector<int>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  int colour_g(int v) const { return colour_[static_cast<std::size_t>(v)]; }
  int colour_h(int v) const { return colour_[static_cast<std::size_t>(v + n_)]; }

  void build_order() {
    std::vector<int> class_size(static_cast<std::size_t>(2 * n_ + 1), 0);
    for (int v = 0; v < n_; ++v) class_size[static_cast<std::size_t>(colour_g(v))]++;
    std::vector<char> placed(static_cast<std::size_t>(n_), 0);
    std::vector<int> mapped_nbrs(static_cast<std::size_t>(n_), 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best == -1) {
          best = v;
          continue;
        }
        const auto key = [&](int x) {
          return std::make_pair(-mapped_nbrs[static_cast<std::size_t>(x)], class_size[static_cast<std::size_t>(colour_g(x))]);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order_.push_back(best);
      g_.for_each_neighbor(best, [&](int w) { mapped_nbrs[static_cast<std::size_t>(w)]++; });
    }
  }

  bool consistent(int u, int c, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const int w = order_[i];
      if (g_.has_edge(u, w) != h_.has_edge(c, map_[static_cast<std::size_t>(w)])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (int c = 0; c < n_; ++c) {
      if (used_[static_cast<std::size_t>(c)] || colour_h(c) != colour_g(u)) continue;
      if (!consistent(u, c, depth)) continue;
      map_[static_cast<std::size_t>(u)] = c;
      used_[static_cast<std::size_t>(c)] = 1;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(c)] = 0;
      map_[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> dg;
  std::vector<int> dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  std::vector<int> colour;
  if (!refine_jointly(g, h, colour)) return std::nullopt;
  return Matcher(g, h, std::move(colour)).run();
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace hamspec
