#include "hamspec/graph6.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "hamspec/errors.hpp"

namespace hamspec {

namespace {

constexpr int kBias = 63;
constexpr long long kShortMax = 62;
constexpr long long kMediumMax = 258047;

void append_size(std::string& out, long long n) {
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  out.push_back('~');
  int groups = 3;
  if (n > kMediumMax) {
    out.push_back('~');
    groups = 6;
  }
  for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3F) + kBias));
}

int sextet(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw Graph6Error("byte value " + std::to_string(c) + " outside 63..126", pos);
  return c - kBias;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = sextet(text, 0);
    pos = 1;
  } else {
    int groups = 3;
    pos = 1;
    if (text.size() > 1 && text[1] == '~') {
      groups = 6;
      pos = 2;
    }
    if (text.size() < pos + static_cast<std::size_t>(groups)) {
      throw Graph6Error("truncated size header", text.size());
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | sextet(text, pos++);
  }
  if (n > 100000) throw Graph6Error("graph order " + std::to_string(n) + " too large", 0);
  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw Graph6Error("length " + std::to_string(text.size()) + " does not match n=" + std::to_string(n) +
                          " (expected " + std::to_string(expected) + ")",
                      std::min(text.size(), expected));
  }
  for (std::size_t p = pos; p < text.size(); ++p) sextet(text, p);

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      const int bit = 5 - static_cast<int>(k % 6);
      if ((sextet(text, byte) >> bit) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int pad = static_cast<int>(6 - bits % 6);
    if ((sextet(text, text.size() - 1) & ((1 << pad) - 1)) != 0) {
      throw Graph6Error("nonzero padding bits", text.size() - 1);
    }
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    constexpr std::string_view header = ">>graph6<<";
    if (view.starts_with(header)) view.remove_prefix(header.size());
    if (view.empty()) continue;
    try {
      out.push_back(decode_graph6(view));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw GraphError("edge list: bad header, expected \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace hamspec
