#include "hamspec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "hamspec/errors.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/isomorphism.hpp"
#include "hamspec/spectral.hpp"
#include "hamspec/transforms.hpp"

namespace hamspec {

namespace {

long long choose2(long long m) { return m < 2 ? 0 : m * (m - 1) / 2; }

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string format_p(double p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int b = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++b) {
      if ((code >> b) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

BipartiteGraph bipartite_from_code(int side, std::uint64_t code) {
  BipartiteGraph b(side, side);
  for (int x = 0; x < side; ++x) {
    for (int y = 0; y < side; ++y) {
      if ((code >> (x * side + y)) & 1U) b.add_edge(x, y);
    }
  }
  return b;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string_view to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::all_labeled: return "all_labeled";
    case SpaceKind::labeled_min_degree: return "labeled_min_degree";
    case SpaceKind::balanced_bipartite_labeled: return "balanced_bipartite_labeled";
    case SpaceKind::graph6_file: return "graph6_file";
    case SpaceKind::random_model: return "random_model";
  }
  return "?";
}

std::string_view to_string(RandomModel m) { return m == RandomModel::uniform_gnp ? "uniform_gnp" : "bipartite_gnp"; }

SearchSpace SearchSpace::all_labeled(int n) {
  SearchSpace s;
  s.kind = SpaceKind::all_labeled;
  s.n = n;
  return s;
}

SearchSpace SearchSpace::labeled_min_degree(int n, int k) {
  SearchSpace s;
  s.kind = SpaceKind::labeled_min_degree;
  s.n = n;
  s.min_degree = k;
  return s;
}

SearchSpace SearchSpace::balanced_bipartite_labeled(int side, int min_degree) {
  SearchSpace s;
  s.kind = SpaceKind::balanced_bipartite_labeled;
  s.n = side;
  s.min_degree = min_degree;
  return s;
}

SearchSpace SearchSpace::graph6_file(std::string path) {
  SearchSpace s;
  s.kind = SpaceKind::graph6_file;
  s.path = std::move(path);
  return s;
}

SearchSpace SearchSpace::gnp(int n, double p, std::uint64_t samples, std::uint64_t seed) {
  SearchSpace s;
  s.kind = SpaceKind::random_model;
  s.model = RandomModel::uniform_gnp;
  s.n = n;
  s.p_lo = s.p_hi = p;
  s.samples = samples;
  s.seed = seed;
  return s;
}

SearchSpace SearchSpace::bipartite_gnp(int side, double p, std::uint64_t samples, std::uint64_t seed) {
  SearchSpace s = gnp(side, p, samples, seed);
  s.model = RandomModel::bipartite_gnp;
  return s;
}

bool SearchSpace::bipartite() const {
  return kind == SpaceKind::balanced_bipartite_labeled ||
         (kind == SpaceKind::random_model && model == RandomModel::bipartite_gnp);
}

std::string SearchSpace::to_string() const {
  std::string out;
  switch (kind) {
    case SpaceKind::all_labeled:
      out = "all_labeled(n=" + std::to_string(n);
      break;
    case SpaceKind::labeled_min_degree:
      out = "labeled_min_degree(n=" + std::to_string(n);
      break;
    case SpaceKind::balanced_bipartite_labeled:
      out = "balanced_bipartite_labeled(side=" + std::to_string(n);
      break;
    case SpaceKind::graph6_file:
      out = "graph6_file(" + path;
      break;
    case SpaceKind::random_model: {
      const std::string p = p_lo == p_hi ? format_p(p_lo) : format_p(p_lo) + ".." + format_p(p_hi);
      out = std::string(hamspec::to_string(model)) + (model == RandomModel::uniform_gnp ? "(n=" : "(side=") +
            std::to_string(n) + ",p=" + p + ",samples=" + std::to_string(samples) + ",seed=" + std::to_string(seed);
      break;
    }
  }
  if (min_degree > 0) out += ",min_degree=" + std::to_string(min_degree);
  return out + ")";
}

Enumeration::Enumeration(const SearchSpace& space) : space_(space) {
  if (space.min_degree < 0) throw DomainError("min_degree must be non-negative");
  switch (space.kind) {
    case SpaceKind::all_labeled:
    case SpaceKind::labeled_min_degree:
      if (space.n < 1) throw DomainError("labeled spaces need n >= 1");
      if (space.n > kMaxLabeledOrder) {
        throw DomainError("all_labeled is capped at n = " + std::to_string(kMaxLabeledOrder) +
                          "; use graph6_file mode with a pre-generated list for larger orders");
      }
      size_ = std::uint64_t{1} << choose2(space.n);
      break;
    case SpaceKind::balanced_bipartite_labeled:
      if (space.n < 1) throw DomainError("bipartite spaces need side >= 1");
      if (space.n > kMaxBipartiteSide) {
        throw DomainError("balanced_bipartite_labeled is capped at side " + std::to_string(kMaxBipartiteSide) +
                          "; use graph6_file mode with a pre-generated list for larger sides");
      }
      size_ = std::uint64_t{1} << (space.n * space.n);
      break;
    case SpaceKind::graph6_file: {
      std::ifstream in(space.path);
      if (!in) throw DomainError("cannot open graph6 file " + space.path);
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (!line.empty()) lines_.push_back(line);
      }
      size_ = lines_.size();
      break;
    }
    case SpaceKind::random_model:
      if (!(0.0 <= space.p_lo && space.p_lo <= space.p_hi && space.p_hi <= 1.0)) {
        throw DomainError("random model needs 0 <= p_lo <= p_hi <= 1");
      }
      if (space.n < 1 || space.n > 64) throw DomainError("random model order must be in 1..64");
      size_ = space.samples;
      break;
  }
}

std::optional<Graph> Enumeration::graph(std::uint64_t i) const {
  if (i >= size_) throw DomainError("enumeration index out of range");
  std::optional<Graph> g;
  switch (space_.kind) {
    case SpaceKind::all_labeled:
    case SpaceKind::labeled_min_degree:
      g = graph_from_code(space_.n, i);
      break;
    case SpaceKind::graph6_file:
      try {
        g = decode_graph6(lines_[i]);
      } catch (const Graph6Error& e) {
        throw DomainError(space_.path + " entry " + std::to_string(i + 1) + ": " + e.what());
      }
      break;
    case SpaceKind::random_model:
      if (space_.model == RandomModel::uniform_gnp) {
        std::mt19937_64 rng(splitmix64(space_.seed + i));
        const double p = space_.p_lo + (space_.p_hi - space_.p_lo) * unit(rng);
        g = Graph(space_.n);
        for (int u = 0; u < space_.n; ++u) {
          for (int v = u + 1; v < space_.n; ++v) {
            if (unit(rng) < p) g->add_edge(u, v);
          }
        }
        break;
      }
      [[fallthrough]];
    case SpaceKind::balanced_bipartite_labeled: {
      auto b = bipartite(i);
      if (!b) return std::nullopt;
      return b->to_graph();
    }
  }
  if (space_.min_degree > 0 && min_degree(*g) < space_.min_degree) return std::nullopt;
  return g;
}

std::optional<BipartiteGraph> Enumeration::bipartite(std::uint64_t i) const {
  if (!space_.bipartite()) throw DomainError("not a bipartite space");
  if (i >= size_) throw DomainError("enumeration index out of range");
  std::optional<BipartiteGraph> b;
  if (space_.kind == SpaceKind::balanced_bipartite_labeled) {
    b = bipartite_from_code(space_.n, i);
  } else {
    std::mt19937_64 rng(splitmix64(space_.seed + i));
    const double p = space_.p_lo + (space_.p_hi - space_.p_lo) * unit(rng);
    b = BipartiteGraph(space_.n, space_.n);
    for (int x = 0; x < space_.n; ++x) {
      for (int y = 0; y < space_.n; ++y) {
        if (unit(rng) < p) b->add_edge(x, y);
      }
    }
  }
  if (space_.min_degree > 0 && b->min_degree() < space_.min_degree) return std::nullopt;
  return b;
}

std::vector<Graph> enumerate_graphs(const SearchSpace& space) {
  const Enumeration e(space);
  std::vector<Graph> out;
  for (std::uint64_t i = 0; i < e.size(); ++i) {
    if (auto g = e.graph(i)) out.push_back(std::move(*g));
  }
  return out;
}

std::vector<BipartiteGraph> enumerate_bipartite(const SearchSpace& space) {
  const Enumeration e(space);
  std::vector<BipartiteGraph> out;
  for (std::uint64_t i = 0; i < e.size(); ++i) {
    if (auto b = e.bipartite(i)) out.push_back(std::move(*b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// targets

namespace {

constexpr std::pair<Lemma, std::string_view> kLemmaNames[] = {
    {Lemma::clique_lemma, "clique_lemma"},
    {Lemma::refined_hamilton_lemma, "refined_hamilton_lemma"},
    {Lemma::refined_traceable_lemma, "refined_traceable_lemma"},
    {Lemma::ainouche_christofides, "ainouche_christofides"},
    {Lemma::biclique_lemma, "biclique_lemma"},
    {Lemma::refined_bipartite_lemma, "refined_bipartite_lemma"},
    {Lemma::ferrara_jacobson_powell, "ferrara_jacobson_powell"},
};

bool bipartite_lemma(Lemma l) {
  return l == Lemma::biclique_lemma || l == Lemma::refined_bipartite_lemma || l == Lemma::ferrara_jacobson_powell;
}

}  // namespace

std::string_view to_string(Lemma l) {
  for (const auto& [id, name] : kLemmaNames) {
    if (id == l) return name;
  }
  return "?";
}

Target Target::parse(std::string_view text) {
  Target t;
  for (const auto& [id, name] : kLemmaNames) {
    if (name == text) {
      t.lemma = id;
      return t;
    }
  }
  std::string_view name = text;
  if (text.ends_with(":path")) {
    name = text.substr(0, text.size() - 5);
    t.property = Property::traceable;
  }
  t.theorem = theorem_from_string(name);
  if (!t.theorem) throw DomainError("unknown verification target '" + std::string(text) + "'");
  if (t.property == Property::traceable && !has_traceable_part(*t.theorem)) {
    throw DomainError(std::string(name) + " has no traceability part");
  }
  return t;
}

std::string Target::to_string() const {
  if (lemma) return std::string(hamspec::to_string(*lemma));
  std::string out(hamspec::to_string(*theorem));
  if (property == Property::traceable) out += ":path";
  return out;
}

bool Target::bipartite() const { return lemma ? bipartite_lemma(*lemma) : is_bipartite_theorem(*theorem); }

// ---------------------------------------------------------------------------
// per-instance evaluation

namespace {

// Ordered from best to worst.
enum class Outcome { skipped, no_hypothesis, borderline, passed, exceptional, undecided, failed };

struct Eval {
  Outcome outcome = Outcome::skipped;
  std::string family;  // exceptional family name
};

Eval from_oracle(const OracleResult& r) {
  if (r.found()) return {Outcome::passed, {}};
  return {r.decided() ? Outcome::failed : Outcome::undecided, {}};
}

// Oracle first, then the "unless" disjuncts.
template <class Disjuncts>
Eval conclude(const OracleResult& r, Disjuncts&& disjuncts) {
  if (r.found()) return {Outcome::passed, {}};
  if (auto fam = disjuncts()) return {Outcome::exceptional, *fam};
  return {r.decided() ? Outcome::failed : Outcome::undecided, {}};
}

int default_k(const Target& t) {
  return t.lemma && *t.lemma == Lemma::refined_traceable_lemma ? 0 : 1;
}

// Order precondition of a statement at order (or side) n with parameter k.
std::optional<std::string> order_problem(const Target& t, int n, int k) {
  auto need = [&](bool ok, const std::string& what) -> std::optional<std::string> {
    if (ok) return std::nullopt;
    return t.to_string() + " needs " + what;
  };
  if (t.theorem) {
    if (is_bipartite_theorem(*t.theorem)) return need(n >= 2, "side >= 2");
    if (t.property == Property::hamiltonian) return need(n >= 3, "n >= 3");
    return need(n >= 1, "n >= 1");
  }
  switch (*t.lemma) {
    case Lemma::clique_lemma:
    case Lemma::refined_hamilton_lemma:
      return need(k >= 1 && n >= 6 * k + 5, "k >= 1 and n >= 6k+5");
    case Lemma::refined_traceable_lemma:
      return need(k >= 0 && n >= 6 * k + 10, "k >= 0 and n >= 6k+10");
    case Lemma::ainouche_christofides:
      return need(n >= 3, "n >= 3");
    case Lemma::biclique_lemma:
    case Lemma::refined_bipartite_lemma:
      return need(k >= 1 && n >= 2 * k + 1, "k >= 1 and side >= 2k+1");
    case Lemma::ferrara_jacobson_powell:
      return need(n >= 2, "side >= 2");
  }
  return std::nullopt;
}

class Evaluator {
 public:
  Evaluator(const Target& t, const VerifyOptions& o) : t_(t), o_(o) {}

  Eval general(const Graph& g) const {
    if (t_.bipartite()) return views(g);
    const int n = g.order();
    const int k = o_.k.value_or(default_k(t_));
    if (order_problem(t_, n, k)) return {};
    if (t_.theorem) {
      const TheoremCheck c = check_theorem(g, *t_.theorem, t_.property, o_.k, o_.check);
      if (c.status == HypothesisStatus::borderline) return {Outcome::borderline, {}};
      if (!c.held()) return {Outcome::no_hypothesis, {}};
      if (c.exceptional) return {Outcome::exceptional, std::string(to_string(c.exceptional->family))};
      return from_oracle(t_.property == Property::hamiltonian ? is_hamiltonian(g, o_.oracle)
                                                              : is_traceable(g, o_.oracle));
    }
    const long long e = g.edge_count();
    switch (*t_.lemma) {
      case Lemma::clique_lemma: {
        const Graph h = bc_closure(g).graph;
        if (h.edge_count() <= choose2(n - k - 1) + 1LL * (k + 1) * (k + 1)) return {Outcome::no_hypothesis, {}};
        return {clique_number(h) >= n - k ? Outcome::passed : Outcome::failed, {}};
      }
      case Lemma::refined_hamilton_lemma: {
        if (min_degree(g) < k || e <= choose2(n - k - 1) + 1LL * (k + 1) * (k + 1)) return {Outcome::no_hypothesis, {}};
        return conclude(is_hamiltonian(g, o_.oracle), [&]() -> std::optional<std::string> {
          if (spanning_subgraph_of(g, Family::L, n, k)) return "L";
          if (spanning_subgraph_of(g, Family::N, n, k)) return "N";
          return std::nullopt;
        });
      }
      case Lemma::refined_traceable_lemma: {
        if (min_degree(g) < k || e <= choose2(n - k - 2) + 1LL * (k + 1) * (k + 2)) return {Outcome::no_hypothesis, {}};
        return conclude(is_traceable(g, o_.oracle), [&]() -> std::optional<std::string> {
          if (spanning_subgraph_of(g, Family::barL, n, k)) return "barL";
          if (spanning_subgraph_of(g, Family::barN, n, k)) return "barN";
          return std::nullopt;
        });
      }
      case Lemma::ainouche_christofides: {
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < n - 1) return {Outcome::no_hypothesis, {}};
          }
        }
        return conclude(is_hamiltonian(g, o_.oracle), [&]() -> std::optional<std::string> {
          for (int j = 1; 2 * j + 1 <= n; ++j) {
            if (recognize(g, FamilySpec{Family::L, n, j, std::nullopt})) return "L";
          }
          if (n % 2 == 1 && recognize(g, FamilySpec{Family::H, n, 0, std::nullopt})) return "H";
          return std::nullopt;
        });
      }
      default:
        return {};
    }
  }

  // Bipartite statements see every balanced 2-colouring; the worst outcome
  // stands for the graph.
  Eval views(const Graph& g) const {
    Eval worst{Outcome::skipped, {}};
    for (const auto& b : balanced_views(g)) {
      Eval r = bipartite(b);
      if (static_cast<int>(r.outcome) > static_cast<int>(worst.outcome)) worst = std::move(r);
    }
    return worst;
  }

  Eval bipartite(const BipartiteGraph& b) const {
    if (!t_.bipartite()) return general(b.to_graph());
    const int n = b.nx();
    const int k = o_.k.value_or(default_k(t_));
    if (b.ny() != n || order_problem(t_, n, k)) return {};
    if (t_.theorem) {
      const TheoremCheck c = check_bipartite_theorem(b, *t_.theorem, o_.k, o_.check);
      if (c.status == HypothesisStatus::borderline) return {Outcome::borderline, {}};
      if (!c.held()) return {Outcome::no_hypothesis, {}};
      if (c.exceptional) return {Outcome::exceptional, std::string(to_string(c.exceptional->family))};
      return from_oracle(is_hamiltonian(b, o_.oracle));
    }
    const long long bound = 1LL * n * (n - k - 1) + 1LL * (k + 1) * (k + 1);
    switch (*t_.lemma) {
      case Lemma::biclique_lemma: {
        const BipartiteGraph h = bipartite_closure(b).graph;
        if (h.edge_count() <= bound) return {Outcome::no_hypothesis, {}};
        bool order_ok = false;
        for (int s = n - k; s <= n && !order_ok; ++s) order_ok = contains_biclique(h, s, 2 * n - k - s);
        bool full_ok = true;
        if (h.min_degree() >= k) full_ok = contains_biclique(h, n, n - k) || contains_biclique(h, n - k, n);
        return {order_ok && full_ok ? Outcome::passed : Outcome::failed, {}};
      }
      case Lemma::refined_bipartite_lemma: {
        if (b.min_degree() < k || b.edge_count() <= bound) return {Outcome::no_hypothesis, {}};
        return conclude(is_hamiltonian(b, o_.oracle), [&]() -> std::optional<std::string> {
          if (spanning_subgraph_of(b, Family::B, n, k)) return "B";
          return std::nullopt;
        });
      }
      case Lemma::ferrara_jacobson_powell: {
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            if (!b.has_edge(x, y) && b.degree_x(x) + b.degree_y(y) < n) return {Outcome::no_hypothesis, {}};
          }
        }
        return conclude(is_hamiltonian(b, o_.oracle), [&]() -> std::optional<std::string> {
          for (int j = 1; 2 * j <= n; ++j) {
            if (recognize(b, FamilySpec{Family::Bset, n, j, std::nullopt})) return "Bset";
          }
          if (n == 4 && recognize(b, FamilySpec{Family::Gamma1, 4, 2, std::nullopt})) return "Gamma1";
          if (n == 4 && recognize(b, FamilySpec{Family::Gamma2, 4, 2, std::nullopt})) return "Gamma2";
          return std::nullopt;
        });
      }
      default:
        return {};
    }
  }

 private:
  const Target& t_;
  const VerifyOptions& o_;
};

void record(VerificationReport& r, const Eval& e, std::uint64_t index, const auto& instance) {
  if (e.outcome == Outcome::skipped) return;
  ++r.examined;
  switch (e.outcome) {
    case Outcome::borderline:
      ++r.borderline;
      return;
    case Outcome::no_hypothesis:
    case Outcome::skipped:
      return;
    default:
      break;
  }
  ++r.hypothesis_count;
  if (e.outcome == Outcome::exceptional) {
    ++r.exceptional_matches;
    ++r.exceptional_by_family[e.family];
  } else if (e.outcome == Outcome::failed) {
    r.conclusion_failures.push_back({index, encode_graph6(instance)});
  } else if (e.outcome == Outcome::undecided) {
    r.undecided.push_back({index, encode_graph6(instance)});
  }
}

void merge_into(VerificationReport& into, VerificationReport&& part) {
  into.examined += part.examined;
  into.hypothesis_count += part.hypothesis_count;
  into.exceptional_matches += part.exceptional_matches;
  into.borderline += part.borderline;
  for (const auto& [fam, count] : part.exceptional_by_family) into.exceptional_by_family[fam] += count;
  for (auto& c : part.conclusion_failures) into.conclusion_failures.push_back(std::move(c));
  for (auto& c : part.undecided) into.undecided.push_back(std::move(c));
}

void sort_examples(std::vector<Counterexample>& v) {
  std::sort(v.begin(), v.end(), [](const Counterexample& a, const Counterexample& b) {
    return a.graph6 != b.graph6 ? a.graph6 < b.graph6 : a.index < b.index;
  });
}

// Runs work(begin, end, partial) over [0, size) in blocks on `jobs` threads,
// one partial per thread. Exceptions from workers are rethrown.
template <class Partial, class Work>
std::vector<Partial> run_parallel(std::uint64_t size, int jobs, Work work) {
  jobs = std::max(1, jobs);
  const std::uint64_t block = std::max<std::uint64_t>(1024, size / 4096);
  std::atomic<std::uint64_t> next{0};
  std::vector<Partial> parts(static_cast<std::size_t>(jobs));
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](int id) {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(block);
        if (begin >= size) break;
        work(begin, std::min(size, begin + block), parts[static_cast<std::size_t>(id)]);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(size);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  return parts;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Fixed order of a space, when it has one.
std::optional<int> space_order(const SearchSpace& s) {
  if (s.kind == SpaceKind::graph6_file) return std::nullopt;
  return s.n;
}

}  // namespace

VerificationReport verify_theorem(const Target& target, const SearchSpace& space, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Enumeration en(space);
  if (auto n = space_order(space)) {
    // Graph spaces feeding bipartite statements: side = n / 2.
    int order = *n;
    if (target.bipartite() && !space.bipartite()) {
      if (order % 2 != 0) throw DomainError(target.to_string() + " needs a balanced bipartite space");
      order /= 2;
    } else if (!target.bipartite() && space.bipartite()) {
      order *= 2;
    }
    if (auto problem = order_problem(target, order, opts.k.value_or(default_k(target)))) throw DomainError(*problem);
  }
  if (opts.k && *opts.k < 0) throw DomainError("k must be non-negative");

  const Evaluator eval(target, opts);
  auto parts = run_parallel<VerificationReport>(
      en.size(), opts.jobs, [&](std::uint64_t begin, std::uint64_t end, VerificationReport& part) {
        for (std::uint64_t i = begin; i < end; ++i) {
          if (space.bipartite()) {
            if (auto b = en.bipartite(i)) record(part, eval.bipartite(*b), i, b->to_graph());
          } else if (auto g = en.graph(i)) {
            record(part, eval.general(*g), i, *g);
          }
        }
      });

  VerificationReport report;
  report.target = target.to_string();
  report.space = space.to_string();
  for (auto& p : parts) merge_into(report, std::move(p));
  sort_examples(report.conclusion_failures);
  sort_examples(report.undecided);
  report.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_graphs(const Target& target, std::span<const Graph> graphs, std::string label,
                                 const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Evaluator eval(target, opts);
  auto parts = run_parallel<VerificationReport>(
      graphs.size(), opts.jobs, [&](std::uint64_t begin, std::uint64_t end, VerificationReport& part) {
        for (std::uint64_t i = begin; i < end; ++i) record(part, eval.general(graphs[i]), i, graphs[i]);
      });
  VerificationReport report;
  report.target = target.to_string();
  report.space = std::move(label);
  for (auto& p : parts) merge_into(report, std::move(p));
  sort_examples(report.conclusion_failures);
  sort_examples(report.undecided);
  report.wall_seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// extremal search

namespace {

constexpr std::pair<Objective, std::string_view> kObjectiveNames[] = {
    {Objective::max_rho, "max_rho"},
    {Objective::max_q, "max_q"},
    {Objective::min_rho_complement, "min_rho_complement"},
    {Objective::min_rho_qc, "min_rho_qc"},
    {Objective::min_q_qc, "min_q_qc"},
};

bool minimising(Objective o) { return o != Objective::max_rho && o != Objective::max_q; }

struct Tie {
  double value;
  Graph graph;
  std::string graph6;
};

struct SearchPartial {
  std::optional<double> best;  // in maximisation form
  std::vector<Tie> ties;
  std::uint64_t examined = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t undecided = 0;
};

// Adds g as a tie, keeping one representative per isomorphism class.
void add_tie(std::vector<Tie>& ties, Tie t) {
  for (auto& existing : ties) {
    if (existing.graph.edge_count() == t.graph.edge_count() && is_isomorphic(existing.graph, t.graph)) {
      if (t.graph6 < existing.graph6) existing = std::move(t);
      return;
    }
  }
  ties.push_back(std::move(t));
}

void offer(SearchPartial& part, double value, Graph g, double tol) {
  if (part.best && value < *part.best - tol) return;
  if (!part.best || value > *part.best) {
    part.best = value;
    std::erase_if(part.ties, [&](const Tie& t) { return t.value < value - tol; });
  }
  std::string code = encode_graph6(g);
  add_tie(part.ties, Tie{value, std::move(g), std::move(code)});
}

}  // namespace

std::string_view to_string(Objective o) {
  for (const auto& [id, name] : kObjectiveNames) {
    if (id == o) return name;
  }
  return "?";
}

std::string_view to_string(Constraint c) { return c == Constraint::non_hamiltonian ? "non_hamiltonian" : "non_traceable"; }

std::optional<Objective> objective_from_string(std::string_view s) {
  for (const auto& [id, name] : kObjectiveNames) {
    if (name == s) return id;
  }
  return std::nullopt;
}

std::optional<Constraint> constraint_from_string(std::string_view s) {
  if (s == "non_hamiltonian") return Constraint::non_hamiltonian;
  if (s == "non_traceable") return Constraint::non_traceable;
  return std::nullopt;
}

ExtremalResult extremal_search(int k, Objective objective, Constraint constraint, const SearchSpace& space,
                               const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const bool qc = objective == Objective::min_rho_qc || objective == Objective::min_q_qc;
  if (qc && !space.bipartite()) throw DomainError(std::string(to_string(objective)) + " needs a bipartite space");
  const Enumeration en(space);
  const double tol = opts.check.tolerance;
  const double sign = minimising(objective) ? -1.0 : 1.0;

  auto value_of = [&](const Graph& g, const std::optional<BipartiteGraph>& b) {
    switch (objective) {
      case Objective::max_rho: return spectral_radius(g, opts.check.spectral).value;
      case Objective::max_q: return q_radius(g, opts.check.spectral).value;
      case Objective::min_rho_complement: return spectral_radius(complement(g), opts.check.spectral).value;
      case Objective::min_rho_qc: return spectral_radius(quasi_complement(*b).to_graph(), opts.check.spectral).value;
      case Objective::min_q_qc: return q_radius(quasi_complement(*b).to_graph(), opts.check.spectral).value;
    }
    return 0.0;
  };

  auto parts = run_parallel<SearchPartial>(
      en.size(), opts.jobs, [&](std::uint64_t begin, std::uint64_t end, SearchPartial& part) {
        for (std::uint64_t i = begin; i < end; ++i) {
          std::optional<BipartiteGraph> b;
          std::optional<Graph> g;
          if (space.bipartite()) {
            b = en.bipartite(i);
            if (!b || b->min_degree() < k) continue;
            g = b->to_graph();
          } else {
            g = en.graph(i);
            if (!g || g->order() == 0 || min_degree(*g) < k) continue;
          }
          ++part.examined;
          const double v = sign * value_of(*g, b);
          if (part.best && v < *part.best - tol) continue;
          ++part.oracle_calls;
          OracleResult r;
          if (constraint == Constraint::non_hamiltonian) {
            r = b ? is_hamiltonian(*b, opts.oracle) : is_hamiltonian(*g, opts.oracle);
          } else {
            r = is_traceable(*g, opts.oracle);
          }
          if (!r.decided()) {
            ++part.undecided;
            continue;
          }
          if (r.found()) continue;
          offer(part, v, std::move(*g), tol);
        }
      });

  ExtremalResult out;
  SearchPartial all;
  for (auto& p : parts) {
    out.examined += p.examined;
    out.oracle_calls += p.oracle_calls;
    out.undecided += p.undecided;
    if (p.best && (!all.best || *p.best > *all.best)) all.best = p.best;
  }
  if (all.best) {
    for (auto& p : parts) {
      for (auto& t : p.ties) {
        if (t.value >= *all.best - tol) add_tie(all.ties, std::move(t));
      }
    }
    out.best = sign * *all.best;
    for (const auto& t : all.ties) out.argmax.push_back(t.graph6);
    std::sort(out.argmax.begin(), out.argmax.end());
  }
  out.wall_seconds = seconds_since(start);
  return out;
}

}  // namespace hamspec
