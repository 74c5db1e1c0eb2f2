#include "hamspec/certifier.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <tuple>

#include "hamspec/errors.hpp"

namespace hamspec {

namespace {

struct NamedTheorem {
  TheoremId id;
  std::string_view name;
};

constexpr std::array<NamedTheorem, 15> kTheorems{{
    {TheoremId::dirac, "dirac"},
    {TheoremId::ore, "ore"},
    {TheoremId::erdos, "erdos"},
    {TheoremId::fn_rho, "fn_rho"},
    {TheoremId::fn_rho_complement, "fn_rho_complement"},
    {TheoremId::main_rho, "main_rho"},
    {TheoremId::main_rho_complement, "main_rho_complement"},
    {TheoremId::yu_fan_q, "yu_fan_q"},
    {TheoremId::main_q, "main_q"},
    {TheoremId::moon_moser_delta, "moon_moser_delta"},
    {TheoremId::moon_moser_edges, "moon_moser_edges"},
    {TheoremId::bip_rho, "bip_rho"},
    {TheoremId::bip_q, "bip_q"},
    {TheoremId::bip_rho_qc, "bip_rho_qc"},
    {TheoremId::bip_q_qc, "bip_q_qc"},
}};

long long choose2(long long m) { return m < 2 ? 0 : m * (m - 1) / 2; }

enum class Cmp { ge, gt, le, lt };

bool strict(Cmp c) { return c == Cmp::gt || c == Cmp::lt; }

// Records hypotheses into a TheoremCheck and stops at the first one that does
// not hold.
class Hypotheses {
 public:
  Hypotheses(TheoremCheck& out, double tol) : out_(out), tol_(tol) { out_.status = HypothesisStatus::held; }

  bool integer(const std::string& name, long long measured, long long threshold, Cmp cmp) {
    const long long slack = (cmp == Cmp::ge || cmp == Cmp::gt) ? measured - threshold : threshold - measured;
    out_.evidence["threshold_" + name] = static_cast<double>(threshold);
    out_.evidence["slack_" + name] = static_cast<double>(slack);
    const bool ok = strict(cmp) ? slack > 0 : slack >= 0;
    if (!ok) out_.status = HypothesisStatus::failed;
    return ok;
  }

  // Order thresholds: falling short means the statement does not apply.
  bool guard(const std::string& name, long long measured, long long threshold) {
    out_.evidence["threshold_" + name] = static_cast<double>(threshold);
    out_.evidence["slack_" + name] = static_cast<double>(measured - threshold);
    if (measured >= threshold) return true;
    out_.status = HypothesisStatus::not_applicable;
    return false;
  }

  bool real(const std::string& name, double measured, double threshold, Cmp cmp) {
    const double slack = (cmp == Cmp::ge || cmp == Cmp::gt) ? measured - threshold : threshold - measured;
    out_.evidence["threshold_" + name] = threshold;
    out_.evidence["slack_" + name] = slack;
    if (slack > tol_) return true;
    if (slack < -tol_) {
      out_.status = HypothesisStatus::failed;
      return false;
    }
    if (strict(cmp)) {
      out_.status = HypothesisStatus::borderline;
      out_.notes.push_back(name + ": strict inequality within tolerance band");
      return false;
    }
    out_.boundary = true;
    return true;
  }

 private:
  TheoremCheck& out_;
  double tol_;
};

class GraphFacts {
 public:
  GraphFacts(const Graph& g, const SpectralOptions& so) : g_(g), so_(so) {
    const DegreeProfile p = degree_profile(g);
    n = g.order();
    e = p.edge_count;
    delta = p.min_degree;
  }

  double rho() {
    if (!rho_) rho_ = spectral_radius(g_, so_).value;
    return *rho_;
  }
  double q() {
    if (!q_) q_ = q_radius(g_, so_).value;
    return *q_;
  }
  double rho_complement() {
    if (!rho_c_) rho_c_ = spectral_radius(complement(g_), so_).value;
    return *rho_c_;
  }
  const Graph& graph() const { return g_; }

  int n = 0;
  int e = 0;
  int delta = 0;

 private:
  const Graph& g_;
  SpectralOptions so_;
  std::optional<double> rho_;
  std::optional<double> q_;
  std::optional<double> rho_c_;
};

class BipartiteFacts {
 public:
  BipartiteFacts(const BipartiteGraph& b, const SpectralOptions& so) : b_(b), so_(so) {
    n = b.side();
    e = b.edge_count();
    delta = b.min_degree();
  }

  double rho() {
    if (!rho_) rho_ = spectral_radius(b_.to_graph(), so_).value;
    return *rho_;
  }
  double q() {
    if (!q_) q_ = q_radius(b_.to_graph(), so_).value;
    return *q_;
  }
  double rho_qc() {
    if (!rho_qc_) rho_qc_ = spectral_radius(quasi_complement(b_).to_graph(), so_).value;
    return *rho_qc_;
  }
  double q_qc() {
    if (!q_qc_) q_qc_ = q_radius(quasi_complement(b_).to_graph(), so_).value;
    return *q_qc_;
  }
  const BipartiteGraph& graph() const { return b_; }

  int n = 0;
  int e = 0;
  int delta = 0;

 private:
  const BipartiteGraph& b_;
  SpectralOptions so_;
  std::optional<double> rho_;
  std::optional<double> q_;
  std::optional<double> rho_qc_;
  std::optional<double> q_qc_;
};

bool uses_k(TheoremId id) {
  switch (id) {
    case TheoremId::erdos:
    case TheoremId::main_rho:
    case TheoremId::main_rho_complement:
    case TheoremId::main_q:
    case TheoremId::moon_moser_edges:
    case TheoremId::bip_rho:
    case TheoremId::bip_q:
    case TheoremId::bip_rho_qc:
      return true;
    default:
      return false;
  }
}

// Sets the exceptional family if g matches `spec`.
bool match(TheoremCheck& c, const Graph& g, const FamilySpec& spec) {
  if (!recognize(g, spec)) return false;
  c.exceptional = spec;
  return true;
}

bool match(TheoremCheck& c, const BipartiteGraph& b, const FamilySpec& spec) {
  if (!recognize(b, spec)) return false;
  c.exceptional = spec;
  return true;
}

bool in_h_family(TheoremCheck& c, const Graph& g, int n) {
  return match(c, g, FamilySpec{Family::H, n, 0, std::nullopt});
}

void check_general(GraphFacts& f, TheoremCheck& c, double tol) {
  const int n = f.n;
  const int k = c.k;
  const bool ham = c.property == Property::hamiltonian;
  c.evidence["n"] = n;
  c.evidence["e"] = f.e;
  c.evidence["delta"] = f.delta;
  if (uses_k(c.theorem)) c.evidence["k"] = k;
  if (ham && n < 3) {
    c.status = HypothesisStatus::not_applicable;
    c.notes.push_back("Hamiltonicity needs n >= 3");
    return;
  }
  if (!ham && !has_traceable_part(c.theorem)) {
    c.status = HypothesisStatus::not_applicable;
    return;
  }
  Hypotheses h(c, tol);
  const Graph& g = f.graph();
  switch (c.theorem) {
    case TheoremId::dirac:
      h.integer("twice_min_degree", 2LL * f.delta, n, Cmp::ge);
      return;
    case TheoremId::ore:
      h.integer("edges", f.e, choose2(n - 1) + 1, Cmp::gt);
      return;
    case TheoremId::erdos: {
      if (k < 1 || 2 * k > n - 1) {
        c.status = HypothesisStatus::not_applicable;
        c.notes.push_back("k outside 1 <= k <= (n-1)/2");
        return;
      }
      const long long a = choose2(n - k) + 1LL * k * k;
      const long long l = (n - 1) / 2;
      const long long b = choose2((n + 2) / 2) + l * l;
      if (!h.integer("min_degree", f.delta, k, Cmp::ge)) return;
      h.integer("edges", f.e, std::max(a, b), Cmp::gt);
      return;
    }
    case TheoremId::fn_rho: {
      c.evidence["rho"] = f.rho();
      if (!h.real("rho", f.rho(), n - 2.0, ham ? Cmp::gt : Cmp::ge)) return;
      if (ham) {
        match(c, g, FamilySpec{Family::N, n, 1, std::nullopt});
      } else if (match(c, g, FamilySpec{Family::barN, n, 0, std::nullopt})) {
        c.notes.push_back("barN_n^0 is also the k = 0 exceptional graph of main_rho part (1)");
      }
      return;
    }
    case TheoremId::fn_rho_complement: {
      c.evidence["rho_complement"] = f.rho_complement();
      const double bound = std::sqrt(ham ? n - 2.0 : n - 1.0);
      if (!h.real("rho_complement", f.rho_complement(), bound, Cmp::le)) return;
      match(c, g, ham ? FamilySpec{Family::L, n, 1, std::nullopt} : FamilySpec{Family::barL, n, 0, std::nullopt});
      return;
    }
    case TheoremId::main_rho:
    case TheoremId::main_q: {
      const bool use_q = c.theorem == TheoremId::main_q;
      if (k < (ham ? 1 : 0)) {
        c.status = HypothesisStatus::not_applicable;
        c.notes.push_back(ham ? "needs k >= 1" : "needs k >= 0");
        return;
      }
      if (!h.integer("min_degree", f.delta, k, Cmp::ge)) return;
      if (!h.guard("order_linear", n, ham ? 6LL * k + 5 : 6LL * k + 10)) return;
      long long quad = 0;
      if (use_q) {
        quad = ham ? 3LL * k * k + 5LL * k + 4 : 3LL * k * k + 9LL * k + 8;
      } else {
        quad = ham ? 1LL * k * k + 6LL * k + 4 : 1LL * k * k + 7LL * k + 8;
      }
      if (!h.guard("twice_order_quadratic", 2LL * n, quad)) return;
      const Family fam = ham ? Family::N : Family::barN;
      const double measured = use_q ? f.q() : f.rho();
      const double threshold = use_q ? threshold_q(fam, n, k) : threshold_rho(fam, n, k);
      c.evidence[use_q ? "q" : "rho"] = measured;
      if (!h.real(use_q ? "q" : "rho", measured, threshold, Cmp::ge)) return;
      match(c, g, FamilySpec{fam, n, k, std::nullopt});
      return;
    }
    case TheoremId::main_rho_complement: {
      if (k < (ham ? 1 : 0)) {
        c.status = HypothesisStatus::not_applicable;
        c.notes.push_back(ham ? "needs k >= 1" : "needs k >= 0");
        return;
      }
      if (!h.integer("min_degree", f.delta, k, Cmp::ge)) return;
      if (!h.guard("order", n, ham ? 2LL * k + 1 : 2LL * k + 2)) return;
      // complement of L_n^k is K_{k,n-k-1} + K_1; of barL_n^k it is K_{k+1,n-k-1}.
      const double bound = ham ? closed_form(ClosedForm::rho_complete_bipartite, k, n - k - 1)
                               : closed_form(ClosedForm::rho_complete_bipartite, k + 1, n - k - 1);
      c.evidence["rho_complement"] = f.rho_complement();
      if (!h.real("rho_complement", f.rho_complement(), bound, Cmp::le)) return;
      if (match(c, g, FamilySpec{ham ? Family::L : Family::barL, n, k, std::nullopt})) return;
      if (n == (ham ? 2 * k + 1 : 2 * k + 2)) in_h_family(c, g, n);
      return;
    }
    case TheoremId::yu_fan_q: {
      if (!h.guard("order", n, 6)) return;
      c.evidence["q"] = f.q();
      if (!h.real("q", f.q(), 2.0 * n - 4.0, ham ? Cmp::gt : Cmp::ge)) return;
      match(c, g, ham ? FamilySpec{Family::N, n, 1, std::nullopt} : FamilySpec{Family::barN, n, 0, std::nullopt});
      return;
    }
    default:
      throw DomainError(std::string(to_string(c.theorem)) + " is a bipartite statement");
  }
}

void check_bipartite(BipartiteFacts& f, TheoremCheck& c, double tol) {
  const int n = f.n;
  const int k = c.k;
  c.evidence["n"] = n;
  c.evidence["e"] = f.e;
  c.evidence["delta"] = f.delta;
  if (uses_k(c.theorem)) c.evidence["k"] = k;
  if (n < 2) {
    c.status = HypothesisStatus::not_applicable;
    c.notes.push_back("balanced bipartite statements need side n >= 2");
    return;
  }
  auto needs_k = [&](bool ok, const char* why) {
    if (ok) return true;
    c.status = HypothesisStatus::not_applicable;
    c.notes.push_back(why);
    return false;
  };
  Hypotheses h(c, tol);
  const BipartiteGraph& b = f.graph();
  auto gamma_exception = [&] {
    return n == 4 && (match(c, b, FamilySpec{Family::Gamma1, 4, 2, std::nullopt}) ||
                      match(c, b, FamilySpec{Family::Gamma2, 4, 2, std::nullopt}));
  };
  switch (c.theorem) {
    case TheoremId::moon_moser_delta:
      h.integer("twice_min_degree", 2LL * f.delta, n, Cmp::gt);
      return;
    case TheoremId::moon_moser_edges: {
      if (!needs_k(k >= 1 && 2 * k <= n, "k outside 1 <= k <= n/2")) return;
      const long long half = n / 2;
      const long long bound = std::max(1LL * n * (n - k) + 1LL * k * k, 1LL * n * (n - half) + half * half);
      if (!h.integer("min_degree", f.delta, k, Cmp::ge)) return;
      h.integer("edges", f.e, bound, Cmp::gt);
      return;
    }
    case TheoremId::bip_rho:
    case TheoremId::bip_q: {
      const bool use_q = c.theorem == TheoremId::bip_q;
      if (!needs_k(k >= 1, "needs k >= 1")) return;
      if (!h.integer("min_degree", f.delta, k, Cmp::ge)) return;
      if (!h.guard("order", n, 1LL * (k + 1) * (k + 1))) return;
      const double measured = use_q ? f.q() : f.rho();
      c.evidence[use_q ? "q" : "rho"] = measured;
      const double threshold = use_q ? threshold_q(Family::B, n, k) : threshold_rho(Family::B, n, k);
      if (!h.real(use_q ? "q" : "rho", measured, threshold, Cmp::ge)) return;
      match(c, b, FamilySpec{Family::B, n, k, std::nullopt});
      return;
    }
    case TheoremId::bip_rho_qc: {
      if (!needs_k(k >= 1, "needs k >= 1")) return;
      if (!h.integer("min_degree", f.delta, k, Cmp::ge)) return;
      if (!h.guard("order", n, 2LL * k)) return;
      c.evidence["rho_quasi_complement"] = f.rho_qc();
      const double bound = closed_form(ClosedForm::rho_complete_bipartite, k, n - k);
      if (!h.real("rho_quasi_complement", f.rho_qc(), bound, Cmp::le)) return;
      if (match(c, b, FamilySpec{Family::Bset, n, k, std::nullopt})) return;
      if (k == 2) gamma_exception();
      return;
    }
    case TheoremId::bip_q_qc: {
      c.evidence["q_quasi_complement"] = f.q_qc();
      if (!h.real("q_quasi_complement", f.q_qc(), n, Cmp::le)) return;
      for (int j = 1; 2 * j <= n; ++j) {
        if (match(c, b, FamilySpec{Family::Bset, n, j, std::nullopt})) return;
      }
      gamma_exception();
      return;
    }
    default:
      throw DomainError(std::string(to_string(c.theorem)) + " is not a bipartite statement");
  }
}

TheoremCheck make_check(TheoremId id, Property p, int k) {
  TheoremCheck c;
  c.theorem = id;
  c.property = p;
  c.k = k;
  return c;
}

template <class Check>
Certificate run_cascade(const std::vector<TheoremId>& order, Property property, Check&& check) {
  Certificate cert;
  cert.property = property;
  for (TheoremId id : order) {
    TheoremCheck c = check(id);
    const std::string name(to_string(id));
    if (c.status == HypothesisStatus::borderline) {
      cert.notes.push_back(name + ": borderline, not certified");
      continue;
    }
    if (!c.held()) continue;
    if (c.exceptional) {
      cert.verdict = Verdict::exceptional;
      cert.theorem = id;
      cert.evidence = std::move(c.evidence);
      cert.exceptional = std::move(c.exceptional);
      for (auto& note : c.notes) cert.notes.push_back(name + ": " + note);
      return cert;
    }
    if (c.boundary) {
      cert.notes.push_back(name + ": holds only at the tolerance boundary and no exceptional graph matched; not certified");
      continue;
    }
    cert.verdict = Verdict::certified_positive;
    cert.theorem = id;
    cert.evidence = std::move(c.evidence);
    for (auto& note : c.notes) cert.notes.push_back(name + ": " + note);
    return cert;
  }
  cert.verdict = Verdict::inconclusive;
  return cert;
}

void resolve_with_oracle(Certificate& cert, const OracleResult& r) {
  if (!r.decided()) {
    cert.notes.push_back("oracle: node budget exceeded");
    return;
  }
  cert.verdict = Verdict::oracle_resolved;
  cert.oracle_answer = r.found();
  cert.witness = r.witness;
  cert.evidence["oracle_nodes"] = static_cast<double>(r.nodes);
}

struct ThresholdCache {
  std::mutex mu;
  std::map<std::tuple<int, int, int, int>, double> values;
};

ThresholdCache& cache() {
  static ThresholdCache c;
  return c;
}

double cached_threshold(Family f, int n, int k, bool use_q) {
  const auto key = std::make_tuple(static_cast<int>(f), n, k, use_q ? 1 : 0);
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.values.find(key); it != c.values.end()) return it->second;
  }
  const Graph g = construct(FamilySpec{f, n, k, std::nullopt});
  const double v = use_q ? q_radius(g).value : spectral_radius(g).value;
  std::lock_guard lock(c.mu);
  c.values.emplace(key, v);
  return v;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [t, name] : kTheorems) {
    if (t == id) return name;
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (const auto& [t, n] : kTheorems) {
    if (n == name) return t;
  }
  return std::nullopt;
}

bool is_bipartite_theorem(TheoremId id) {
  switch (id) {
    case TheoremId::moon_moser_delta:
    case TheoremId::moon_moser_edges:
    case TheoremId::bip_rho:
    case TheoremId::bip_q:
    case TheoremId::bip_rho_qc:
    case TheoremId::bip_q_qc:
      return true;
    default:
      return false;
  }
}

bool has_traceable_part(TheoremId id) {
  switch (id) {
    case TheoremId::fn_rho:
    case TheoremId::fn_rho_complement:
    case TheoremId::main_rho:
    case TheoremId::main_rho_complement:
    case TheoremId::yu_fan_q:
    case TheoremId::main_q:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(Property p) { return p == Property::hamiltonian ? "hamiltonian" : "traceable"; }

std::string_view to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::not_applicable:
      return "not_applicable";
    case HypothesisStatus::failed:
      return "failed";
    case HypothesisStatus::borderline:
      return "borderline";
    case HypothesisStatus::held:
      return "held";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_positive:
      return "certified_positive";
    case Verdict::exceptional:
      return "exceptional";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::oracle_resolved:
      return "oracle_resolved";
  }
  return "unknown";
}

TheoremCheck check_theorem(const Graph& g, TheoremId id, Property property, std::optional<int> k,
                           const CheckOptions& opts) {
  if (is_bipartite_theorem(id)) throw DomainError(std::string(to_string(id)) + " needs a bipartite graph");
  GraphFacts f(g, opts.spectral);
  TheoremCheck c = make_check(id, property, k.value_or(f.delta));
  check_general(f, c, opts.tolerance);
  return c;
}

TheoremCheck check_bipartite_theorem(const BipartiteGraph& b, TheoremId id, std::optional<int> k,
                                     const CheckOptions& opts) {
  if (!is_bipartite_theorem(id)) throw DomainError(std::string(to_string(id)) + " is not a bipartite statement");
  BipartiteFacts f(b, opts.spectral);
  TheoremCheck c = make_check(id, Property::hamiltonian, k.value_or(f.delta));
  check_bipartite(f, c, opts.tolerance);
  return c;
}

std::vector<TheoremId> cascade(Property property) {
  using T = TheoremId;
  if (property == Property::hamiltonian) {
    return {T::ore, T::dirac, T::erdos, T::fn_rho, T::main_rho, T::yu_fan_q, T::main_q, T::fn_rho_complement,
            T::main_rho_complement};
  }
  return {T::fn_rho, T::main_rho, T::yu_fan_q, T::main_q, T::fn_rho_complement, T::main_rho_complement};
}

std::vector<TheoremId> bipartite_cascade() {
  using T = TheoremId;
  return {T::moon_moser_delta, T::moon_moser_edges, T::bip_rho, T::bip_q, T::bip_q_qc, T::bip_rho_qc};
}

namespace {

Certificate certify_general(const Graph& g, Property property, const CertifyOptions& opts) {
  GraphFacts f(g, opts.check.spectral);
  Certificate cert = run_cascade(cascade(property), property, [&](TheoremId id) {
    TheoremCheck c = make_check(id, property, f.delta);
    check_general(f, c, opts.check.tolerance);
    return c;
  });
  if (cert.verdict == Verdict::inconclusive && opts.use_oracle) {
    resolve_with_oracle(cert, property == Property::hamiltonian ? is_hamiltonian(g, opts.oracle) : is_traceable(g, opts.oracle));
  }
  return cert;
}

}  // namespace

Certificate certify_hamiltonicity(const Graph& g, const CertifyOptions& opts) {
  if (g.order() < 3) throw DomainError("Hamiltonicity certification needs n >= 3");
  return certify_general(g, Property::hamiltonian, opts);
}

Certificate certify_traceability(const Graph& g, const CertifyOptions& opts) {
  if (g.order() < 1) throw DomainError("traceability certification needs n >= 1");
  return certify_general(g, Property::traceable, opts);
}

Certificate certify_bipartite_hamiltonicity(const BipartiteGraph& b, const CertifyOptions& opts) {
  if (b.side() < 2) throw DomainError("bipartite certification needs side n >= 2");
  BipartiteFacts f(b, opts.check.spectral);
  Certificate cert = run_cascade(bipartite_cascade(), Property::hamiltonian, [&](TheoremId id) {
    TheoremCheck c = make_check(id, Property::hamiltonian, f.delta);
    check_bipartite(f, c, opts.check.tolerance);
    return c;
  });
  if (cert.verdict == Verdict::inconclusive && opts.use_oracle) {
    resolve_with_oracle(cert, is_hamiltonian(b.to_graph(), opts.oracle));
  }
  return cert;
}

double threshold_rho(Family f, int n, int k) { return cached_threshold(f, n, k, false); }
double threshold_q(Family f, int n, int k) { return cached_threshold(f, n, k, true); }

}  // namespace hamspec
