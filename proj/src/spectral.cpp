#include "hamspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hamspec/errors.hpp"

namespace hamspec {

std::string_view to_string(SpectralMethod m) {
  switch (m) {
    case SpectralMethod::dense_eigensolver:
      return "dense_eigensolver";
    case SpectralMethod::power_iteration:
      return "power_iteration";
    case SpectralMethod::closed_form:
      return "closed_form";
  }
  return "unknown";
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix m(g.order());
  for (const auto& [u, v] : g.edges()) {
    m(u, v) = 1.0;
    m(v, u) = 1.0;
  }
  return m;
}

SymmetricMatrix signless_laplacian(const Graph& g) {
  SymmetricMatrix m = adjacency_matrix(g);
  for (int v = 0; v < g.order(); ++v) m(v, v) = g.degree(v);
  return m;
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) s += 2.0 * a(i, j) * a(i, j);
  }
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(SymmetricMatrix a, double off_tolerance, int max_sweeps) {
  const int n = a.size();
  EigenDecomposition out;
  out.vectors.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  auto v = [&](int i, int j) -> double& {
    return out.vectors[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
  };
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  double off = off_diagonal_norm(a);
  while (off >= off_tolerance) {
    if (out.sweeps >= max_sweeps) {
      double best = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) best = std::max(best, a(i, i));
      throw SpectralError("Jacobi did not converge after " + std::to_string(max_sweeps) + " sweeps", best, off);
    }
    ++out.sweeps;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_diagonal_norm(a);
  }
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = a(i, i);
  return out;
}

SpectralResult largest_eigenvalue(const SymmetricMatrix& m, const SpectralOptions& opts) {
  const int n = m.size();
  if (n == 0) throw DomainError("eigenvalue of a 0x0 matrix");
  const EigenDecomposition eig = jacobi_eigen(m, opts.off_diagonal_tolerance, opts.max_sweeps);
  const auto top = static_cast<int>(std::max_element(eig.values.begin(), eig.values.end()) - eig.values.begin());
  const double lambda = eig.values[static_cast<std::size_t>(top)];
  const double* x = eig.vectors.data() + static_cast<std::size_t>(top) * static_cast<std::size_t>(n);
  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = -lambda * x[i];
    for (int j = 0; j < n; ++j) r += m(i, j) * x[j];
    residual = std::max(residual, std::abs(r));
  }
  if (residual > opts.tolerance) throw SpectralError("eigenpair residual above tolerance", lambda, residual);
  return {lambda, SpectralMethod::dense_eigensolver, residual, eig.sweeps};
}

namespace {

// Power iteration on (M + shift I) with M = A + diag_weight * D, using sparse
// neighbour lists. The shift keeps the Perron root strictly dominant in
// magnitude when M may have a spectrum symmetric about zero.
SpectralResult power_radius(const Graph& g, double diag_weight, double shift, const SpectralOptions& opts) {
  const int n = g.order();
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  std::vector<double> diag(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    g.for_each_neighbor(v, [&](int w) { nbrs[static_cast<std::size_t>(v)].push_back(w); });
    diag[static_cast<std::size_t>(v)] = diag_weight * static_cast<double>(nbrs[static_cast<std::size_t>(v)].size());
  }
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int v = 0; v < n; ++v) {
      double s = diag[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
      for (int w : nbrs[static_cast<std::size_t>(v)]) s += x[static_cast<std::size_t>(w)];
      y[static_cast<std::size_t>(v)] = s;
    }
  };
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(static_cast<std::size_t>(n));
  double lambda = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= opts.max_power_iterations; ++it) {
    apply(x, y);
    lambda = 0.0;
    for (int v = 0; v < n; ++v) lambda += x[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
    if (it % 8 == 0) {
      residual = 0.0;
      for (int v = 0; v < n; ++v) {
        residual = std::max(residual, std::abs(y[static_cast<std::size_t>(v)] - lambda * x[static_cast<std::size_t>(v)]));
      }
      if (residual <= opts.tolerance) return {lambda, SpectralMethod::power_iteration, residual, it};
    }
    double norm = 0.0;
    for (int v = 0; v < n; ++v) {
      y[static_cast<std::size_t>(v)] += shift * x[static_cast<std::size_t>(v)];
      norm += y[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
    }
    norm = std::sqrt(norm);
    for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)] / norm;
  }
  throw SpectralError("power iteration did not converge", lambda, residual);
}

SpectralResult radius(const Graph& g, bool signless, const SpectralOptions& opts) {
  if (g.order() == 0) throw DomainError("spectral radius of the 0-vertex graph is undefined");
  if (g.edge_count() == 0) return {0.0, SpectralMethod::closed_form, 0.0, 0};
  if (g.order() > opts.power_threshold) return power_radius(g, signless ? 1.0 : 0.0, signless ? 0.0 : 1.0, opts);
  return largest_eigenvalue(signless ? signless_laplacian(g) : adjacency_matrix(g), opts);
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts) { return radius(g, false, opts); }

SpectralResult q_radius(const Graph& g, const SpectralOptions& opts) { return radius(g, true, opts); }

double closed_form(ClosedForm target, int a, int b) {
  auto fail = [&](const char* what) {
    throw DomainError(std::string(what) + " (a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  };
  switch (target) {
    case ClosedForm::rho_complete:
      if (a < 1) fail("K_a needs a >= 1");
      return a - 1.0;
    case ClosedForm::q_complete:
      if (a < 1) fail("K_a needs a >= 1");
      return 2.0 * a - 2.0;
    case ClosedForm::rho_complete_bipartite:
      if (a < 0 || b < 0 || a + b < 1) fail("K_{a,b} needs a, b >= 0 and a + b >= 1");
      return std::sqrt(static_cast<double>(a) * static_cast<double>(b));
    case ClosedForm::q_complete_bipartite:
      if (a < 0 || b < 0 || a + b < 1) fail("K_{a,b} needs a, b >= 0 and a + b >= 1");
      return (a == 0 || b == 0) ? 0.0 : static_cast<double>(a + b);
    case ClosedForm::rho_complete_split: {
      const int k = a;
      const int n = b;
      if (k < 1 || 2 * k + 1 > n) fail("split formula needs 1 <= k <= (n-1)/2");
      const double disc = 4.0 * k * (n - k) - (3.0 * k - 1.0) * (k + 1.0);
      return (k - 1.0 + std::sqrt(disc)) / 2.0;
    }
  }
  fail("unknown closed form");
  return 0.0;
}

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::nikiforov:
      return "nikiforov";
    case BoundId::feng_yu:
      return "feng_yu";
    case BoundId::bipartite_sqrt_e:
      return "bipartite_sqrt_e";
    case BoundId::degree_mean:
      return "degree_mean";
    case BoundId::balanced_bipartite_q:
      return "balanced_bipartite_q";
    case BoundId::berman_zhang:
      return "berman_zhang";
    case BoundId::anderson_morley:
      return "anderson_morley";
  }
  return "unknown";
}

const BoundRecord& BoundReport::at(BoundId id) const {
  for (const auto& r : records) {
    if (r.id == id) return r;
  }
  throw DomainError("bound not present in report");
}

bool BoundReport::all_satisfied() const {
  return std::all_of(records.begin(), records.end(), [](const BoundRecord& r) { return !r.applicable || r.satisfied; });
}

namespace {

struct BipartiteFacts {
  bool bipartite = false;
  bool balanced = false;
  int half = 0;
};

BoundReport evaluate_bounds(const Graph& g, std::optional<int> k, const BipartiteFacts& facts, const SpectralOptions& opts) {
  const int n = g.order();
  const DegreeProfile prof = degree_profile(g);
  const double e = prof.edge_count;
  BoundReport rep;
  rep.rho = spectral_radius(g, opts).value;
  rep.q = q_radius(g, opts).value;

  auto record = [&](BoundId id, BoundDirection dir, double measured) {
    BoundRecord r{};
    r.id = id;
    r.direction = dir;
    r.measured_value = measured;
    return r;
  };
  auto settle = [&](BoundRecord& r, double bound) {
    r.applicable = true;
    r.bound_value = bound;
    r.slack = r.direction == BoundDirection::upper ? bound - r.measured_value : r.measured_value - bound;
    r.satisfied = r.slack >= -opts.tolerance;
  };

  {
    auto r = record(BoundId::nikiforov, BoundDirection::upper, rep.rho);
    const int kk = k.value_or(prof.min_degree);
    if (kk < 0 || kk > prof.min_degree) {
      r.reason = "k exceeds the minimum degree";
    } else {
      settle(r, (kk - 1) / 2.0 + std::sqrt(2.0 * e - static_cast<double>(n) * kk + (kk + 1.0) * (kk + 1.0) / 4.0));
    }
    rep.records.push_back(r);
  }
  {
    auto r = record(BoundId::feng_yu, BoundDirection::upper, rep.q);
    if (n < 2) {
      r.reason = "needs at least two vertices";
    } else {
      settle(r, 2.0 * e / (n - 1.0) + n - 2.0);
    }
    rep.records.push_back(r);
  }
  {
    auto r = record(BoundId::bipartite_sqrt_e, BoundDirection::upper, rep.rho);
    if (!facts.bipartite) {
      r.reason = "graph is not bipartite";
    } else {
      settle(r, std::sqrt(e));
    }
    rep.records.push_back(r);
  }
  {
    auto r = record(BoundId::degree_mean, BoundDirection::upper, rep.q);
    if (prof.edge_count == 0) {
      r.reason = "edgeless graph";
    } else {
      double best = 0.0;
      for (int u = 0; u < n; ++u) {
        const int du = prof.degrees[static_cast<std::size_t>(u)];
        if (du == 0) continue;
        double sum = 0.0;
        g.for_each_neighbor(u, [&](int w) { sum += prof.degrees[static_cast<std::size_t>(w)]; });
        best = std::max(best, du + sum / du);
      }
      settle(r, best);
    }
    rep.records.push_back(r);
  }
  {
    auto r = record(BoundId::balanced_bipartite_q, BoundDirection::upper, rep.q);
    if (!facts.balanced || facts.half == 0) {
      r.reason = "graph is not balanced bipartite";
    } else {
      settle(r, e / facts.half + facts.half);
    }
    rep.records.push_back(r);
  }
  {
    auto bz = record(BoundId::berman_zhang, BoundDirection::lower, rep.rho);
    auto am = record(BoundId::anderson_morley, BoundDirection::lower, rep.q);
    if (prof.edge_count == 0) {
      bz.reason = "edgeless graph";
      am.reason = "edgeless graph";
    } else {
      double min_prod = std::numeric_limits<double>::infinity();
      double min_sum = std::numeric_limits<double>::infinity();
      for (const auto& [u, v] : g.edges()) {
        const double du = prof.degrees[static_cast<std::size_t>(u)];
        const double dv = prof.degrees[static_cast<std::size_t>(v)];
        min_prod = std::min(min_prod, du * dv);
        min_sum = std::min(min_sum, du + dv);
      }
      settle(bz, std::sqrt(min_prod));
      settle(am, min_sum);
    }
    rep.records.push_back(bz);
    rep.records.push_back(am);
  }
  return rep;
}

}  // namespace

BoundReport bound_report(const Graph& g, std::optional<int> k, const SpectralOptions& opts) {
  BipartiteFacts facts;
  facts.bipartite = bipartition(g).has_value();
  if (facts.bipartite) {
    if (auto view = balanced_view(g)) {
      facts.balanced = true;
      facts.half = view->nx();
    }
  }
  return evaluate_bounds(g, k, facts, opts);
}

BoundReport bound_report(const BipartiteGraph& b, std::optional<int> k, const SpectralOptions& opts) {
  BipartiteFacts facts;
  facts.bipartite = true;
  facts.balanced = b.balanced();
  facts.half = b.nx();
  return evaluate_bounds(b.to_graph(), k, facts, opts);
}

}  // namespace hamspec
