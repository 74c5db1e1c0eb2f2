// hamspec command line: family generation, spectra, closures, the exact
// oracle, certificates, verification campaigns and extremal searches.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "hamspec/certifier.hpp"
#include "hamspec/errors.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/harness.hpp"
#include "hamspec/serialize.hpp"
#include "hamspec/spectral.hpp"
#include "hamspec/transforms.hpp"

using namespace hamspec;

namespace {

struct Common {
  std::uint64_t seed = 1;
  int jobs = 1;
  double tolerance = kTolerance;
  bool json = false;
};

struct SpaceArgs {
  std::string kind = "all_labeled";
  int n = 0;
  int min_degree = 0;
  double p = 0.5;
  double p_hi = -1.0;
  std::uint64_t samples = 1000;
  std::string file;
};

void add_space_flags(CLI::App* cmd, SpaceArgs& s) {
  cmd->add_option("--space", s.kind, "all_labeled | labeled_min_degree | bipartite | graph6_file | gnp | bipartite_gnp")
      ->check(CLI::IsMember({"all_labeled", "labeled_min_degree", "bipartite", "graph6_file", "gnp", "bipartite_gnp"}));
  cmd->add_option("-n,--n", s.n, "order, or side size for bipartite spaces");
  cmd->add_option("--min-degree", s.min_degree, "drop graphs with smaller minimum degree");
  cmd->add_option("-p,--p", s.p, "edge probability (random spaces)");
  cmd->add_option("--p-hi", s.p_hi, "upper end of a per-sample probability range");
  cmd->add_option("--samples", s.samples, "sample count (random spaces)");
  cmd->add_option("--file", s.file, "graph6 file (graph6_file space)");
}

SearchSpace make_space(const SpaceArgs& a, std::uint64_t seed) {
  SearchSpace s;
  if (a.kind == "all_labeled") {
    s = SearchSpace::all_labeled(a.n);
  } else if (a.kind == "labeled_min_degree") {
    s = SearchSpace::labeled_min_degree(a.n, a.min_degree);
  } else if (a.kind == "bipartite") {
    s = SearchSpace::balanced_bipartite_labeled(a.n);
  } else if (a.kind == "graph6_file") {
    s = SearchSpace::graph6_file(a.file);
  } else if (a.kind == "gnp") {
    s = SearchSpace::gnp(a.n, a.p, a.samples, seed);
  } else {
    s = SearchSpace::bipartite_gnp(a.n, a.p, a.samples, seed);
  }
  if (a.p_hi >= 0.0) s.p_hi = a.p_hi;
  if (a.kind != "labeled_min_degree") s.min_degree = a.min_degree;
  return s;
}

// A graph6 string, or a file holding graph6 lines.
std::vector<Graph> read_graphs(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    return read_graph6_stream(in);
  }
  return {decode_graph6(arg)};
}

BipartiteGraph as_bipartite(const Graph& g) {
  auto b = balanced_view(g);
  if (!b) throw DomainError("graph has no balanced bipartition");
  return *b;
}

void print_witness(const std::vector<int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
  std::cout << '\n';
}

void print_certificate(const Certificate& c) {
  std::cout << "verdict: " << to_string(c.verdict) << '\n';
  if (c.theorem) std::cout << "theorem: " << to_string(*c.theorem) << '\n';
  if (c.exceptional) std::cout << "exceptional: " << c.exceptional->to_string() << '\n';
  if (c.oracle_answer) std::cout << "oracle: " << (*c.oracle_answer ? "yes" : "no") << '\n';
  if (!c.witness.empty()) {
    std::cout << "witness: ";
    print_witness(c.witness);
  }
  for (const auto& [key, value] : c.evidence) std::cout << "  " << key << " = " << value << '\n';
  for (const auto& note : c.notes) std::cout << "  note: " << note << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral Hamiltonicity toolkit"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--seed", common.seed, "seed for random spaces");
  app.add_option("--jobs", common.jobs, "worker threads for campaigns")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", common.tolerance, "equality band for real thresholds")->check(CLI::PositiveNumber);
  app.add_flag("--json", common.json, "machine-readable output");

  std::string spec_text;
  bool edge_list = false;
  auto* gen = app.add_subcommand("gen", "emit a family graph as graph6");
  gen->add_option("spec", spec_text, "family spec, e.g. N:n=7,k=2")->required();
  gen->add_flag("--edges", edge_list, "edge-list output instead of graph6");

  std::string input;
  std::optional<int> k_opt;
  auto* spectral = app.add_subcommand("spectral", "spectral radii and the bound report");
  spectral->add_option("graph", input, "graph6 string or file")->required();
  spectral->add_option("-k", k_opt, "parameter of the Nikiforov bound (default: minimum degree)");

  bool bip = false;
  auto* closure = app.add_subcommand("closure", "closure or bipartite closure");
  closure->add_option("graph", input, "graph6 string")->required();
  closure->add_flag("--bipartite", bip, "bipartite closure over a balanced bipartition");

  bool path = false;
  std::uint64_t budget = OracleOptions{}.node_budget;
  auto* oracle = app.add_subcommand("oracle", "exact Hamilton cycle or path");
  oracle->add_option("graph", input, "graph6 string")->required();
  oracle->add_flag("--path", path, "look for a Hamilton path");
  oracle->add_option("--budget", budget, "backtracking node budget");

  bool use_oracle = false;
  auto* certify = app.add_subcommand("certify", "run the sufficient-condition cascade");
  certify->add_option("graph", input, "graph6 string")->required();
  certify->add_flag("--bipartite", bip, "balanced bipartite cascade");
  certify->add_flag("--path", path, "traceability cascade");
  certify->add_flag("--oracle", use_oracle, "resolve inconclusive cases exactly");

  std::string target_text;
  SpaceArgs space_args;
  auto* verify = app.add_subcommand("verify", "check a statement over a graph space");
  verify->add_option("target", target_text, "theorem id, <id>:path, or lemma name")->required();
  verify->add_option("-k", k_opt, "degree parameter");
  add_space_flags(verify, space_args);

  std::string objective_text;
  std::string constraint_text = "non_hamiltonian";
  int search_k = 0;
  auto* search = app.add_subcommand("search", "extremal value over non-Hamiltonian graphs of a space");
  search->add_option("objective", objective_text, "max_rho | max_q | min_rho_complement | min_rho_qc | min_q_qc")
      ->required();
  search->add_option("--constraint", constraint_text, "non_hamiltonian | non_traceable");
  search->add_option("-k", search_k, "minimum degree");
  add_space_flags(search, space_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CheckOptions check;
  check.tolerance = common.tolerance;
  std::cout << std::setprecision(12);

  try {
    if (*gen) {
      const FamilySpec spec = FamilySpec::parse(spec_text);
      const Graph g = construct(spec);
      if (common.json) {
        std::cout << nlohmann::json{{"spec", spec.to_string()},
                                    {"graph6", encode_graph6(g)},
                                    {"n", g.order()},
                                    {"e", g.edge_count()}}
                  << '\n';
      } else if (edge_list) {
        write_edge_list(std::cout, g);
      } else {
        std::cout << encode_graph6(g) << '\n';
      }
      return 0;
    }

    if (*spectral) {
      for (const Graph& g : read_graphs(input)) {
        const BoundReport rep = bound_report(g, k_opt);
        if (common.json) {
          nlohmann::json j = to_json(rep);
          j["graph6"] = encode_graph6(g);
          std::cout << j << '\n';
          continue;
        }
        std::cout << encode_graph6(g) << "  rho = " << rep.rho << "  q = " << rep.q << '\n';
        for (const auto& r : rep.records) {
          std::cout << "  " << std::left << std::setw(22) << to_string(r.id);
          if (r.applicable) {
            std::cout << (r.direction == BoundDirection::upper ? "<= " : ">= ") << r.bound_value
                      << "  slack " << r.slack << (r.satisfied ? "" : "  VIOLATED") << '\n';
          } else {
            std::cout << "n/a (" << r.reason << ")\n";
          }
        }
      }
      return 0;
    }

    if (*closure) {
      const Graph g = decode_graph6(input);
      Graph out;
      int rounds = 0;
      if (bip) {
        const auto r = bipartite_closure(as_bipartite(g));
        out = r.graph.to_graph();
        rounds = r.rounds;
      } else {
        const auto r = bc_closure(g);
        out = r.graph;
        rounds = r.rounds;
      }
      if (common.json) {
        std::cout << nlohmann::json{{"graph6", encode_graph6(out)}, {"rounds", rounds}} << '\n';
      } else {
        std::cout << encode_graph6(out) << "  (" << rounds << " edges added)\n";
      }
      return 0;
    }

    if (*oracle) {
      const Graph g = decode_graph6(input);
      OracleOptions opts;
      opts.node_budget = budget;
      const OracleResult r = path ? is_traceable(g, opts) : is_hamiltonian(g, opts);
      if (common.json) {
        nlohmann::json j = {{"status", to_string(r.status)}, {"nodes", r.nodes}, {"used_dp", r.used_dp}};
        j["witness"] = r.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.witness);
        std::cout << j << '\n';
      } else {
        std::cout << to_string(r.status) << "  (" << r.nodes << " nodes" << (r.used_dp ? ", subset DP" : "") << ")\n";
        if (r.found()) print_witness(r.witness);
      }
      return 0;
    }

    if (*certify) {
      const Graph g = decode_graph6(input);
      CertifyOptions opts;
      opts.use_oracle = use_oracle;
      opts.check = check;
      Certificate c;
      if (bip) {
        c = certify_bipartite_hamiltonicity(as_bipartite(g), opts);
      } else if (path) {
        c = certify_traceability(g, opts);
      } else {
        c = certify_hamiltonicity(g, opts);
      }
      if (common.json) {
        std::cout << to_json(c) << '\n';
      } else {
        print_certificate(c);
      }
      return 0;
    }

    if (*verify) {
      const Target target = Target::parse(target_text);
      VerifyOptions opts;
      opts.k = k_opt;
      opts.jobs = common.jobs;
      opts.check = check;
      const VerificationReport rep = verify_theorem(target, make_space(space_args, common.seed), opts);
      if (common.json) {
        for (const auto& line : report_lines(rep)) std::cout << line << '\n';
      } else {
        std::cout << rep.target << " over " << rep.space << '\n'
                  << "  examined          " << rep.examined << '\n'
                  << "  hypothesis held   " << rep.hypothesis_count << '\n'
                  << "  exceptional       " << rep.exceptional_matches << '\n'
                  << "  borderline        " << rep.borderline << '\n'
                  << "  undecided         " << rep.undecided.size() << '\n'
                  << "  counterexamples   " << rep.conclusion_failures.size() << '\n'
                  << "  wall time         " << rep.wall_seconds << " s\n";
        for (const auto& c : rep.conclusion_failures) std::cout << "  ! " << c.graph6 << '\n';
      }
      return rep.clean() ? 0 : 1;
    }

    if (*search) {
      const auto objective = objective_from_string(objective_text);
      const auto constraint = constraint_from_string(constraint_text);
      if (!objective || !constraint) throw DomainError("unknown objective or constraint");
      VerifyOptions opts;
      opts.jobs = common.jobs;
      opts.check = check;
      const ExtremalResult r = extremal_search(search_k, *objective, *constraint, make_space(space_args, common.seed), opts);
      if (common.json) {
        std::cout << to_json(r) << '\n';
      } else if (!r.best) {
        std::cout << "no feasible graph\n";
      } else {
        std::cout << "optimum " << *r.best << " (" << r.argmax.size() << " classes)\n";
        for (const auto& s : r.argmax) std::cout << "  " << s << '\n';
      }
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
