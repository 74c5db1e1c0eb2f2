#include "hamspec/serialize.hpp"

#include "hamspec/families.hpp"

namespace hamspec {

using nlohmann::json;

json to_json(const SpectralResult& r) {
  return {{"value", r.value}, {"method", to_string(r.method)}, {"residual", r.residual}, {"iterations", r.iterations}};
}

json to_json(const BoundReport& r) {
  json records = json::array();
  for (const auto& b : r.records) {
    json j = {{"id", to_string(b.id)},
              {"direction", b.direction == BoundDirection::upper ? "upper" : "lower"},
              {"applicable", b.applicable}};
    if (b.applicable) {
      j["bound"] = b.bound_value;
      j["measured"] = b.measured_value;
      j["slack"] = b.slack;
      j["satisfied"] = b.satisfied;
    } else {
      j["reason"] = b.reason;
    }
    records.push_back(std::move(j));
  }
  return {{"rho", r.rho}, {"q", r.q}, {"all_satisfied", r.all_satisfied()}, {"bounds", std::move(records)}};
}

json to_json(const TheoremCheck& c) {
  json j = {{"theorem", to_string(c.theorem)},
            {"property", to_string(c.property)},
            {"k", c.k},
            {"status", to_string(c.status)},
            {"boundary", c.boundary},
            {"evidence", c.evidence},
            {"notes", c.notes}};
  j["exceptional"] = c.exceptional ? json(c.exceptional->to_string()) : json(nullptr);
  return j;
}

json to_json(const Certificate& c) {
  json j = {{"verdict", to_string(c.verdict)},
            {"property", to_string(c.property)},
            {"evidence", c.evidence},
            {"notes", c.notes}};
  j["theorem"] = c.theorem ? json(to_string(*c.theorem)) : json(nullptr);
  j["exceptional"] = c.exceptional ? json(c.exceptional->to_string()) : json(nullptr);
  j["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
  if (c.oracle_answer) j["oracle_answer"] = *c.oracle_answer;
  return j;
}

json to_json(const ExtremalResult& r) {
  json j = {{"argmax", r.argmax},
            {"examined", r.examined},
            {"oracle_calls", r.oracle_calls},
            {"undecided", r.undecided},
            {"wall_seconds", r.wall_seconds}};
  j["best"] = r.best ? json(*r.best) : json(nullptr);
  return j;
}

std::vector<json> report_lines(const VerificationReport& r) {
  std::vector<json> out;
  for (const auto& c : r.conclusion_failures) {
    out.push_back({{"target", r.target},
                   {"space", r.space},
                   {"index", c.index},
                   {"verdict", "counterexample"},
                   {"detail", {{"graph6", c.graph6}}}});
  }
  for (const auto& c : r.undecided) {
    out.push_back({{"target", r.target},
                   {"space", r.space},
                   {"index", c.index},
                   {"verdict", "undecided"},
                   {"detail", {{"graph6", c.graph6}, {"reason", "oracle budget exhausted"}}}});
  }
  out.push_back({{"target", r.target},
                 {"space", r.space},
                 {"verdict", !r.conclusion_failures.empty() ? "counterexamples"
                             : r.undecided.empty()            ? "clean"
                                                              : "undecided"},
                 {"detail",
                  {{"examined", r.examined},
                   {"hypothesis_count", r.hypothesis_count},
                   {"failures", r.conclusion_failures.size()},
                   {"undecided", r.undecided.size()},
                   {"exceptional_matches", r.exceptional_matches},
                   {"exceptional_by_family", r.exceptional_by_family},
                   {"borderline", r.borderline},
                   {"wall_seconds", r.wall_seconds}}}});
  return out;
}

}  // namespace hamspec
