#pragma once

#include <json.hpp>
#include <vector>

#include "hamspec/certifier.hpp"
#include "hamspec/harness.hpp"
#include "hamspec/spectral.hpp"

namespace hamspec {

nlohmann::json to_json(const SpectralResult& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const TheoremCheck& c);
// {verdict, theorem, evidence, exceptional, witness} plus property, notes and
// the oracle answer when there is one.
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ExtremalResult& r);

// JSON-lines records {target, space, index?, verdict, detail}: one per
// counterexample or undecided graph, then a summary line.
std::vector<nlohmann::json> report_lines(const VerificationReport& r);

}  // namespace hamspec
