#pragma once

#include <optional>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

// Joint colour refinement of both graphs followed by backtracking over
// same-coloured candidates. Intended for small graphs (n <= 16 or highly
// symmetric ones); no canonical forms are cached.
//
// Returns map with map[v] = image of vertex v of g in h.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace hamspec
