#pragma once

#include "lcorbit/simple_graph.hpp"

namespace lcorbit::detail {

// Exact k-colourability by SAT, without the heuristic front end.
bool sat_colourable(const SimpleGraph& g, int k);

}  // namespace lcorbit::detail
