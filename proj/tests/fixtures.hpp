#pragma once

#include "chipres/graph.hpp"

#include <string>

namespace chipres::fixtures {

// Triangle with the orientation e1: u3->u2, e2: u2->u1, e3: u1->u3.
inline const char* k3_json = R"({
  "vertices": ["u1", "u2", "u3"],
  "edges": [["u3", "u2"], ["u2", "u1"], ["u1", "u3"]]
})";

// Four vertices, five edges; the running example with sink u4 and the
// orientation e1: u2->u1, e2: u4->u1, e3: u3->u2, e4: u4->u3, e5: u4->u2.
inline const char* fig_json = R"({
  "vertices": ["u1", "u2", "u3", "u4"],
  "edges": [["u2", "u1"], ["u4", "u1"], ["u3", "u2"], ["u4", "u3"], ["u4", "u2"]]
})";

inline const char* single_edge_json = R"({
  "vertices": ["u", "q"],
  "edges": [["u", "q"]]
})";

inline Multigraph k3() { return parse_graph(k3_json); }
inline Multigraph fig() { return parse_graph(fig_json); }
inline Multigraph single_edge() { return parse_graph(single_edge_json); }

}  // namespace chipres::fixtures
