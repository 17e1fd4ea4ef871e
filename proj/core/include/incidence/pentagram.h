#pragma once

#include <string>
#include <vector>

#include "incidence/moves.h"
#include "incidence/torus.h"

namespace incidence {

using Polygon = std::vector<HElem>;   // points, cyclic
using LineList = std::vector<HElem>;  // lines, cyclic

// P'_i = P_iP_{i+k} ∩ P_{i+1}P_{i+k+1}.
Polygon pentagram_map(const Polygon& P, int k);
// q'_i = <q_i ∩ q_{i+1}, q_{i+k} ∩ q_{i+k+1}>.
LineList dual_pentagram_map(const LineList& q, int k);
// Q_i = q_i ∩ q_{i-k}.
Polygon vertices_of(const LineList& q, int k);
// q_i = Q_iQ_{i+k}.
LineList lines_of(const Polygon& Q, int k);
// Q_i on the side P_iP_{i+1} for every i.
bool is_inscribed(const Polygon& Q, const Polygon& P);

std::string pentagram_white(int i);
std::string pentagram_black(int i);
// Face ids of the two face families, indexed by j.
std::string pentagram_face1(int n, int k, int j);  // q_{j-k} P_{j+1} q_j P_j
std::string pentagram_face2(int n, int k, int j);  // P_j q_j P_{j+k} q_{j-1}

// Template graph on n whites P_j and n blacks q_m, with q_m adjacent to
// P_m, P_{m+1}, P_{m+k}, P_{m+k+1}.
TorusGraph pentagram_graph(int n, int k);
Config build_pentagram_config(const Polygon& P, const LineList& q, int k);
// Labels read back from a config built on the template.
Polygon pentagram_points(const Config& c);
LineList pentagram_lines(const Config& c);

// Urban renewal at every second face, then removal of the old vertices.
MoveScript pentagram_step_script(int n, int k);

struct StepResult {
  Config config;               // rebuilt on the template graph
  bool cocycle_matches = false;
  std::vector<TraceEntry> trace;
};
// One step through the moves, matched against the direct formulas. Throws
// LabelMismatch when no isomorphism carries the move result to them.
StepResult pentagram_step(const Config& c, int k, bool validate = false);

}  // namespace incidence
