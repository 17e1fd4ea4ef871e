#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incidence/geom.h"

namespace incidence {

using H = std::array<long, 2>;

// Edge from a white to a black vertex. `h` is the homology cocycle of the
// edge oriented white -> black.
struct Edge {
  std::string w, b;
  H h{0, 0};
};

// Clockwise face boundary: edges[j] joins verts[j] and verts[j+1] (cyclic).
struct Face {
  std::string id;
  std::vector<std::string> verts;
  std::vector<int> edges;
};

struct TorusGraph {
  std::vector<std::string> white, black;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  bool is_white(const std::string& v) const;
  bool is_black(const std::string& v) const;
  bool has_vertex(const std::string& v) const { return is_white(v) || is_black(v); }
  // Incident edges in stored order.
  std::vector<int> incident(const std::string& v) const;
  int degree(const std::string& v) const { return static_cast<int>(incident(v).size()); }
  std::string other_end(int edge, const std::string& v) const;
  int face_index(const std::string& id) const;
  // Cyclic order of edges around v (derived from face corners), starting at
  // v's first stored incident edge.
  std::vector<int> rotation(const std::string& v) const;
};

// Rotation-invariant key of a cyclic vertex sequence; the default face id.
std::string face_key(const std::vector<std::string>& verts);
// Fills face edge lists from vertex lists. Parallel edges are assigned greedily,
// each edge once per traversal direction.
void infer_face_edges(TorusGraph& g);

struct GraphReport {
  bool valid = true;
  std::vector<std::string> violations;
  int whites = 0, blacks = 0, v = 0, e = 0, f = 0, euler = 0;
};
GraphReport validate_graph(const TorusGraph& g);
// Deletes edge e and joins the two faces it separated; the merged face gets
// the default id.
void remove_edge_merging_faces(TorusGraph& g, int e);

// Signed h-sum of a closed walk given as consecutive edge indices.
struct Walk {
  std::string start;
  H hsum{0, 0};
};
Walk trace_walk(const TorusGraph& g, const std::vector<int>& edges);

struct BasisCycles {
  std::vector<int> z1, z2;
};

// Points on white vertices, hyperplanes on black vertices.
struct Config {
  TorusGraph graph;
  int d = 2;
  std::map<std::string, HElem> labels;
  std::optional<BasisCycles> basis;

  const HElem& label(const std::string& v) const;
};

struct VertexFailure {
  std::string vertex;
  std::string reason;
};

struct VReport {
  bool ok = true;
  std::vector<VertexFailure> failures;
};
VReport check_V(const Config& c);

struct FReport {
  bool ok = true;
  std::vector<std::string> failing_faces;
  // Exactly one incoherent face cannot happen for consistent data.
  bool single_failure_flag = false;
};
FReport check_F(const Config& c);

// Alternating label cycle of a face in stored order.
std::vector<HElem> face_cycle(const Config& c, const Face& f);

struct CohomologyClass {
  Scalar lambda, mu;
};
Scalar walk_period(const Config& c, const std::vector<int>& edges);
CohomologyClass cohomology_class(const Config& c, const std::vector<int>& z1, const std::vector<int>& z2);
// Uses the stored basis cycles when present, else fundamental cycles of a
// spanning tree.
CohomologyClass cohomology_class(const Config& c);

struct DimensionReport {
  long equations = 0, parameters = 0, expected_dim = 0;
};
DimensionReport dimension_report(const TorusGraph& g, int d);
// Counts-only variant for surfaces of other genus.
DimensionReport dimension_report(long k, long e, long f, int d, long euler);

// Two cocycles on the same graph differ by a coboundary.
bool cohomologous(const TorusGraph& g, const std::vector<H>& h1, const std::vector<H>& h2);

// Pairs (h-sum, edge list) of fundamental cycles of a BFS spanning tree.
struct FundamentalCycle {
  H hsum{0, 0};
  std::vector<int> edges;
};
std::vector<FundamentalCycle> fundamental_cycles(const TorusGraph& g);

// Two closed walks whose h-sums form a basis of Z^2, or nullopt if the
// period lattice is not all of Z^2.
std::optional<BasisCycles> find_basis_cycles(const TorusGraph& g);

}  // namespace incidence
