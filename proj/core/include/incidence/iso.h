#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incidence/torus.h"

namespace incidence {

// Orientation- and colour-preserving isomorphism of embedded graphs, a -> b.
struct GraphIso {
  std::map<std::string, std::string> vertex;
  std::vector<int> edge;  // edge index in a -> edge index in b
  std::vector<int> face;
};

// All isomorphisms, found by propagating a starting corner across faces and
// edges. Cocycles are ignored.
std::vector<GraphIso> map_isomorphisms(const TorusGraph& a, const TorusGraph& b);

struct Canonical {
  Config config;  // expected graph, cocycle and basis; labels from the input
  GraphIso iso;
  bool cocycle_matches = false;  // transported cocycle cohomologous to expected
};

// Finds an isomorphism from `c` onto `expected` under which every label of c
// is projectively equal to the expected label, and rebuilds c on the
// expected graph.
std::optional<Canonical> canonicalize(const Config& c, const Config& expected);

}  // namespace incidence
