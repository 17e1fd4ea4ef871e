#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incidence/laurent.h"
#include "incidence/linalg.h"
#include "incidence/torus.h"

namespace incidence {

// One weight per edge of the graph, indexed like TorusGraph::edges.
struct KasteleynAssignment {
  std::vector<Scalar> weights;
};

struct SpectralPoint {
  Scalar lambda, mu;
};

// Per black vertex: the dependency among its white neighbours' points, with
// the first incident edge scaled to 1.
KasteleynAssignment kasteleyn_weights(const Config& c);
// Colours swapped: dependencies among black hyperplanes around each white.
KasteleynAssignment kasteleyn_weights_dual(const Config& c);

// Rows are blacks, columns whites, entry sum of w(e) lambda^h1 mu^h2.
std::vector<std::vector<LaurentPoly2>> kasteleyn_matrix(const TorusGraph& g, const KasteleynAssignment& k);
Mat kasteleyn_matrix_at(const TorusGraph& g, const KasteleynAssignment& k, const SpectralPoint& pt);

// Determinant by cofactor expansion memoized over column subsets.
LaurentPoly2 determinant(const std::vector<std::vector<LaurentPoly2>>& m);
LaurentPoly2 spectral_polynomial(const TorusGraph& g, const KasteleynAssignment& k);
LaurentPoly2 spectral_polynomial(const Config& c);
// Transposed matrix from black data; exponents negated so both curves use
// the same orientation of the torus.
LaurentPoly2 spectral_polynomial_dual(const Config& c);

bool on_curve(const LaurentPoly2& p, const SpectralPoint& pt);

// Kernel basis of the evaluated matrix, one entry per white.
Mat kernel_at(const TorusGraph& g, const KasteleynAssignment& k, const SpectralPoint& pt);

enum class Reconstruction { Unique, NonUnique, NoSolution };
const char* reconstruction_name(Reconstruction r);

struct ReconstructResult {
  Reconstruction status = Reconstruction::NoSolution;
  std::optional<Config> config;  // set when Unique
  std::vector<std::string> trace;
  std::vector<std::string> unsolved;
  std::string diagnosis;
};

// Black labels from white data and a curve point. `black_values` overrides the
// default f = 1 on black vertices (one entry per black, in graph order).
ReconstructResult reconstruct_black(const Config& white, const SpectralPoint& pt,
                                    const std::optional<Vec>& black_values = std::nullopt);

}  // namespace incidence
