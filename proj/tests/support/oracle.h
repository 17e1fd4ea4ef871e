#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "incidence/fixtures.h"
#include "incidence/moves.h"
#include "incidence/spectral.h"

namespace incidence::testing {

// Signed sum over dimer covers: every bijection black -> white realised by a
// choice of one edge per black, weighted by its permutation sign.
LaurentPoly2 dimer_expansion(const TorusGraph& g, const KasteleynAssignment& k);
long count_dimer_covers(const TorusGraph& g);

// Random nonzero rational p/q with |p| <= 9, 1 <= q <= 7.
Scalar random_unit(std::mt19937_64& rng);

// Every label multiplied by an independent random nonzero scalar.
Config rescale_labels(const Config& c, std::mt19937_64& rng);
// h(e) += phi(b) - phi(w) for a random integer potential phi.
Config add_coboundary(const Config& c, std::mt19937_64& rng);

// Pentagram fixture with random n in [5, 8], k in [2, n-2], 2k != n, and
// random parameters. For 2k = n the map sends P_i and P_{i+k} to one point.
Config random_pentagram_fixture(std::mt19937_64& rng);

// A random admissible move on c, or nullopt when none applies. Urban renewal
// on quadrilaterals with all corners of degree >= 3, remove2 on degree-2
// vertices, add2 on degree-4 blacks split 2+2 with the forced point.
std::optional<MoveStep> random_move(const Config& c, std::mt19937_64& rng);

// Point where the two arcs' lines meet, for a 2+2 split of black v.
HElem forced_split_point(const Config& c, const std::string& v, int start);

// Q_j on P_jP_{j+1}, read from windows shifted to contain the four labels.
bool spiral_condition(const SpiralSeed& ps, const LineSeed& ls, long j);

// Rational points of the curve p = 0 on the monomial curves
// lambda = s^a, mu = s^b (|a|, |b| <= reach) whose restriction, after removing
// the factor (s - 1)^m, is linear in s.
std::vector<SpectralPoint> monomial_curve_points(const LaurentPoly2& p, int reach);

bool labels_equal(const Config& a, const Config& b);

}  // namespace incidence::testing
