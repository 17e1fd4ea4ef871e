#pragma once

#include <random>
#include <vector>

#include "incidence/qnet.h"
#include "incidence/spectral.h"
#include "incidence/spiral.h"

namespace incidence {

// Polygon circumscribed about the conic y = x^2 with tangency parameters t_i,
// its tangency points Q and q_i = Q_iQ_{i+k}.
Config pentagram_fixture(int k, const std::vector<Scalar>& params);
Config pentagon_fixture();
// n distinct rationals p/q with small numerators and denominators.
std::vector<Scalar> random_params(int n, std::mt19937_64& rng);

// Coherent spiral with k = 2, n = 5 on the window at base 1.
Config spiral_fixture();
SpiralSeed spiral_fixture_points();
LineSeed spiral_fixture_lines();

// f = (u_i, v_j, u_i v_j) on a 4 x 4 torus, planes through the image of f
// under a central collineation. One Laplace point is at infinity.
Config qnet_fixture();
constexpr int kQNetSide = 4;

// Two consecutive layers of a 3D Q-net on the square |s|, |t| <= radius, stored
// at i = s + t, j = s - t. Both layers come from Cauchy data; one quad of f has
// parallel opposite sides, so its first Laplace transform has a point at
// infinity.
struct QNetLayers {
  QNetWindow f, g;
};
QNetLayers qnet_layers_fixture(int radius);

// Pentagram graph n = 7, k = 2 without the edge q0-P2: a square grid on the
// torus minus one edge. White data only, and a rational point on its curve.
struct GridFixture {
  Config white;
  SpectralPoint point;
};
GridFixture grid_minus_edge_fixture();

Config strip_black(const Config& c);

}  // namespace incidence
