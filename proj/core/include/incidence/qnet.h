#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "incidence/pentagram.h"

namespace incidence {

using Site = std::pair<long, long>;

// Points (or planes) of P^3 on the sites (i, j) with i + j = parity mod 2.
struct QNetWindow {
  int parity = 0;
  std::map<Site, HElem> values;
};

struct QNetReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// The four neighbours of every fully surrounded opposite-parity site are
// dependent (coplanar points, or concurrent planes).
QNetReport is_qnet(const QNetWindow& w);
// f'_{i,j} = <f_{i-1,j}, f_{i,j-1}> ∩ <f_{i+1,j}, f_{i,j+1}> on every fully
// surrounded opposite-parity site.
QNetWindow laplace(const QNetWindow& f);
// g_{i,j} = intersection of the four surrounding planes.
QNetWindow qstar_points(const QNetWindow& G);
// G'_{i,j} = <G_{i-1,j} ∩ G_{i,j+1}, G_{i+1,j} ∩ G_{i,j-1}>.
QNetWindow dual_laplace(const QNetWindow& G);
// f_{i,j}, g_{i,j}, f_{i+1,j±1}, g_{i+1,j±1} coplanar wherever defined.
bool is_f_transform(const QNetWindow& f, const QNetWindow& g);
// Plane through the four g points around each opposite-parity site.
QNetWindow planes_of(const QNetWindow& g);

std::string qnet_vertex(bool white, long i, long j);

// Square lattice on an a x b torus (a, b even, >= 4). Whites carry f, blacks G.
Config build_qnet_config(const QNetWindow& f, const QNetWindow& G, int a, int b);
// Labels of the config as windows on [lo, a+hi) x [lo, b+hi), repeated periodically.
QNetWindow qnet_points(const Config& c, int a, int b, int pad);
QNetWindow qnet_planes(const Config& c, int a, int b, int pad);

// Urban renewal on the squares whose anti-diagonal corners carry f, then
// removal of the old vertices.
MoveScript qnet_step_script(int a, int b, int parity);
StepResult qnet_step(const Config& c, int a, int b, bool validate = false);

}  // namespace incidence
