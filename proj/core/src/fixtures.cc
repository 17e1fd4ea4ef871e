#include "incidence/fixtures.h"

#include <algorithm>

#include "incidence/error.h"
#include "incidence/linalg.h"

namespace incidence {

namespace {

Scalar q(long p, long d = 1) { return Scalar::ratio(p, d); }

HElem pt(std::initializer_list<Scalar> xs) { return make_point(Vec(xs)); }
HElem ln(std::initializer_list<Scalar> xs) { return make_hyperplane(Vec(xs)); }

}  // namespace

Config pentagram_fixture(int k, const std::vector<Scalar>& params) {
  PolygonPair pp = circumscribed_pair(params);
  return build_pentagram_config(pp.P, lines_of(pp.Q, k), k);
}

Config pentagon_fixture() { return pentagram_fixture(2, {q(0), q(1), q(3), q(-2), q(-1, 2)}); }

std::vector<Scalar> random_params(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 5);
  std::vector<Scalar> out;
  while (static_cast<int>(out.size()) < n) {
    Scalar s = q(num(rng), den(rng));
    if (std::none_of(out.begin(), out.end(), [&](const Scalar& x) { return x == s; })) out.push_back(s);
  }
  return out;
}

// Found by choosing P1..P4, P5 = t P4 and solving for t and the class so
// that a coherent line seed exists; here (lambda, mu) = (-3, -1/3).
SpiralSeed spiral_fixture_points() {
  return {2, 5, 1,
          {pt({q(0), q(0), q(1)}), pt({q(4), q(0), q(1)}), pt({q(5), q(3), q(1)}), pt({q(2), q(5), q(1)}),
           pt({q(-12, 5), q(-6), q(1)}), pt({q(120), q(72), q(54, 5)})}};
}

LineSeed spiral_fixture_lines() {
  return {2, 5, 1,
          {ln({q(395, 2508), q(-313, 3762), q(-5, 11)}), ln({q(-15, 836), q(787, 3762), q(-5, 11)}),
           ln({q(-425, 2508), q(559, 3762), q(5, 33)}), ln({q(775, 2508), q(-307, 1254), q(-35, 33)}),
           ln({q(835, 2508), q(-157, 418), q(-5, 11)}), ln({q(-805, 2508), q(331, 3762), q(25, 33)})}};
}

Config spiral_fixture() { return build_spiral_config(spiral_fixture_points(), spiral_fixture_lines()); }

Config qnet_fixture() {
  const int a = kQNetSide;
  // u_1 and v_0 are midpoints of their neighbours: the lines meeting at (1, 0)
  // are parallel.
  const long u[] = {0, 1, 2, -3}, v[] = {1, 4, 6, -2};
  const Vec centre{q(1, 2), q(1, 3), q(7), q(1)}, w{q(1), q(2), q(-1), q(3)};
  auto wrap = [a](long x) { return ((x % a) + a) % a; };
  QNetWindow f, g;
  for (long i = -2; i < a + 2; ++i)
    for (long j = -2; j < a + 2; ++j) {
      if (((i + j) % 2 + 2) % 2) continue;
      const long x = u[wrap(i)], y = v[wrap(j)];
      Vec p{q(x), q(y), q(x * y), q(1)};
      f.values[{i, j}] = make_point(p);
      // Central collineation p -> p + (w . p) centre.
      const Scalar s = dot(w, p);
      Vec gp;
      for (int r = 0; r < 4; ++r) gp.push_back(p[r] + s * centre[r]);
      g.values[{i, j}] = make_point(gp);
    }
  QNetWindow G = planes_of(g);
  QNetWindow Gd;
  Gd.parity = G.parity;
  for (const auto& [s, val] : G.values)
    if (s.first >= -1 && s.first <= a && s.second >= -1 && s.second <= a) Gd.values[s] = val;
  QNetWindow fd;
  for (const auto& [s, val] : f.values)
    if (s.first >= 0 && s.first < a && s.second >= 0 && s.second < a) fd.values[s] = val;
  return build_qnet_config(fd, Gd, a, a);
}

QNetLayers qnet_layers_fixture(int radius) {
  using ST = std::pair<long, long>;
  std::map<ST, HElem> f, g;
  const long R = radius;
  auto plane3 = [](const HElem& x, const HElem& y, const HElem& z) {
    Subspace p = annihilator(span({x, y, z}));
    if (p.rank() != 1) throw Error(Errc::DegenerateMeet, "three points on a line");
    return p.element();
  };
  // A point of the plane with prescribed x and y.
  auto on_plane = [](const HElem& pl, const Scalar& x, const Scalar& y) {
    const Vec& c = pl.coords;
    if (c[2].is_zero()) throw Error(Errc::DegenerateMeet, "vertical plane");
    return make_point({x, y, -(c[0] * x + c[1] * y + c[3]) / c[2], q(1)});
  };
  // f: free boundary rows, then each quad closed by a prescribed (x, y).
  for (long s = -R; s <= R; ++s) f[{s, -R}] = make_point({q(s), q(s * s - 3), q(s * s * s + 10, 5), q(1)});
  for (long t = -R + 1; t <= R; ++t) f[{-R, t}] = make_point({q(t * t + 3, 3), q(t), q(t * t * t - t), q(1)});
  auto affine = [](const HElem& p) {
    Vec x;
    for (int r = 0; r < 3; ++r) x.push_back(p.coords[r] / p.coords[3]);
    return x;
  };
  for (long s = -R; s < R; ++s)
    for (long t = -R; t < R; ++t) {
      if (s == 0 && t == 0) {
        // Opposite sides of this quad parallel: its Laplace point is at infinity.
        Vec a = affine(f[{s, t}]), b = affine(f[{s, t + 1}]), c = affine(f[{s + 1, t}]);
        Vec d;
        for (int r = 0; r < 3; ++r) d.push_back(c[r] + q(2) * (b[r] - a[r]));
        d.push_back(q(1));
        f[{s + 1, t + 1}] = make_point(d);
        continue;
      }
      f[{s + 1, t + 1}] = on_plane(plane3(f[{s, t}], f[{s + 1, t}], f[{s, t + 1}]), q(s * t + 3, t - s + 31), q(s - 2 * t, 7));
    }
  // Cauchy data on the two boundary rows, then one cube at a time.
  g[{-R, -R}] = make_point({q(1), q(2), q(5), q(1)});
  for (long s = -R; s < R; ++s)
    g[{s + 1, -R}] = on_plane(plane3(f[{s, -R}], f[{s + 1, -R}], g[{s, -R}]), q(s + 3), q(2 * s - 1));
  for (long t = -R; t < R; ++t)
    g[{-R, t + 1}] = on_plane(plane3(f[{-R, t}], f[{-R, t + 1}], g[{-R, t}]), q(1 - t), q(t + 4, 2));
  for (long s = -R; s < R; ++s)
    for (long t = -R; t < R; ++t) {
      HElem a = plane3(f[{s + 1, t + 1}], f[{s + 1, t}], g[{s + 1, t}]);
      HElem b = plane3(f[{s + 1, t + 1}], f[{s, t + 1}], g[{s, t + 1}]);
      HElem c = plane3(g[{s, t}], g[{s + 1, t}], g[{s, t + 1}]);
      Subspace p = annihilator(span({a, b, c}));
      if (p.rank() != 1) throw Error(Errc::DegenerateMeet, "cube closure is not a point");
      g[{s + 1, t + 1}] = p.element();
    }
  QNetLayers out;
  out.f.parity = out.g.parity = 0;
  for (const auto& [st, v] : f) out.f.values[{st.first + st.second, st.first - st.second}] = v;
  for (const auto& [st, v] : g) out.g.values[{st.first + st.second, st.first - st.second}] = v;
  return out;
}

GridFixture grid_minus_edge_fixture() {
  const int n = 7, k = 2;
  // P3 = P0 + 2 (P1 - P0): the three remaining neighbours of q0 are collinear.
  const long xy[7][2] = {{-2, 0}, {-3, 1}, {-2, -4}, {-4, 2}, {-3, -3}, {-2, 1}, {3, 3}};
  GridFixture out;
  Config& c = out.white;
  c.graph = pentagram_graph(n, k);
  c.d = 2;
  for (int i = 0; i < n; ++i) c.labels[pentagram_white(i)] = make_point({q(xy[i][0]), q(xy[i][1]), q(1)});
  for (std::size_t e = 0; e < c.graph.edges.size(); ++e)
    if (c.graph.edges[e].b == pentagram_black(0) && c.graph.edges[e].w == pentagram_white(k)) {
      remove_edge_merging_faces(c.graph, static_cast<int>(e));
      break;
    }
  c.basis = find_basis_cycles(c.graph);
  // (1, 1) is a triple point of every curve; along lambda = s, mu = s^-2 the
  // curve has width four, so the remaining root s = 13/24 is rational.
  const Scalar s = q(13, 24);
  out.point = {s, Scalar(1L) / (s * s)};
  return out;
}

Config strip_black(const Config& c) {
  Config out = c;
  for (const auto& b : c.graph.black) out.labels.erase(b);
  return out;
}

}  // namespace incidence
