#include <doctest.h>

#include <algorithm>
#include <random>

#include "incidence/error.h"
#include "incidence/geom.h"
#include "support/oracle.h"

using namespace incidence;
using incidence::testing::random_unit;

namespace {

Scalar q(long p, long d = 1) { return Scalar::ratio(p, d); }
HElem P(long x, long y, long z = 1) { return make_point({q(x), q(y), q(z)}); }
HElem L(long a, long b, long c) { return make_hyperplane({q(a), q(b), q(c)}); }

HElem random_point(std::mt19937_64& rng, int d = 2) {
  Vec v;
  for (int i = 0; i <= d; ++i) v.push_back(random_unit(rng));
  return make_point(v);
}

HElem random_line(std::mt19937_64& rng) {
  HElem p = random_point(rng);
  return make_hyperplane(p.coords);
}

}  // namespace

TEST_CASE("normalize picks the primitive integer representative") {
  CHECK(normalize(P(2, 0, 4)).coords == Vec{q(1), q(0), q(2)});
  CHECK(normalize(P(0, -3, 0)).coords == Vec{q(0), q(1), q(0)});
  CHECK(normalize(make_point({q(1, 2), q(-1, 3), q(1)})).coords == Vec{q(3), q(-2), q(6)});
  CHECK_THROWS_AS(normalize(P(0, 0, 0)), Error);
  HElem once = normalize(P(6, -4, 10));
  CHECK(normalize(once).coords == once.coords);
}

TEST_CASE("pairing is the plain dot product") {
  CHECK(pairing(L(1, 0, -1), P(1, 0, 1)).is_zero());
  CHECK(pairing(L(2, 2, -1), P(0, 0, 1)) == q(-1));
  CHECK(pairing(L(1, 0, 0), P(0, 1, 0)).is_zero());
  CHECK_THROWS_AS(pairing(L(1, 0, 0), make_point({q(1), q(0), q(0), q(1)})), Error);
}

TEST_CASE("circuits") {
  CHECK(is_circuit({P(1, 0, 0), P(1, 0, 0)}));
  CHECK(is_circuit({P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)}));
  CHECK_FALSE(is_circuit({P(1, 0, 0), P(0, 1, 0), P(1, 1, 0), P(0, 0, 1)}));
  CHECK_FALSE(is_circuit({P(1, 0, 0), P(0, 1, 0)}));
  CHECK(is_circuit({P(1, 0, 1), P(0, 1, 1), P(0, 0, 1), P(1, 1, 1)}));
  CHECK_THROWS_AS(is_circuit({P(1, 0, 0)}), Error);
  CHECK_THROWS_AS(is_circuit({P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(1, 1, 1), P(1, 2, 3)}), Error);
}

TEST_CASE("circuit verdict is invariant under permutation and rescaling") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::vector<HElem> e{random_point(rng), random_point(rng), random_point(rng)};
    if (t % 2) e.push_back(random_point(rng));
    // Force a collinear triple half of the time.
    if (t % 4 == 0) e[2] = make_point({e[0].coords[0] + e[1].coords[0], e[0].coords[1] + e[1].coords[1], e[0].coords[2] + e[1].coords[2]});
    const bool v = is_circuit(e);
    std::vector<HElem> f = e;
    std::shuffle(f.begin(), f.end(), rng);
    for (auto& x : f) x = scaled(x, random_unit(rng));
    CHECK(is_circuit(f) == v);
  }
}

TEST_CASE("meet and span") {
  Subspace a = span({P(0, 0, 1), P(1, 0, 1)}), b = span({P(1, 1, 1), P(1, -1, 1)});
  Subspace m = meet(a, b);
  REQUIRE(m.rank() == 1);
  CHECK(proj_equal(m.element(), P(1, 0, 1)));
  CHECK(meet(a, a).rank() == 2);
  // Parallel affine lines y = 0 and y = 1 meet at infinity.
  HElem inf = intersect(L(0, 1, 0), L(0, 1, -1));
  CHECK(proj_equal(inf, P(1, 0, 0)));
  // Two coplanar lines in P^3.
  auto p3 = [](long x, long y, long z) { return make_point({q(x), q(y), q(z), q(1)}); };
  Subspace l1 = span({p3(0, 0, 0), p3(1, 1, 0)}), l2 = span({p3(1, 0, 0), p3(0, 1, 0)});
  CHECK(meet(l1, l2).rank() == 1);
  CHECK(proj_equal(meet(l1, l2).element(), make_point({q(1), q(1), q(0), q(2)})));
  CHECK_THROWS_AS(meet(span({p3(0, 0, 0), p3(1, 0, 0)}), span({p3(0, 1, 1), p3(0, 2, 1)})), Error);
}

TEST_CASE("modular identity for generic subspaces") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    std::vector<HElem> x, y;
    for (int i = 0; i < 1 + t % 3; ++i) x.push_back(random_point(rng, 3));
    for (int i = 0; i < 1 + (t / 3) % 3; ++i) y.push_back(random_point(rng, 3));
    Subspace a = span(x), b = span(y);
    std::vector<HElem> all = x;
    all.insert(all.end(), y.begin(), y.end());
    int meet_rank = 0;
    try {
      meet_rank = meet(a, b).rank();
    } catch (const Error& e) {
      CHECK(e.code() == Errc::EmptyMeet);
    }
    CHECK(meet_rank + span(all).rank() == a.rank() + b.rank());
  }
}

TEST_CASE("multi-ratio examples") {
  const HElem A = P(0, 0, 1), B = P(1, 0, 1), c = L(2, 2, -1), d = L(2, -2, -1);
  CHECK(multi_ratio({A, c}) == q(1));
  CHECK(multi_ratio({A, c, B, d}) == q(1));
  CHECK(face_coherent({A, c, B, d}));
  CHECK(multi_ratio({A, c, B, c}) == q(1));
  // x + y = 1 passes through B, so that tile has no multi-ratio.
  CHECK_THROWS_AS(face_coherent({A, L(1, 1, -1), B, L(1, -1, -2)}), Error);
  // x + y = 2 and x - y = 2 meet at (2, 0), on AB; x + y = 3 misses it.
  CHECK(face_coherent({A, L(1, 1, -2), B, L(1, -1, -2)}));
  CHECK_FALSE(face_coherent({A, L(1, 1, -3), B, L(1, -1, -2)}));
  CHECK_THROWS_AS(multi_ratio({A, L(1, 0, 0), B, d}), Error);
}

TEST_CASE("multi-ratio is a projective invariant of the cycle") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 3;
    std::vector<HElem> cyc;
    for (int i = 0; i < n; ++i) {
      cyc.push_back(random_point(rng));
      cyc.push_back(random_line(rng));
    }
    Scalar m;
    try {
      m = multi_ratio(cyc);
    } catch (const Error&) {
      continue;
    }
    std::vector<HElem> sc = cyc;
    for (auto& e : sc) e = scaled(e, random_unit(rng));
    CHECK(multi_ratio(sc) == m);
    std::vector<HElem> rot(cyc.begin() + 2, cyc.end());
    rot.push_back(cyc[0]);
    rot.push_back(cyc[1]);
    CHECK(multi_ratio(rot) == m);
    // Reversed orientation A_n, l_{n-1}, ..., A_1, l_n.
    std::vector<HElem> rev;
    for (int i = n - 1; i >= 0; --i) {
      rev.push_back(cyc[2 * i]);
      rev.push_back(cyc[2 * ((i + n - 1) % n) + 1]);
    }
    CHECK(multi_ratio(rev) * m == q(1));
  }
}

TEST_CASE("quadrilateral coherence is concurrency of AB, c, d") {
  std::mt19937_64 rng(14);
  int concurrent = 0;
  for (int t = 0; t < 60; ++t) {
    HElem A = random_point(rng), B = random_point(rng), c = random_line(rng), d = random_line(rng);
    if (t % 2) {
      // Make d pass through c ∩ AB.
      HElem X = intersect(line_through(A, B), c);
      HElem Y = random_point(rng);
      d = line_through(X, Y);
    }
    Scalar m;
    try {
      m = multi_ratio({A, c, B, d});
    } catch (const Error&) {
      continue;
    }
    const bool conc = rank({line_through(A, B).coords, c.coords, d.coords}) < 3;
    concurrent += conc;
    CHECK(face_coherent({A, c, B, d}) == conc);
  }
  CHECK(concurrent > 10);
}

TEST_CASE("hexagon coherence is Desargues perspectivity") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 20; ++t) {
    HElem O = random_point(rng);
    HElem A1 = random_point(rng), B1 = random_point(rng), C1 = random_point(rng);
    auto on = [&](const HElem& X) {
      Scalar s = random_unit(rng);
      Vec v;
      for (int i = 0; i < 3; ++i) v.push_back(O.coords[i] + s * X.coords[i]);
      return make_point(v);
    };
    HElem A2 = on(A1), B2 = on(B1), C2 = on(C1);
    if (t % 2) C2 = random_point(rng);
    const HElem a2 = line_through(B2, C2), b2 = line_through(A2, C2), c2 = line_through(A2, B2);
    const bool perspective = rank({line_through(A1, A2).coords, line_through(B1, B2).coords, line_through(C1, C2).coords}) < 3;
    CHECK(face_coherent({A1, b2, C1, a2, B1, c2}) == perspective);
    CHECK(perspective == (t % 2 == 0));
  }
}

TEST_CASE("circumscribed pair about yz = x^2") {
  PolygonPair pp = circumscribed_pair({q(-2), q(-1), q(0), q(1), q(2)});
  const HElem expP[] = {make_point({q(0), q(-4), q(1)}), make_point({q(-3, 2), q(2), q(1)}), make_point({q(-1, 2), q(0), q(1)}),
                        make_point({q(1, 2), q(0), q(1)}), make_point({q(3, 2), q(2), q(1)})};
  const HElem expQ[] = {P(-2, 4), P(-1, 1), P(0, 0), P(1, 1), P(2, 4)};
  for (int i = 0; i < 5; ++i) {
    CHECK(proj_equal(pp.P[i], expP[i]));
    CHECK(proj_equal(pp.Q[i], expQ[i]));
  }
  CHECK_THROWS_AS(circumscribed_pair({q(1), q(2), q(1)}), Error);
}

TEST_CASE("sides of the circumscribed polygon are tangent to the conic") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 10; ++t) {
    PolygonPair pp = circumscribed_pair(random_params(6 + t % 3, rng));
    const std::size_t n = pp.P.size();
    for (std::size_t i = 0; i < n; ++i) {
      HElem side = line_through(pp.P[i], pp.P[(i + 1) % n]);
      CHECK(pairing(side, pp.Q[i]).is_zero());
      // Substitute the line into x^2 = yz: with a x + b y + c z = 0 and the
      // conic point (t, t^2, 1), a t + b t^2 + c has zero discriminant.
      const Vec& l = side.coords;
      CHECK((l[0] * l[0] - q(4) * l[1] * l[2]).is_zero());
      CHECK(standard_conic().contains(pp.Q[i]));
    }
  }
}

TEST_CASE("float backend zero tests are relative") {
  BackendScope scope(Backend::Float, 1e-9);
  Scalar big = Scalar::from_double(1e12), tiny = Scalar::from_double(1e-3);
  CHECK_FALSE(tiny.is_zero());
  CHECK(((big + tiny) - big - tiny).is_zero());
  Scalar third = Scalar::from_double(1.0) / Scalar::from_double(3.0);
  CHECK((third * Scalar::from_double(3.0) - Scalar::from_double(1.0)).is_zero());
  HElem a = make_point({Scalar::from_double(0.1), Scalar::from_double(0.2), Scalar::from_double(0.3)});
  HElem b = make_point({Scalar::from_double(0.3), Scalar::from_double(0.6), Scalar::from_double(0.9)});
  CHECK(proj_equal(a, b));
}

TEST_CASE("scalar text round trip") {
  CHECK(Scalar::parse("-3/6").str() == "-1/2");
  CHECK(Scalar::parse("4").str() == "4");
  CHECK(Scalar::parse("0.25") == q(1, 4));
  CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse("x"), Error);
}
