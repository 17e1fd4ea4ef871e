#include <doctest.h>

#include <random>

#include "incidence/error.h"
#include "support/oracle.h"

using namespace incidence;
using namespace incidence::testing;

namespace {

Scalar q(long p, long d = 1) { return Scalar::ratio(p, d); }

// One white, one black, three parallel edges.
TorusGraph one_by_one() {
  TorusGraph g;
  g.white = {"w"};
  g.black = {"b"};
  g.edges = {{"w", "b", {0, 0}}, {"w", "b", {1, 0}}, {"w", "b", {0, 1}}};
  return g;
}

Config star(const std::vector<HElem>& pts) {
  Config c;
  c.d = 2;
  c.graph.black = {"x"};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string id = "a" + std::to_string(i);
    c.graph.white.push_back(id);
    c.graph.edges.push_back({id, "x", {0, 0}});
    c.labels[id] = pts[i];
  }
  return c;
}

bool proportional(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return proj_equal(make_point(a), make_point(b));
}

}  // namespace

TEST_CASE("1x1 determinant and its Newton polygon") {
  TorusGraph g = one_by_one();
  KasteleynAssignment k{{q(2), q(3), q(-5)}};
  LaurentPoly2 p = spectral_polynomial(g, k);
  LaurentPoly2 want = LaurentPoly2::constant(q(2)) + LaurentPoly2::monomial(q(3), 1, 0) + LaurentPoly2::monomial(q(-5), 0, 1);
  CHECK(p == want);
  CHECK(newton_polygon(p) == std::vector<Exponent>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(newton_polygon(LaurentPoly2::monomial(q(7), 2, -1)) == std::vector<Exponent>{{2, -1}});
  CHECK_THROWS_AS(newton_polygon(LaurentPoly2{}), Error);

  // a + b lambda + c mu vanishes at lambda = -(a + c mu0) / b.
  const Scalar mu0 = q(3, 7);
  CHECK(on_curve(p, {-(q(2) + q(-5) * mu0) / q(3), mu0}));
  CHECK_FALSE(on_curve(p, {q(2), q(2)}));
  CHECK(kernel_at(g, k, {-(q(2) + q(-5) * mu0) / q(3), mu0}).size() == 1);
  CHECK_THROWS_AS(kernel_at(g, k, {q(2), q(2)}), Error);
}

TEST_CASE("graph without a dimer cover has zero determinant") {
  TorusGraph g;
  g.white = {"w1", "w2"};
  g.black = {"b1", "b2"};
  g.edges = {{"w1", "b1", {0, 0}}, {"w1", "b2", {1, 0}}, {"w1", "b2", {0, 1}}};
  KasteleynAssignment k{{q(1), q(2), q(3)}};
  CHECK(spectral_polynomial(g, k).is_zero());
  CHECK(dimer_expansion(g, k).is_zero());
  CHECK(count_dimer_covers(g) == 0);
  TorusGraph odd = g;
  odd.black.pop_back();
  CHECK_THROWS_AS(spectral_polynomial(odd, k), Error);
}

TEST_CASE("Kasteleyn weights are the circuit dependency") {
  Config c = star({make_point({q(1), q(0), q(0)}), make_point({q(0), q(1), q(0)}), make_point({q(1), q(1), q(0)})});
  CHECK(proportional(kasteleyn_weights(c).weights, {q(1), q(1), q(-1)}));
  Config two = star({make_point({q(1), q(2), q(3)}), make_point({q(-2), q(-4), q(-6)})});
  CHECK(proportional(two.graph.edges.size() == 2 ? kasteleyn_weights(two).weights : Vec{}, {q(2), q(1)}));
  Config bad = star({make_point({q(1), q(0), q(0)}), make_point({q(0), q(1), q(0)}), make_point({q(0), q(0), q(1)})});
  CHECK_THROWS_AS(kasteleyn_weights(bad), Error);
}

TEST_CASE("weights satisfy the black relations and scale inversely") {
  std::mt19937_64 rng(41);
  for (const Config& c : {pentagon_fixture(), spiral_fixture(), qnet_fixture()}) {
    KasteleynAssignment k = kasteleyn_weights(c);
    for (const auto& b : c.graph.black) {
      Vec sum(static_cast<std::size_t>(c.d + 1));
      for (int e : c.graph.incident(b)) {
        CHECK_FALSE(k.weights[e].is_zero());
        for (int r = 0; r <= c.d; ++r) sum[r] += k.weights[e] * c.label(c.graph.edges[e].w).coords[r];
      }
      for (const auto& x : sum) CHECK(x.is_zero());
    }
    // Rescaling one white by s rescales its weights by 1/s relative to the
    // rest of each black's relation.
    Config r = c;
    const std::string w = c.graph.white[0];
    const Scalar s = random_unit(rng);
    r.labels[w] = scaled(c.label(w), s);
    KasteleynAssignment kr = kasteleyn_weights(r);
    for (const auto& b : c.graph.black) {
      std::vector<int> inc = c.graph.incident(b);
      Vec want, got;
      for (int e : inc) {
        want.push_back(c.graph.edges[e].w == w ? k.weights[e] / s : k.weights[e]);
        got.push_back(kr.weights[e]);
      }
      CHECK(proportional(want, got));
    }
  }
}

TEST_CASE("determinant equals the dimer expansion") {
  std::mt19937_64 rng(42);
  std::vector<Config> graphs{pentagon_fixture(), spiral_fixture()};
  for (int k : {2, 4}) graphs.push_back(pentagram_fixture(k, random_params(6, rng)));
  Config p = pentagon_fixture();
  graphs.push_back(add_degree2(p, pentagram_black(3), 0, 2, forced_split_point(p, pentagram_black(3), 0)).config);
  for (const Config& c : graphs) {
    REQUIRE(c.graph.white.size() <= 6);
    CHECK(count_dimer_covers(c.graph) > 0);
    for (int t = 0; t < 5; ++t) {
      KasteleynAssignment k = kasteleyn_weights(c);
      if (t) for (auto& w : k.weights) w = random_unit(rng);
      LaurentPoly2 a = spectral_polynomial(c.graph, k), b = dimer_expansion(c.graph, k);
      CHECK(a == b);
      CHECK(newton_polygon(a) == newton_polygon(b));
    }
  }
}

TEST_CASE("normalized curve is a gauge invariant") {
  std::mt19937_64 rng(43);
  for (const Config& c : {pentagon_fixture(), spiral_fixture()}) {
    const LaurentPoly2 ref = spectral_polynomial(c).normalized();
    KasteleynAssignment k = kasteleyn_weights(c);
    for (int t = 0; t < 10; ++t) {
      CHECK(spectral_polynomial(rescale_labels(c, rng)).normalized() == ref);
      CHECK(spectral_polynomial(add_coboundary(c, rng)).normalized() == ref);
      KasteleynAssignment kb = k;
      for (const auto& b : c.graph.black) {
        const Scalar s = random_unit(rng);
        for (int e : c.graph.incident(b)) kb.weights[e] *= s;
      }
      CHECK(spectral_polynomial(c.graph, kb).normalized() == ref);
    }
  }
}

TEST_CASE("coherent fixtures lie on their curves") {
  std::mt19937_64 rng(44);
  std::vector<Config> fx{pentagon_fixture(), spiral_fixture(), qnet_fixture()};
  for (int i = 0; i < 8; ++i) fx.push_back(random_pentagram_fixture(rng));
  for (const Config& c : fx) {
    CohomologyClass cl = cohomology_class(c);
    CHECK(on_curve(spectral_polynomial(c), {cl.lambda, cl.mu}));
  }
  Config c = pentagon_fixture();
  CohomologyClass cl = cohomology_class(c);
  Mat ker = kernel_at(c.graph, kasteleyn_weights(c), {cl.lambda, cl.mu});
  REQUIRE(ker.size() == 1);
  for (const auto& x : ker[0]) CHECK_FALSE(x.is_zero());
}

TEST_CASE("reconstruction round trip") {
  std::mt19937_64 rng(45);
  for (const Config& c : {pentagon_fixture(), spiral_fixture()}) {
    CohomologyClass cl = cohomology_class(c);
    ReconstructResult r = reconstruct_black(strip_black(c), {cl.lambda, cl.mu});
    REQUIRE(r.status == Reconstruction::Unique);
    REQUIRE(r.config.has_value());
    CHECK(labels_equal(*r.config, c));
    CHECK(check_V(*r.config).ok);
    CHECK(check_F(*r.config).ok);
    r.config->basis = c.basis;
    CohomologyClass back = cohomology_class(*r.config);
    CHECK(back.lambda == cl.lambda);
    CHECK(back.mu == cl.mu);
    // Another choice of f on the blacks gives proportional covectors.
    Vec alt;
    for (std::size_t i = 0; i < c.graph.black.size(); ++i) alt.push_back(random_unit(rng));
    ReconstructResult r2 = reconstruct_black(strip_black(c), {cl.lambda, cl.mu}, alt);
    REQUIRE(r2.config.has_value());
    CHECK(labels_equal(*r2.config, c));
  }
}

TEST_CASE("spiral reconstruction order") {
  Config c = spiral_fixture();
  CohomologyClass cl = cohomology_class(c);
  ReconstructResult r = reconstruct_black(strip_black(c), {cl.lambda, cl.mu});
  std::vector<std::string> want{"solved q1 directly", "solved q2 directly", "solved q3 directly"};
  REQUIRE(r.trace.size() == 6);
  for (int i = 0; i < 3; ++i) CHECK(r.trace[i] == want[i]);
  CHECK(r.trace[3].rfind("solved q5 via", 0) == 0);
  CHECK(r.trace[4].rfind("solved q0 via", 0) == 0);
  CHECK(r.trace[5].rfind("solved q4 via", 0) == 0);
}

TEST_CASE("grid minus an edge has no unique preimage") {
  GridFixture gf = grid_minus_edge_fixture();
  CHECK(on_curve(spectral_polynomial(gf.white), gf.point));
  ReconstructResult r = reconstruct_black(gf.white, gf.point);
  CHECK(r.status == Reconstruction::NonUnique);
  CHECK_FALSE(r.unsolved.empty());
}

TEST_CASE("reconstruction off the curve") {
  Config c = strip_black(pentagon_fixture());
  try {
    reconstruct_black(c, {q(2), q(3)});
    FAIL("expected EmptyKernel");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyKernel);
  }
}

TEST_CASE("rational curve points found by monomial substitution") {
  Config c = pentagon_fixture();
  LaurentPoly2 p = spectral_polynomial(c);
  std::vector<SpectralPoint> pts = monomial_curve_points(p, 3);
  CHECK_FALSE(pts.empty());
  for (const auto& pt : pts) CHECK(on_curve(p, pt));
}

TEST_CASE("distinct curve points give distinct black data") {
  // Real points; the pentagon curve has almost no rational ones.
  BackendScope fl(Backend::Float, 1e-9);
  Config c = pentagon_fixture();
  LaurentPoly2 p = spectral_polynomial(c);
  int compared = 0;
  for (double mu : {-2.5, -0.7, 0.4, 1.8, 3.2}) {
    for (double lambda : real_lambda_roots(p, mu)) {
      const SpectralPoint pt{Scalar::from_double(lambda), Scalar::from_double(mu)};
      CHECK(p.eval(pt.lambda, pt.mu).to_double() == doctest::Approx(0.0).epsilon(1e-6).scale(p.magnitude_at(pt.lambda, pt.mu)));
      ReconstructResult r = reconstruct_black(strip_black(c), pt);
      REQUIRE(r.status == Reconstruction::Unique);
      ++compared;
      CHECK_FALSE(labels_equal(*r.config, c));
      CHECK(check_V(*r.config).ok);
      r.config->basis = c.basis;
      CohomologyClass back = cohomology_class(*r.config);
      CHECK(back.lambda.to_double() == doctest::Approx(lambda).epsilon(1e-6));
      CHECK(back.mu.to_double() == doctest::Approx(mu).epsilon(1e-6));
    }
  }
  CHECK(compared >= 10);
}

TEST_CASE("Laurent polynomial JSON round trip") {
  LaurentPoly2 p = spectral_polynomial(spiral_fixture());
  CHECK(LaurentPoly2::from_json(p.to_json()) == p);
  LaurentPoly2 n = p.normalized();
  CHECK(n.normalized() == n);
}

TEST_CASE("dual curve on uniform-degree fixtures") {
  std::mt19937_64 rng(46);
  std::vector<Config> fx{pentagon_fixture(), qnet_fixture()};
  for (int i = 0; i < 4; ++i) fx.push_back(random_pentagram_fixture(rng));
  for (const Config& c : fx) {
    CHECK(spectral_polynomial_dual(c).normalized() == spectral_polynomial(c).normalized());
    CohomologyClass cl = cohomology_class(c);
    CHECK(on_curve(spectral_polynomial_dual(c), {cl.lambda, cl.mu}));
  }
  // The spiral mixes degree-3 and degree-4 vertices; there the two curves
  // differ and the class point is off the dual one.
  Config s = spiral_fixture();
  CHECK_FALSE(spectral_polynomial_dual(s).normalized() == spectral_polynomial(s).normalized());
}
