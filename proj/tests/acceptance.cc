// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "incidence/error.h"
#include "incidence/fixtures.h"
#include "incidence/iso.h"
#include "support/oracle.h"

using namespace incidence;
using namespace incidence::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Failure accumulator; keeps the first few messages.
struct Check {
  bool ok = true;
  int failures = 0;
  std::ostringstream msg;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures++ < 3) msg << what << "; ";
  }
  Outcome done(const std::string& summary) {
    return {ok, ok ? summary : summary + " | " + std::to_string(failures) + " failures: " + msg.str()};
  }
};

bool coherent(const Config& c) { return check_V(c).ok && check_F(c).ok; }

std::vector<Config> coherent_fixtures() {
  std::vector<Config> out{pentagon_fixture(), spiral_fixture(), qnet_fixture()};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 6; ++i) out.push_back(random_pentagram_fixture(rng));
  out.push_back(pentagram_step(pentagon_fixture(), 2).config);
  out.push_back(spiral_step(spiral_fixture(), 2, 5, 1).config);
  return out;
}

Outcome move_preservation() {
  Check ck;
  std::mt19937_64 rng(0);
  std::vector<Config> fixtures;
  for (int i = 0; i < 100; ++i) fixtures.push_back(random_pentagram_fixture(rng));
  fixtures.push_back(qnet_fixture());
  int applied = 0, degenerate = 0;
  int count[3] = {0, 0, 0};
  for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
    Config c = fixtures[fi];
    ck.expect(coherent(c), "fixture " + std::to_string(fi) + " not coherent");
    for (int step = 0; step < 8; ++step) {
      auto mv = random_move(c, rng);
      if (!mv) break;
      try {
        c = apply_step(c, *mv).config;
      } catch (const Error& e) {
        if (e.code() == Errc::DegenerateMeet) {
          ++degenerate;
          continue;
        }
        ck.expect(false, "fixture " + std::to_string(fi) + " " + move_name(mv->op) + " " + mv->target + ": " + e.what());
        break;
      }
      ++applied;
      ++count[static_cast<int>(mv->op)];
      bool ok = false;
      try {
        ok = coherent(c);
      } catch (const Error& e) {
        ck.expect(false, e.what());
      }
      ck.expect(ok, "fixture " + std::to_string(fi) + " after " + move_name(mv->op) + " " + mv->target);
    }
  }
  return ck.done(std::to_string(fixtures.size()) + " fixtures, " + std::to_string(applied) + " moves (urban " +
                 std::to_string(count[0]) + ", remove2 " + std::to_string(count[1]) + ", add2 " +
                 std::to_string(count[2]) + "), " + std::to_string(degenerate) + " degenerate skipped");
}

Outcome pentagram_theorem() {
  Check ck;
  std::mt19937_64 rng(1);
  int cases = 0;
  std::string degenerate;
  for (int n = 5; n <= 9; ++n)
    for (int k = 2; k <= n - 2; ++k) {
      PolygonPair pp = circumscribed_pair(random_params(n, rng));
      Polygon P = pp.P, Q = pp.Q;
      if (2 * k == n) {
        // T_k glues P'_i and P'_{i+k}; the second iterate is undefined for
        // every polygon and must be reported as a located error.
        bool raised = false;
        try {
          pentagram_map(pentagram_map(P, k), k);
        } catch (const Error& e) {
          raised = e.code() == Errc::DegenerateIntersection;
        }
        ck.expect(raised, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " degeneracy not reported");
        degenerate += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
        continue;
      }
      for (int m = 0; m <= 5; ++m) {
        ck.expect(is_inscribed(Q, P), "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
        ++cases;
        P = pentagram_map(P, k);
        Q = pentagram_map(Q, k);
      }
    }
  return ck.done(std::to_string(cases) + " inscription checks; non-generic n=2k pairs, map undefined:" + degenerate);
}

bool same_elems(const std::vector<HElem>& a, const std::vector<HElem>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!proj_equal(a[i], b[i])) return false;
  return true;
}

bool same_window(const QNetWindow& moved, const QNetWindow& direct, int& compared) {
  for (const auto& [s, v] : direct.values) {
    auto it = moved.values.find(s);
    if (it == moved.values.end()) continue;
    ++compared;
    if (!proj_equal(it->second, v)) return false;
  }
  return true;
}

Outcome cross_validation() {
  Check ck;
  std::mt19937_64 rng(2);
  int steps = 0;
  for (int n = 5; n <= 8; ++n)
    for (int k = 2; k <= n - 2; ++k) {
      if (2 * k == n) continue;
      Config c = pentagram_fixture(k, random_params(n, rng));
      for (int m = 0; m < 2; ++m) {
        Polygon P = pentagram_map(pentagram_points(c), k);
        LineList q = dual_pentagram_map(pentagram_lines(c), k);
        try {
          c = pentagram_step(c, k).config;
        } catch (const Error& e) {
          ck.expect(false, std::string("pentagram ") + e.what());
          break;
        }
        ++steps;
        ck.expect(same_elems(pentagram_points(c), P) && same_elems(pentagram_lines(c), q),
                  "pentagram n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  Config sp = spiral_fixture();
  for (long base = 1; base < 5; ++base) {
    SpiralSeed ps = spiral_extend(spiral_points(sp, 2, 5, base), 1);
    LineSeed ls = line_extend(spiral_lines(sp, 2, 5, base), 1);
    try {
      sp = spiral_step(sp, 2, 5, base).config;
    } catch (const Error& e) {
      ck.expect(false, std::string("spiral ") + e.what());
      break;
    }
    ++steps;
    ck.expect(same_elems(spiral_points(sp, 2, 5, base + 1).points, ps.points) &&
                  same_elems(spiral_lines(sp, 2, 5, base + 1).lines, ls.lines),
              "spiral base " + std::to_string(base));
  }
  Config qn = qnet_fixture();
  int compared = 0;
  for (int m = 0; m < 2; ++m) {
    QNetWindow f = laplace(qnet_points(qn, kQNetSide, kQNetSide, 1));
    QNetWindow G = dual_laplace(qnet_planes(qn, kQNetSide, kQNetSide, 1));
    try {
      qn = qnet_step(qn, kQNetSide, kQNetSide).config;
    } catch (const Error& e) {
      ck.expect(false, std::string("qnet ") + e.what());
      break;
    }
    ++steps;
    ck.expect(same_window(qnet_points(qn, kQNetSide, kQNetSide, 1), f, compared) &&
                  same_window(qnet_planes(qn, kQNetSide, kQNetSide, 1), G, compared),
              "qnet step " + std::to_string(m));
  }
  return ck.done(std::to_string(steps) + " scripted steps matched, " + std::to_string(compared) + " Q-net labels compared");
}

Outcome spectral_membership() {
  Check ck;
  int n = 0;
  for (const Config& c : coherent_fixtures()) {
    CohomologyClass cl = cohomology_class(c);
    LaurentPoly2 p = spectral_polynomial(c);
    ck.expect(p.eval(cl.lambda, cl.mu).is_zero(), "fixture " + std::to_string(n) + " class " + cl.lambda.str() + "," + cl.mu.str());
    ++n;
  }
  return ck.done(std::to_string(n) + " fixtures on their curves");
}

Outcome determinant_oracle() {
  Check ck;
  std::vector<Config> fixtures{pentagon_fixture(), spiral_fixture()};
  std::mt19937_64 rng(3);
  for (int k : {2, 4}) fixtures.push_back(pentagram_fixture(k, random_params(6, rng)));
  fixtures.push_back(pentagram_fixture(3, random_params(5, rng)));
  int graphs = 0, terms = 0;
  for (const Config& c : fixtures) {
    if (c.graph.white.size() > 6) continue;
    KasteleynAssignment kw = kasteleyn_weights(c);
    std::vector<KasteleynAssignment> ws{kw};
    // Same graph with random weights.
    KasteleynAssignment rnd = kw;
    for (auto& w : rnd.weights) w = random_unit(rng);
    ws.push_back(rnd);
    for (const auto& w : ws) {
      LaurentPoly2 a = spectral_polynomial(c.graph, w), b = dimer_expansion(c.graph, w);
      ck.expect(!b.is_zero() && a.normalized() == b.normalized(), "graph " + std::to_string(graphs));
      ck.expect(a == b, "unnormalized mismatch on graph " + std::to_string(graphs));
      terms += static_cast<int>(b.terms().size());
      ++graphs;
    }
  }
  return ck.done(std::to_string(graphs) + " weighted graphs, " + std::to_string(terms) + " terms compared");
}

Outcome reconstruction_round_trip() {
  Check ck;
  for (const Config& c : {pentagon_fixture(), spiral_fixture()}) {
    CohomologyClass cl = cohomology_class(c);
    ReconstructResult r = reconstruct_black(strip_black(c), {cl.lambda, cl.mu});
    ck.expect(r.status == Reconstruction::Unique, std::string("status ") + reconstruction_name(r.status) + " " + r.diagnosis);
    if (!r.config) continue;
    for (const auto& b : c.graph.black) ck.expect(proj_equal(r.config->label(b), c.label(b)), "label " + b);
  }
  GridFixture gf = grid_minus_edge_fixture();
  ReconstructResult r = reconstruct_black(gf.white, gf.point);
  ck.expect(r.status == Reconstruction::NonUnique, std::string("grid status ") + reconstruction_name(r.status));
  return ck.done("pentagon, spiral recovered; grid-minus-edge NonUnique");
}

Outcome spiral_propagation() {
  Check ck;
  const int k = 2, n = 5, steps = 20;
  SpiralSeed ps = spiral_fixture_points();
  LineSeed ls = spiral_fixture_lines();
  const long base = ps.base;
  // Exactly 2n + 1 - k conditions are what the fixture satisfies.
  int given = 0;
  for (long j = base; j <= base + 2 * n - k; ++j) given += spiral_condition(ps, ls, j);
  ck.expect(given == 2 * n + 1 - k, "fixture satisfies " + std::to_string(given) + " conditions");
  Config c = build_spiral_config(ps, ls);
  ck.expect(coherent(c), "fixture config");
  int validated = 0;
  for (int dir : {1, -1}) {
    for (int m = 1; m <= steps; ++m) {
      SpiralSeed p = spiral_extend(ps, dir * m);
      LineSeed l = line_extend(ls, dir * m);
      bool ok = validate_spiral_seed(p).ok && validate_line_seed(l).ok && coherent(build_spiral_config(p, l));
      for (long j = p.base; j <= p.base + 2 * n - k; ++j) ok = ok && spiral_condition(p, l, j);
      ck.expect(ok, "extension " + std::to_string(dir * m));
      ++validated;
    }
  }
  // Forward steps through the moves as well.
  for (int m = 0; m < steps; ++m) {
    try {
      c = spiral_step(c, k, n, base + m).config;
      ck.expect(coherent(c), "moved step " + std::to_string(m + 1));
    } catch (const Error& e) {
      ck.expect(false, e.what());
      break;
    }
  }
  return ck.done(std::to_string(validated) + " extended windows validated, " + std::to_string(steps) + " moved steps");
}

bool has_infinite(const QNetWindow& w) {
  for (const auto& [s, v] : w.values)
    if (v.coords.back().is_zero()) return true;
  return false;
}

Outcome qnet_closure() {
  Check ck;
  QNetLayers L = qnet_layers_fixture(7);
  QNetWindow f = L.f, g = L.g;
  int infinite = 0;
  for (int m = 0; m <= 4; ++m) {
    ck.expect(is_qnet(f).ok && is_qnet(g).ok, "Q-net at step " + std::to_string(m));
    ck.expect(is_f_transform(f, g), "F-transform at step " + std::to_string(m));
    infinite += has_infinite(f) + has_infinite(g);
    if (m == 4) break;
    try {
      f = laplace(f);
      g = laplace(g);
    } catch (const Error& e) {
      ck.expect(false, e.what());
      break;
    }
  }
  ck.expect(infinite > 0, "no point at infinity met");
  Config c = qnet_fixture();
  int torus_inf = has_infinite(qnet_points(c, kQNetSide, kQNetSide, 0));
  for (int m = 0; m < 4; ++m) {
    try {
      c = qnet_step(c, kQNetSide, kQNetSide).config;
      ck.expect(coherent(c), "torus step " + std::to_string(m + 1));
      torus_inf += has_infinite(qnet_points(c, kQNetSide, kQNetSide, 0));
    } catch (const Error& e) {
      ck.expect(false, e.what());
      break;
    }
  }
  ck.expect(torus_inf > 0, "torus fixture met no point at infinity");
  return ck.done("4 Laplace steps on layers and torus, " + std::to_string(infinite + torus_inf) + " layers with points at infinity");
}

Outcome gauge_invariance() {
  Check ck;
  std::mt19937_64 rng(9);
  int trials = 0;
  std::vector<Config> fixtures{pentagon_fixture(), spiral_fixture(), qnet_fixture(), random_pentagram_fixture(rng),
                               grid_minus_edge_fixture().white};
  for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
    const Config& c = fixtures[fi];
    const bool white_only = c.labels.size() == c.graph.white.size();
    bool v0 = false, f0 = false;
    CohomologyClass cl0;
    if (!white_only) {
      v0 = check_V(c).ok;
      f0 = check_F(c).ok;
      cl0 = cohomology_class(c);
    }
    LaurentPoly2 p0 = spectral_polynomial(c).normalized();
    for (int t = 0; t < 50; ++t) {
      Config x = add_coboundary(rescale_labels(c, rng), rng);
      ++trials;
      const std::string tag = "fixture " + std::to_string(fi) + " trial " + std::to_string(t);
      if (!white_only) {
        ck.expect(check_V(x).ok == v0 && check_F(x).ok == f0, tag + " verdicts");
        CohomologyClass cl = cohomology_class(x);
        ck.expect(cl.lambda == cl0.lambda && cl.mu == cl0.mu, tag + " class");
      }
      ck.expect(spectral_polynomial(x).normalized() == p0, tag + " polynomial");
    }
  }
  return ck.done(std::to_string(trials) + " gauge trials");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const Criterion all[] = {
      {1, "move preservation", 30, move_preservation},
      {2, "pentagram theorem", 10, pentagram_theorem},
      {3, "move/formula cross-validation", 20, cross_validation},
      {4, "spectral membership", 10, spectral_membership},
      {5, "determinant oracle", 60, determinant_oracle},
      {6, "reconstruction round trip", 10, reconstruction_round_trip},
      {7, "spiral propagation", 10, spiral_propagation},
      {8, "Q-net closure", 10, qnet_closure},
      {9, "gauge invariance", 30, gauge_invariance},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget;
    const bool pass = o.ok && in_time;
    failed += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.budget);
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << (in_time ? "" : " over budget")
              << ") " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
