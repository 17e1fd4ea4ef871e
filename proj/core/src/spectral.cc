#include "incidence/spectral.h"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "incidence/error.h"

namespace incidence {

namespace {

constexpr double kCurveTol = 1e-6;

int index_of(const std::vector<std::string>& v, const std::string& x) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) return static_cast<int>(i);
  return -1;
}

// Kernel of the neighbour-coordinate matrix around each vertex of `centres`.
KasteleynAssignment weights_around(const Config& c, const std::vector<std::string>& centres) {
  const TorusGraph& g = c.graph;
  KasteleynAssignment k;
  k.weights.assign(g.edges.size(), Scalar(0L));
  for (const auto& v : centres) {
    std::vector<int> inc = g.incident(v);
    if (inc.empty()) continue;
    const int n = static_cast<int>(inc.size());
    const int dim = c.d + 1;
    // Columns are the neighbours' coordinate vectors.
    Mat m(dim, Vec(n));
    for (int j = 0; j < n; ++j) {
      const HElem& e = c.label(g.other_end(inc[j], v));
      if (static_cast<int>(e.coords.size()) != dim) throw Error(Errc::DimensionMismatch, "label at " + g.other_end(inc[j], v));
      for (int i = 0; i < dim; ++i) m[i][j] = e.coords[i];
    }
    Mat ker = kernel(m, n);
    if (ker.size() != 1) throw Error(Errc::KernelNotOneDimensional, "vertex " + v + " has kernel dimension " + std::to_string(ker.size()));
    const Scalar first = ker[0][0];
    for (int j = 0; j < n; ++j) {
      if (ker[0][j].is_zero()) throw Error(Errc::KernelNotOneDimensional, "zero weight at vertex " + v);
      k.weights[inc[j]] = ker[0][j] / first;
    }
  }
  return k;
}

Scalar monomial_at(const SpectralPoint& pt, const H& h) { return pt.lambda.pow(h[0]) * pt.mu.pow(h[1]); }

}  // namespace

KasteleynAssignment kasteleyn_weights(const Config& c) { return weights_around(c, c.graph.black); }
KasteleynAssignment kasteleyn_weights_dual(const Config& c) { return weights_around(c, c.graph.white); }

std::vector<std::vector<LaurentPoly2>> kasteleyn_matrix(const TorusGraph& g, const KasteleynAssignment& k) {
  if (g.white.size() != g.black.size())
    throw Error(Errc::UnequalColorCounts, std::to_string(g.white.size()) + " whites, " + std::to_string(g.black.size()) + " blacks");
  std::vector<std::vector<LaurentPoly2>> m(g.black.size(), std::vector<LaurentPoly2>(g.white.size()));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& ed = g.edges[e];
    m[index_of(g.black, ed.b)][index_of(g.white, ed.w)].add_term(k.weights[e], ed.h[0], ed.h[1]);
  }
  return m;
}

Mat kasteleyn_matrix_at(const TorusGraph& g, const KasteleynAssignment& k, const SpectralPoint& pt) {
  if (g.white.size() != g.black.size()) throw Error(Errc::UnequalColorCounts, "colour counts differ");
  Mat m(g.black.size(), Vec(g.white.size(), Scalar(0L)));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& ed = g.edges[e];
    m[index_of(g.black, ed.b)][index_of(g.white, ed.w)] += k.weights[e] * monomial_at(pt, ed.h);
  }
  return m;
}

LaurentPoly2 determinant(const std::vector<std::vector<LaurentPoly2>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly2::constant(Scalar(1L));
  if (n > 20) throw Error(Errc::SizeMismatch, "matrix too large for cofactor expansion");
  // memo[mask] = det of rows popcount(mask).. over the columns not in mask
  std::unordered_map<unsigned, LaurentPoly2> memo;
  auto rec = [&](auto&& self, unsigned used) -> LaurentPoly2 {
    const int r = std::popcount(used);
    if (r == n) return LaurentPoly2::constant(Scalar(1L));
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    LaurentPoly2 acc;
    int free_before = 0;
    for (int col = 0; col < n; ++col) {
      if (used & (1u << col)) continue;
      if (!m[r][col].is_zero()) {
        LaurentPoly2 minor = self(self, used | (1u << col));
        if (!minor.is_zero()) {
          LaurentPoly2 t = m[r][col] * minor;
          if (free_before % 2) acc -= t;
          else acc += t;
        }
      }
      ++free_before;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0u);
}

LaurentPoly2 spectral_polynomial(const TorusGraph& g, const KasteleynAssignment& k) {
  return determinant(kasteleyn_matrix(g, k));
}

LaurentPoly2 spectral_polynomial(const Config& c) { return spectral_polynomial(c.graph, kasteleyn_weights(c)); }

LaurentPoly2 spectral_polynomial_dual(const Config& c) {
  const TorusGraph& g = c.graph;
  KasteleynAssignment k = kasteleyn_weights_dual(c);
  if (g.white.size() != g.black.size()) throw Error(Errc::UnequalColorCounts, "colour counts differ");
  std::vector<std::vector<LaurentPoly2>> m(g.white.size(), std::vector<LaurentPoly2>(g.black.size()));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& ed = g.edges[e];
    m[index_of(g.white, ed.w)][index_of(g.black, ed.b)].add_term(k.weights[e], -ed.h[0], -ed.h[1]);
  }
  return determinant(m);
}

bool on_curve(const LaurentPoly2& p, const SpectralPoint& pt) {
  Scalar v = p.eval(pt.lambda, pt.mu);
  if (!v.is_float()) return v.sign() == 0;
  const double scale = p.magnitude_at(pt.lambda, pt.mu);
  return std::fabs(v.to_double()) <= kCurveTol * (scale > 0 ? scale : 1.0);
}

Mat kernel_at(const TorusGraph& g, const KasteleynAssignment& k, const SpectralPoint& pt) {
  Mat m = kasteleyn_matrix_at(g, k, pt);
  Mat ker = kernel(m, static_cast<int>(g.white.size()));
  if (ker.empty()) throw Error(Errc::EmptyKernel, "matrix is invertible at this point");
  return ker;
}

const char* reconstruction_name(Reconstruction r) {
  switch (r) {
    case Reconstruction::Unique: return "Unique";
    case Reconstruction::NonUnique: return "NonUnique";
    case Reconstruction::NoSolution: return "NoSolution";
  }
  return "?";
}

ReconstructResult reconstruct_black(const Config& white, const SpectralPoint& pt, const std::optional<Vec>& black_values) {
  const TorusGraph& g = white.graph;
  const int dim = white.d + 1;
  KasteleynAssignment kw = kasteleyn_weights(white);
  Mat ker = kernel_at(g, kw, pt);
  if (ker.size() != 1) throw Error(Errc::KernelDegenerate, "kernel dimension " + std::to_string(ker.size()));
  for (const auto& x : ker[0])
    if (x.is_zero()) throw Error(Errc::KernelDegenerate, "kernel vector has a zero entry");
  const Vec& f = ker[0];
  if (black_values && black_values->size() != g.black.size())
    throw Error(Errc::SizeMismatch, "one black value per black vertex expected");

  ReconstructResult res;
  const std::size_t nb = g.black.size();
  std::vector<std::optional<Vec>> cov(nb);

  // Affine rows from the edges of black b.
  auto edge_system = [&](std::size_t b, Mat& a, Vec& rhs) {
    const Scalar fb = black_values ? (*black_values)[b] : Scalar(1L);
    for (int e : g.incident(g.black[b])) {
      const Edge& ed = g.edges[e];
      a.push_back(white.label(ed.w).coords);
      rhs.push_back(monomial_at(pt, ed.h) * f[index_of(g.white, ed.w)] / fb);
    }
  };

  // Directly determined blacks first.
  for (std::size_t b = 0; b < nb; ++b) {
    if (g.degree(g.black[b]) < dim + 1) continue;
    Mat a;
    Vec rhs;
    edge_system(b, a, rhs);
    auto sol = solve(a, rhs, dim);
    if (!sol) {
      res.status = Reconstruction::NoSolution;
      res.diagnosis = "inconsistent system at " + g.black[b];
      return res;
    }
    if (sol->nullspace.empty()) {
      cov[b] = sol->particular;
      res.trace.push_back("solved " + g.black[b] + " directly");
    }
  }

  // Propagate through whites whose neighbour hyperplanes are dependent.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t b = 0; b < nb; ++b) {
      if (cov[b]) continue;
      Mat a;
      Vec rhs;
      edge_system(b, a, rhs);
      std::vector<std::string> via;
      for (int e : g.incident(g.black[b])) {
        const std::string& w = g.edges[e].w;
        if (g.degree(w) > dim) continue;
        Mat known;
        bool single = true;
        for (int e2 : g.incident(w)) {
          const int b2 = index_of(g.black, g.edges[e2].b);
          if (static_cast<std::size_t>(b2) == b) continue;
          if (!cov[b2]) {
            single = false;
            break;
          }
          known.push_back(*cov[b2]);
        }
        if (!single || known.empty()) continue;
        bool dup = false;
        for (const auto& s : via) dup = dup || s == w;
        if (dup) continue;
        via.push_back(w);
        for (auto& v : kernel(known, dim)) {
          a.push_back(v);
          rhs.push_back(Scalar(0L));
        }
      }
      if (via.empty()) continue;
      auto sol = solve(a, rhs, dim);
      if (!sol) {
        res.status = Reconstruction::NoSolution;
        res.diagnosis = "inconsistent constraints at " + g.black[b];
        return res;
      }
      if (!sol->nullspace.empty()) continue;
      cov[b] = sol->particular;
      std::string msg = "solved " + g.black[b] + " via";
      for (const auto& w : via) msg += " " + w;
      res.trace.push_back(msg);
      progress = true;
    }
  }

  for (std::size_t b = 0; b < nb; ++b)
    if (!cov[b]) res.unsolved.push_back(g.black[b]);
  if (!res.unsolved.empty()) {
    res.status = Reconstruction::NonUnique;
    res.diagnosis = "underdetermined after propagation";
    return res;
  }

  Config out = white;
  for (std::size_t b = 0; b < nb; ++b) {
    bool nonzero = false;
    for (const auto& x : *cov[b]) nonzero = nonzero || !x.is_zero();
    if (!nonzero) {
      res.status = Reconstruction::NoSolution;
      res.diagnosis = "zero covector at " + g.black[b];
      return res;
    }
    out.labels[g.black[b]] = make_hyperplane(*cov[b]);
  }
  VReport vr = check_V(out);
  FReport fr = check_F(out);
  if (!vr.ok || !fr.ok) {
    res.status = Reconstruction::NoSolution;
    res.diagnosis = vr.ok ? "reconstructed data fails face coherence" : "reconstructed data fails circuit conditions";
    return res;
  }
  res.status = Reconstruction::Unique;
  res.config = std::move(out);
  return res;
}

}  // namespace incidence
