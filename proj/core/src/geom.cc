#include "incidence/geom.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "incidence/error.h"

namespace incidence {

const char* kind_name(Kind k) { return k == Kind::Point ? "point" : "hyperplane"; }

std::string HElem::str() const {
  std::ostringstream os;
  os << (kind == Kind::Point ? "(" : "[");
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? ":" : "") << coords[i];
  os << (kind == Kind::Point ? ")" : "]");
  return os.str();
}

HElem make_point(Vec coords) { return HElem{std::move(coords), Kind::Point}; }
HElem make_hyperplane(Vec coords) { return HElem{std::move(coords), Kind::Hyperplane}; }

HElem affine_point(const Vec& xs) {
  Vec c = xs;
  c.push_back(Scalar(1L));
  return make_point(std::move(c));
}

static bool all_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

HElem normalize(const HElem& e) {
  if (e.coords.empty() || all_zero(e.coords)) throw Error(Errc::ZeroVector, "normalize " + e.str());
  HElem out = e;
  bool any_float = false;
  for (const auto& x : e.coords) any_float |= x.is_float();
  if (!any_float) {
    mpz_class l = 1, g = 0;
    for (const auto& x : e.coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& x : e.coords) {
      mpz_class v = x.rational().get_num() * (l / x.rational().get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      ints.push_back(v);
    }
    int lead = 0;
    for (const auto& v : ints)
      if (sgn(v) != 0) {
        lead = sgn(v);
        break;
      }
    for (std::size_t i = 0; i < ints.size(); ++i) out.coords[i] = Scalar(mpq_class(ints[i] / g * lead));
    return out;
  }
  double norm = 0;
  for (const auto& x : e.coords) norm += x.to_double() * x.to_double();
  norm = std::sqrt(norm);
  double lead = 0;
  for (const auto& x : e.coords)
    if (std::fabs(x.to_double()) > tolerance() * norm) {
      lead = x.to_double();
      break;
    }
  double f = (lead < 0 ? -1.0 : 1.0) / norm;
  for (auto& x : out.coords) x = Scalar::from_double(x.to_double() * f);
  return out;
}

HElem scaled(const HElem& e, const Scalar& s) {
  HElem out = e;
  for (auto& x : out.coords) x *= s;
  return out;
}

bool proj_equal(const HElem& a, const HElem& b) {
  if (a.kind != b.kind || a.coords.size() != b.coords.size()) return false;
  if (all_zero(a.coords) || all_zero(b.coords)) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    for (std::size_t j = i + 1; j < a.coords.size(); ++j)
      if (!(a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]).is_zero()) return false;
  return true;
}

Scalar pairing(const HElem& h, const HElem& p) {
  if (h.coords.size() != p.coords.size())
    throw Error(Errc::DimensionMismatch, "pairing " + h.str() + " with " + p.str());
  return dot(h.coords, p.coords);
}

static void check_uniform(const std::vector<HElem>& elems) {
  for (const auto& e : elems) {
    if (e.kind != elems[0].kind) throw Error(Errc::KindMismatch, "mixed points and hyperplanes");
    if (e.coords.size() != elems[0].coords.size()) throw Error(Errc::DimensionMismatch, "mixed ambient dimensions");
  }
}

static Mat rows_of(const std::vector<HElem>& elems) {
  Mat m;
  for (const auto& e : elems) m.push_back(e.coords);
  return m;
}

bool is_circuit(const std::vector<HElem>& elems) {
  if (elems.size() < 2) throw Error(Errc::TooFew, "circuit needs at least two elements");
  check_uniform(elems);
  const int n = static_cast<int>(elems.size());
  const int d = elems[0].dim();
  if (n > d + 2) throw Error(Errc::TooManyElements, std::to_string(n) + " elements in P^" + std::to_string(d));
  // With d+2 elements dependence is automatic; the subsets alone decide.
  if (n < d + 2 && rank(rows_of(elems)) != n - 1) return false;
  for (int skip = 0; skip < n; ++skip) {
    Mat m;
    for (int i = 0; i < n; ++i)
      if (i != skip) m.push_back(elems[i].coords);
    if (rank(m) != n - 1) return false;
  }
  return true;
}

HElem Subspace::element() const {
  if (rank() != 1) throw Error(Errc::DegenerateMeet, "subspace of rank " + std::to_string(rank()) + " is not a single element");
  return normalize(HElem{basis[0], kind});
}

Subspace span_of(Kind kind, int d, const Mat& rows) {
  Subspace s;
  s.kind = kind;
  s.ambient = d;
  s.basis = rref(rows, d + 1).rows;
  return s;
}

Subspace span(const std::vector<HElem>& elems) {
  if (elems.empty()) throw Error(Errc::TooFew, "span of nothing");
  check_uniform(elems);
  return span_of(elems[0].kind, elems[0].dim(), rows_of(elems));
}

static void check_pair(const Subspace& a, const Subspace& b) {
  if (a.kind != b.kind) throw Error(Errc::KindMismatch, "subspaces of different kinds");
  if (a.ambient != b.ambient) throw Error(Errc::DimensionMismatch, "subspaces of different ambient dimension");
}

Subspace join(const Subspace& a, const Subspace& b) {
  check_pair(a, b);
  Mat rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return span_of(a.kind, a.ambient, rows);
}

Subspace annihilator(const Subspace& s) {
  Kind dual = s.kind == Kind::Point ? Kind::Hyperplane : Kind::Point;
  return span_of(dual, s.ambient, kernel(s.basis, s.ambient + 1));
}

Subspace meet(const Subspace& a, const Subspace& b) {
  check_pair(a, b);
  Subspace both = join(annihilator(a), annihilator(b));
  Subspace m = annihilator(both);
  if (m.rank() == 0) throw Error(Errc::EmptyMeet, "subspaces meet only in zero");
  return m;
}

HElem line_through(const HElem& a, const HElem& b) {
  if (a.kind != Kind::Point || b.kind != Kind::Point) throw Error(Errc::KindMismatch, "line_through needs points");
  Subspace s = span({a, b});
  if (s.rank() != 2) throw Error(Errc::DegenerateIntersection, "coincident points " + a.str());
  Subspace h = annihilator(s);
  if (h.rank() != 1) throw Error(Errc::UnsupportedDimension, "line_through is a hyperplane only in the plane");
  return h.element();
}

HElem intersect(const HElem& l1, const HElem& l2) {
  if (l1.kind != Kind::Hyperplane || l2.kind != Kind::Hyperplane)
    throw Error(Errc::KindMismatch, "intersect needs hyperplanes");
  Subspace s = span({l1, l2});
  if (s.rank() != 2) throw Error(Errc::DegenerateIntersection, "coincident lines " + l1.str());
  Subspace p = annihilator(s);
  if (p.rank() != 1) throw Error(Errc::UnsupportedDimension, "intersect is a point only in the plane");
  return p.element();
}

Scalar multi_ratio(const std::vector<HElem>& input) {
  if (input.size() < 2 || input.size() % 2) throw Error(Errc::TooFew, "multi-ratio needs an even alternating cycle");
  std::vector<HElem> cyc = input;
  if (cyc[0].kind == Kind::Hyperplane) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
  const std::size_t n = cyc.size();
  Scalar num(1L), den(1L);
  for (std::size_t i = 0; i < n; i += 2) {
    const HElem& a = cyc[i];
    const HElem& l = cyc[i + 1];
    const HElem& next = cyc[(i + 2) % n];
    if (a.kind != Kind::Point || l.kind != Kind::Hyperplane || next.kind != Kind::Point)
      throw Error(Errc::KindMismatch, "multi-ratio cycle must alternate");
    Scalar p1 = pairing(l, a), p2 = pairing(l, next);
    if (p1.is_zero() || p2.is_zero())
      throw Error(Errc::VanishingPairing, "hyperplane " + l.str() + " passes through a neighbouring point");
    num *= p1;
    den *= p2;
  }
  return num / den;
}

bool face_coherent(const std::vector<HElem>& cycle) { return multi_ratio(cycle) == Scalar(1L); }

bool Conic::contains(const HElem& p) const {
  Scalar s(0L);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += p.coords[i] * matrix[i][j] * p.coords[j];
  return s.is_zero();
}

bool Conic::nondegenerate() const { return !determinant(matrix).is_zero(); }

Conic standard_conic() {
  Scalar z(0L), one(1L), h = Scalar(-1L) / Scalar(2L);
  return Conic{{{one, z, z}, {z, z, h}, {z, h, z}}};
}

HElem conic_point(const Scalar& t) { return make_point({t, t * t, Scalar(1L)}); }
HElem tangent_line(const Scalar& t) { return make_hyperplane({Scalar(-2L) * t, Scalar(1L), t * t}); }

PolygonPair circumscribed_pair(const std::vector<Scalar>& t) {
  const std::size_t n = t.size();
  if (n < 3) throw Error(Errc::BadParameters, "circumscribed_pair needs n >= 3");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t[i] == t[j]) throw Error(Errc::DuplicateParameter, "parameter " + t[i].str() + " repeated");
  PolygonPair out;
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& s = t[(i + n - 1) % n];
    out.P.push_back(normalize(make_point({(s + t[i]) / Scalar(2L), s * t[i], Scalar(1L)})));
    out.Q.push_back(normalize(conic_point(t[i])));
  }
  return out;
}

}  // namespace incidence
