#pragma once

#include <string>
#include <utility>
#include <vector>

#include "incidence/linalg.h"

namespace incidence {

enum class Kind { Point, Hyperplane };

const char* kind_name(Kind k);

// A point or hyperplane of P^d as a coordinate vector of length d+1.
struct HElem {
  Vec coords;
  Kind kind = Kind::Point;

  int dim() const { return static_cast<int>(coords.size()) - 1; }
  bool is_point() const { return kind == Kind::Point; }
  std::string str() const;
};

HElem make_point(Vec coords);
HElem make_hyperplane(Vec coords);
// Affine point (x, y, ...) lifted with a trailing 1.
HElem affine_point(const Vec& xs);

HElem normalize(const HElem& e);
HElem scaled(const HElem& e, const Scalar& s);
// Projective equality (same kind, proportional coordinates).
bool proj_equal(const HElem& a, const HElem& b);
Scalar pairing(const HElem& h, const HElem& p);

bool is_circuit(const std::vector<HElem>& elems);

// Linear subspace of K^{d+1}, stored as a reduced basis.
struct Subspace {
  Kind kind = Kind::Point;
  int ambient = 0;  // d
  Mat basis;

  int rank() const { return static_cast<int>(basis.size()); }
  // The projective element when rank() == 1.
  HElem element() const;
};

Subspace span(const std::vector<HElem>& elems);
Subspace span_of(Kind kind, int d, const Mat& rows);
Subspace join(const Subspace& a, const Subspace& b);
// Throws EmptyMeet when the intersection is zero.
Subspace meet(const Subspace& a, const Subspace& b);
// Annihilator in the dual space (points <-> hyperplanes).
Subspace annihilator(const Subspace& s);

// Convenience for the plane and for P^3.
HElem line_through(const HElem& a, const HElem& b);
HElem intersect(const HElem& l1, const HElem& l2);

// Alternating cycle A1, l1, ..., An, ln.
Scalar multi_ratio(const std::vector<HElem>& cycle);
bool face_coherent(const std::vector<HElem>& cycle);

struct Conic {
  Mat matrix;  // symmetric 3x3

  bool contains(const HElem& p) const;
  bool nondegenerate() const;
};

// The conic yz = x^2.
Conic standard_conic();
HElem conic_point(const Scalar& t);
HElem tangent_line(const Scalar& t);

struct PolygonPair {
  std::vector<HElem> P;  // circumscribed polygon
  std::vector<HElem> Q;  // tangency points
};
PolygonPair circumscribed_pair(const std::vector<Scalar>& params);

}  // namespace incidence
