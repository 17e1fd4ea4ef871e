#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "incidence/scalar.h"

namespace incidence {

using Exponent = std::pair<long, long>;  // (power of lambda, power of mu)

// Laurent polynomial in (lambda, mu); zero coefficients are never stored.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;
  static LaurentPoly2 monomial(const Scalar& c, long i, long j);
  static LaurentPoly2 constant(const Scalar& c) { return monomial(c, 0, 0); }

  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(long i, long j) const;
  void add_term(const Scalar& c, long i, long j);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 operator*(const Scalar& s) const;
  bool operator==(const LaurentPoly2& o) const;

  Scalar eval(const Scalar& lambda, const Scalar& mu) const;
  // Largest |term| at the point; scale for float zero tests.
  double magnitude_at(const Scalar& lambda, const Scalar& mu) const;

  // Support shifted to touch both axes in the nonnegative quadrant, scaled so
  // the lexicographically smallest exponent has coefficient 1.
  LaurentPoly2 normalized() const;
  std::vector<Exponent> support() const;

  std::string to_json() const;
  static LaurentPoly2 from_json(const std::string& text);
  std::string str() const;

 private:
  std::map<Exponent, Scalar> terms_;
};

// Convex hull of the support, counterclockwise, without collinear points.
std::vector<Exponent> newton_polygon(const LaurentPoly2& p);

// Nonzero real lambda with p(lambda, mu) = 0, found by sign changes inside the
// Cauchy bound and bisection. Roots of even multiplicity are missed.
std::vector<double> real_lambda_roots(const LaurentPoly2& p, double mu);

}  // namespace incidence
