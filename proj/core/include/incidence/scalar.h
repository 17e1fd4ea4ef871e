#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace incidence {

enum class Backend { Rational, Float };

// Run-scoped numeric policy. Set once before building any data.
void set_backend(Backend b);
Backend backend();
void set_tolerance(double tol);
double tolerance();

// Either an exact rational or a double carrying a magnitude bound of the
// operands it was computed from; zero tests on doubles are relative to that
// bound.
class Scalar {
 public:
  Scalar() : Scalar(0L) {}
  Scalar(long v);                 // NOLINT(runtime/explicit)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT
  Scalar(const mpq_class& q);     // NOLINT
  static Scalar from_double(double v);
  static Scalar ratio(long p, long q);
  // Accepts "p", "p/q" and decimal notation.
  static Scalar parse(std::string_view s);

  bool is_float() const { return float_; }
  bool is_zero() const;
  int sign() const;
  double to_double() const;
  // Rational value; only valid when !is_float().
  const mpq_class& rational() const { return q_; }
  double magnitude() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  Scalar pow(long e) const;

 private:
  void promote();

  mpq_class q_;
  double f_ = 0.0;
  double scale_ = 0.0;
  bool float_ = false;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Restores the previous backend and tolerance on scope exit.
class BackendScope {
 public:
  explicit BackendScope(Backend b, double tol = -1.0);
  ~BackendScope();
  BackendScope(const BackendScope&) = delete;
  BackendScope& operator=(const BackendScope&) = delete;

 private:
  Backend saved_;
  double saved_tol_;
};

}  // namespace incidence
