#include "incidence/scalar.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "incidence/error.h"

namespace incidence {

namespace {
std::atomic<Backend> g_backend{Backend::Rational};
std::atomic<double> g_tol{1e-9};
}  // namespace

void set_backend(Backend b) { g_backend = b; }
Backend backend() { return g_backend; }
void set_tolerance(double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  g_tol = tol;
}
double tolerance() { return g_tol; }

BackendScope::BackendScope(Backend b, double tol) : saved_(backend()), saved_tol_(tolerance()) {
  set_backend(b);
  if (tol >= 0.0) set_tolerance(tol);
}
BackendScope::~BackendScope() {
  set_backend(saved_);
  set_tolerance(saved_tol_);
}

Scalar::Scalar(long v) : q_(v) {
  if (backend() == Backend::Float) promote();
}

Scalar::Scalar(const mpq_class& q) : q_(q) {
  q_.canonicalize();
  if (backend() == Backend::Float) promote();
}

Scalar Scalar::from_double(double v) {
  Scalar s(0L);
  s.float_ = true;
  s.q_ = 0;
  s.f_ = v;
  s.scale_ = std::fabs(v);
  return s;
}

Scalar Scalar::ratio(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(Errc::Parse, "bad scalar '" + s + "'"); };
  if (s.empty()) throw bad();
  bool decimal = s.find_first_of(".eE") != std::string::npos;
  if (!decimal) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return Scalar(q);
  }
  if (backend() == Backend::Float) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw bad();
    return from_double(v);
  }
  // Exact decimal: mantissa digits scaled by a power of ten.
  std::size_t epos = s.find_first_of("eE");
  std::string mant = s.substr(0, epos);
  long exp10 = 0;
  if (epos != std::string::npos) {
    try {
      std::size_t used = 0;
      exp10 = std::stol(s.substr(epos + 1), &used);
      if (used != s.size() - epos - 1) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  std::size_t dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty() || digits == "-" || digits == "+") throw bad();
  if (digits[0] == '+') digits.erase(0, 1);
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw bad();
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  mpq_class q = exp10 >= 0 ? mpq_class(num * pow10) : mpq_class(num, pow10);
  q.canonicalize();
  return Scalar(q);
}

void Scalar::promote() {
  if (float_) return;
  f_ = q_.get_d();
  scale_ = std::fabs(f_);
  q_ = 0;
  float_ = true;
}

bool Scalar::is_zero() const {
  if (!float_) return sgn(q_) == 0;
  return std::fabs(f_) <= tolerance() * scale_;
}

int Scalar::sign() const {
  if (!float_) return sgn(q_);
  if (is_zero()) return 0;
  return f_ > 0 ? 1 : -1;
}

double Scalar::to_double() const { return float_ ? f_ : q_.get_d(); }

double Scalar::magnitude() const { return float_ ? scale_ : std::fabs(q_.get_d()); }

std::string Scalar::str() const {
  if (!float_) return q_.get_str(10);
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, f_);
  (void)ec;
  return std::string(buf, p);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (float_)
    r.f_ = -f_;
  else
    r.q_ = -q_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!float_ && !o.float_) {
    q_ += o.q_;
    return *this;
  }
  Scalar b = o;
  promote();
  b.promote();
  f_ += b.f_;
  scale_ = std::max({scale_, b.scale_, std::fabs(f_)});
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!float_ && !o.float_) {
    q_ *= o.q_;
    return *this;
  }
  Scalar b = o;
  promote();
  b.promote();
  f_ *= b.f_;
  scale_ *= b.scale_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (!float_ && !o.float_) {
    q_ /= o.q_;
    return *this;
  }
  Scalar b = o;
  promote();
  b.promote();
  f_ /= b.f_;
  scale_ /= std::fabs(b.f_);
  return *this;
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? Scalar(1L) / *this : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Scalar r = float_ ? from_double(1.0) : Scalar(mpq_class(1));
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::TooManyElements: return "TooManyElements";
    case Errc::TooFew: return "TooFew";
    case Errc::EmptyMeet: return "EmptyMeet";
    case Errc::VanishingPairing: return "VanishingPairing";
    case Errc::DuplicateParameter: return "DuplicateParameter";
    case Errc::DegreeExceedsBound: return "DegreeExceedsBound";
    case Errc::BadBasis: return "BadBasis";
    case Errc::UnequalColorCounts: return "UnequalColorCounts";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownFace: return "UnknownFace";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::IncidentLabel: return "IncidentLabel";
    case Errc::BadPartition: return "BadPartition";
    case Errc::NotQuadrilateral: return "NotQuadrilateral";
    case Errc::DegenerateMeet: return "DegenerateMeet";
    case Errc::KernelNotOneDimensional: return "KernelNotOneDimensional";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::EmptyKernel: return "EmptyKernel";
    case Errc::KernelDegenerate: return "KernelDegenerate";
    case Errc::DegenerateIntersection: return "DegenerateIntersection";
    case Errc::SeedInvalid: return "SeedInvalid";
    case Errc::BadParameters: return "BadParameters";
    case Errc::NotQNet: return "NotQNet";
    case Errc::CoincidentLines: return "CoincidentLines";
    case Errc::NotQStarNet: return "NotQStarNet";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace incidence
