#include "incidence/laurent.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "incidence/error.h"
#include "json.hpp"

namespace incidence {

LaurentPoly2 LaurentPoly2::monomial(const Scalar& c, long i, long j) {
  LaurentPoly2 p;
  p.add_term(c, i, j);
  return p;
}

Scalar LaurentPoly2::coeff(long i, long j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Scalar(0L) : it->second;
}

void LaurentPoly2::add_term(const Scalar& c, long i, long j) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(Exponent{i, j}, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const Scalar& s) const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.add_term(c * s, e.first, e.second);
  return r;
}

bool LaurentPoly2::operator==(const LaurentPoly2& o) const {
  LaurentPoly2 d = *this - o;
  return d.is_zero();
}

Scalar LaurentPoly2::eval(const Scalar& lambda, const Scalar& mu) const {
  Scalar s(0L);
  for (const auto& [e, c] : terms_) s += c * lambda.pow(e.first) * mu.pow(e.second);
  return s;
}

double LaurentPoly2::magnitude_at(const Scalar& lambda, const Scalar& mu) const {
  double m = 0;
  for (const auto& [e, c] : terms_)
    m = std::max(m, std::fabs(c.to_double()) * std::pow(std::fabs(lambda.to_double()), e.first) *
                        std::pow(std::fabs(mu.to_double()), e.second));
  return m;
}

LaurentPoly2 LaurentPoly2::normalized() const {
  if (terms_.empty()) return *this;
  long mi = terms_.begin()->first.first, mj = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) {
    mi = std::min(mi, e.first);
    mj = std::min(mj, e.second);
  }
  const Scalar lead = terms_.begin()->second;
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.add_term(c / lead, e.first - mi, e.second - mj);
  return r;
}

std::vector<Exponent> LaurentPoly2::support() const {
  std::vector<Exponent> out;
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::string LaurentPoly2::to_json() const {
  nlohmann::json j;
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : terms_) j["terms"].push_back({{"dl", e.first}, {"dm", e.second}, {"coeff", c.str()}});
  return j.dump(2) + "\n";
}

LaurentPoly2 LaurentPoly2::from_json(const std::string& text) {
  LaurentPoly2 p;
  try {
    auto j = nlohmann::json::parse(text);
    for (const auto& t : j.at("terms")) {
      const auto& c = t.at("coeff");
      Scalar s = c.is_string() ? Scalar::parse(c.get<std::string>()) : Scalar::parse(c.dump());
      p.add_term(s, t.at("dl").get<long>(), t.at("dm").get<long>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
  return p;
}

std::string LaurentPoly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c << ")";
    if (e.first) os << "*L^" << e.first;
    if (e.second) os << "*M^" << e.second;
    first = false;
  }
  return os.str();
}

std::vector<Exponent> newton_polygon(const LaurentPoly2& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Newton polygon of zero");
  std::vector<Exponent> pts = p.support();  // already sorted lexicographically
  if (pts.size() <= 2) return pts;
  auto cross = [](const Exponent& o, const Exponent& a, const Exponent& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<Exponent> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& q : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], q) <= 0) --k;
    hull[k++] = q;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<double> real_lambda_roots(const LaurentPoly2& p, double mu) {
  std::map<long, double> by_power;
  for (const auto& [e, c] : p.terms()) by_power[e.first] += c.to_double() * std::pow(mu, static_cast<double>(e.second));
  if (by_power.empty()) throw Error(Errc::ZeroPolynomial, "root search on zero polynomial");
  const long lo = by_power.begin()->first;
  std::vector<double> a(static_cast<std::size_t>(by_power.rbegin()->first - lo + 1), 0.0);
  for (const auto& [i, c] : by_power) a[static_cast<std::size_t>(i - lo)] = c;
  while (a.size() > 1 && a.back() == 0.0) a.pop_back();
  while (a.size() > 1 && a.front() == 0.0) a.erase(a.begin());  // lambda = 0 is not on the torus
  if (a.size() < 2) return {};
  double bound = 0.0;
  for (double c : a) bound = std::max(bound, std::abs(c / a.back()));
  bound += 1.0;
  auto eval = [&](double x) {
    double v = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
    return v;
  };
  std::vector<double> roots;
  const int samples = 20000;
  double x0 = -bound, f0 = eval(x0);
  for (int i = 1; i <= samples; ++i) {
    const double x1 = -bound + 2.0 * bound * i / samples, f1 = eval(x1);
    if (f1 == 0.0 && x1 != 0.0) {
      roots.push_back(x1);
    } else if ((f0 < 0.0) != (f1 < 0.0) && f0 != 0.0) {
      double l = x0, r = x1, fl = f0;
      for (int it = 0; it < 200 && r - l > 0.0; ++it) {
        const double m = 0.5 * (l + r), fm = eval(m);
        if (m == l || m == r) break;
        if ((fm < 0.0) == (fl < 0.0)) l = m, fl = fm;
        else r = m;
      }
      roots.push_back(0.5 * (l + r));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

}  // namespace incidence
