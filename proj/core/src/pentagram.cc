#include "incidence/pentagram.h"

#include "incidence/error.h"
#include "incidence/iso.h"

namespace incidence {

namespace {

int mod(long a, long n) { return static_cast<int>(((a % n) + n) % n); }

void check_k(std::size_t n, int k) {
  if (k < 2 || k > static_cast<int>(n) - 2)
    throw Error(Errc::BadParameters, "k = " + std::to_string(k) + " outside 2.." + std::to_string(static_cast<long>(n) - 2));
}

HElem line_at(const HElem& a, const HElem& b, std::size_t i) {
  try {
    return line_through(a, b);
  } catch (const Error& e) {
    throw Error(Errc::DegenerateIntersection, "index " + std::to_string(i) + ": " + e.what());
  }
}

HElem point_at(const HElem& a, const HElem& b, std::size_t i) {
  try {
    return intersect(a, b);
  } catch (const Error& e) {
    throw Error(Errc::DegenerateIntersection, "index " + std::to_string(i) + ": " + e.what());
  }
}

}  // namespace

Polygon pentagram_map(const Polygon& P, int k) {
  const std::size_t n = P.size();
  check_k(n, k);
  Polygon out;
  for (std::size_t i = 0; i < n; ++i) {
    HElem a = line_at(P[i], P[(i + k) % n], i);
    HElem b = line_at(P[(i + 1) % n], P[(i + k + 1) % n], i);
    out.push_back(point_at(a, b, i));
  }
  return out;
}

LineList dual_pentagram_map(const LineList& q, int k) {
  const std::size_t n = q.size();
  check_k(n, k);
  LineList out;
  for (std::size_t i = 0; i < n; ++i) {
    HElem a = point_at(q[i], q[(i + 1) % n], i);
    HElem b = point_at(q[(i + k) % n], q[(i + k + 1) % n], i);
    out.push_back(line_at(a, b, i));
  }
  return out;
}

Polygon vertices_of(const LineList& q, int k) {
  const std::size_t n = q.size();
  Polygon out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(point_at(q[i], q[mod(static_cast<long>(i) - k, n)], i));
  return out;
}

LineList lines_of(const Polygon& Q, int k) {
  const std::size_t n = Q.size();
  LineList out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(line_at(Q[i], Q[(i + k) % n], i));
  return out;
}

bool is_inscribed(const Polygon& Q, const Polygon& P) {
  if (Q.size() != P.size()) throw Error(Errc::SizeMismatch, "polygons of different sizes");
  const std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!pairing(line_at(P[i], P[(i + 1) % n], i), Q[i]).is_zero()) return false;
  return true;
}

std::string pentagram_white(int i) { return "P" + std::to_string(i); }
std::string pentagram_black(int i) { return "q" + std::to_string(i); }

std::string pentagram_face1(int n, int k, int j) {
  return face_key({pentagram_black(mod(j - k, n)), pentagram_white(mod(j + 1, n)), pentagram_black(mod(j, n)),
                   pentagram_white(mod(j, n))});
}

std::string pentagram_face2(int n, int k, int j) {
  return face_key({pentagram_white(mod(j, n)), pentagram_black(mod(j, n)), pentagram_white(mod(j + k, n)),
                   pentagram_black(mod(j - 1, n))});
}

TorusGraph pentagram_graph(int n, int k) {
  if (n < 5) throw Error(Errc::BadParameters, "pentagram graph needs n >= 5");
  check_k(n, k);
  TorusGraph g;
  for (int i = 0; i < n; ++i) g.white.push_back(pentagram_white(i));
  for (int i = 0; i < n; ++i) g.black.push_back(pentagram_black(i));
  // White j sits in cell (0, j) of the cover; the four incident black cells.
  for (int j = 0; j < n; ++j) {
    for (auto [a, b] : {std::pair{0, j}, {-1, j}, {0, j - 1}, {-1, j - 1}}) {
      const int m = mod(k * a + b, n);
      g.edges.push_back({pentagram_white(j), pentagram_black(m), H{a, (b - m + k * a) / n}});
    }
  }
  for (int j = 0; j < n; ++j) {
    Face f1;
    f1.verts = {pentagram_black(mod(j - k, n)), pentagram_white(mod(j + 1, n)), pentagram_black(j), pentagram_white(j)};
    f1.id = face_key(f1.verts);
    Face f2;
    f2.verts = {pentagram_white(j), pentagram_black(j), pentagram_white(mod(j + k, n)), pentagram_black(mod(j - 1, n))};
    f2.id = face_key(f2.verts);
    g.faces.push_back(f1);
    g.faces.push_back(f2);
  }
  infer_face_edges(g);
  return g;
}

Config build_pentagram_config(const Polygon& P, const LineList& q, int k) {
  const int n = static_cast<int>(P.size());
  if (static_cast<int>(q.size()) != n) throw Error(Errc::SizeMismatch, "points and lines differ in number");
  Config c;
  c.graph = pentagram_graph(n, k);
  c.d = 2;
  for (int i = 0; i < n; ++i) {
    if (P[i].kind != Kind::Point || q[i].kind != Kind::Hyperplane || P[i].dim() != 2 || q[i].dim() != 2)
      throw Error(Errc::BadParameters, "planar points and lines expected at index " + std::to_string(i));
    c.labels[pentagram_white(i)] = P[i];
    c.labels[pentagram_black(i)] = q[i];
  }
  c.basis = find_basis_cycles(c.graph);
  return c;
}

Polygon pentagram_points(const Config& c) {
  Polygon out;
  for (std::size_t i = 0; i < c.graph.white.size(); ++i) out.push_back(c.label(pentagram_white(static_cast<int>(i))));
  return out;
}

LineList pentagram_lines(const Config& c) {
  LineList out;
  for (std::size_t i = 0; i < c.graph.black.size(); ++i) out.push_back(c.label(pentagram_black(static_cast<int>(i))));
  return out;
}

MoveScript pentagram_step_script(int n, int k) {
  MoveScript s;
  for (int j = 0; j < n; ++j) s.push_back({MoveKind::Urban, pentagram_face2(n, k, j), std::nullopt, std::nullopt});
  for (int j = 0; j < n; ++j) s.push_back({MoveKind::Remove2, pentagram_black(j), std::nullopt, std::nullopt});
  for (int j = 0; j < n; ++j) s.push_back({MoveKind::Remove2, pentagram_white(j), std::nullopt, std::nullopt});
  return s;
}

StepResult pentagram_step(const Config& c, int k, bool validate) {
  const int n = static_cast<int>(c.graph.white.size());
  Config expected = build_pentagram_config(pentagram_map(pentagram_points(c), k), dual_pentagram_map(pentagram_lines(c), k), k);
  ScriptResult r = apply_script(c, pentagram_step_script(n, k), validate);
  auto canon = canonicalize(r.config, expected);
  if (!canon) throw Error(Errc::LabelMismatch, "move result does not match the pentagram map");
  return {std::move(canon->config), canon->cocycle_matches, std::move(r.trace)};
}

}  // namespace incidence
