#include "incidence/spiral.h"

#include <algorithm>

#include "incidence/error.h"
#include "incidence/iso.h"
#include "incidence/linalg.h"

namespace incidence {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

bool dependent3(const HElem& a, const HElem& b, const HElem& c) {
  return rank(Mat{a.coords, b.coords, c.coords}) < 3;
}

HElem line2(const HElem& a, const HElem& b, long idx) {
  try {
    return line_through(a, b);
  } catch (const Error& e) {
    throw Error(Errc::DegenerateIntersection, "index " + std::to_string(idx) + ": " + e.what());
  }
}

HElem meet2(const HElem& a, const HElem& b, long idx) {
  try {
    return intersect(a, b);
  } catch (const Error& e) {
    throw Error(Errc::DegenerateIntersection, "index " + std::to_string(idx) + ": " + e.what());
  }
}

void check_shape(int k, int n, std::size_t size, const char* what) {
  if (k < 2 || n <= k + 2) throw Error(Errc::BadParameters, "spiral needs k >= 2 and n > k + 2");
  if (size != static_cast<std::size_t>(n) + 1)
    throw Error(Errc::SizeMismatch, std::string(what) + " window must hold n + 1 elements");
}

}  // namespace

std::string spiral_white(long i) { return "P" + std::to_string(i); }
std::string spiral_black(long i) { return "q" + std::to_string(i); }

long spiral_white_index(int n, long base, long r) { return base + mod(r - base, n + 1); }
long spiral_black_index(int n, long base, long r) { return base - 1 + mod(r - base + 1, n + 1); }

SeedReport validate_spiral_seed(const SpiralSeed& s) {
  check_shape(s.k, s.n, s.points.size(), "point");
  SeedReport r;
  for (long j = s.base - s.k - 1; j <= s.base - 1; ++j) {
    const long a = spiral_white_index(s.n, s.base, j), b = spiral_white_index(s.n, s.base, j + 1),
               c = spiral_white_index(s.n, s.base, j + s.k + 1);
    if (!dependent3(s.at(a), s.at(b), s.at(c))) {
      r.ok = false;
      r.failures.push_back("P" + std::to_string(a) + ", P" + std::to_string(b) + ", P" + std::to_string(c) + " not collinear");
    }
  }
  return r;
}

SeedReport validate_line_seed(const LineSeed& s) {
  check_shape(s.k, s.n, s.lines.size(), "line");
  SeedReport r;
  for (long w = s.base - 1; w <= s.base + s.k - 1; ++w) {
    const long a = spiral_black_index(s.n, s.base, w), b = spiral_black_index(s.n, s.base, w - 1),
               c = spiral_black_index(s.n, s.base, w - s.k - 1);
    if (!dependent3(s.at(a), s.at(b), s.at(c))) {
      r.ok = false;
      r.failures.push_back("q" + std::to_string(a) + ", q" + std::to_string(b) + ", q" + std::to_string(c) + " not concurrent");
    }
  }
  return r;
}

SpiralSeed spiral_extend(const SpiralSeed& s, long steps) {
  SeedReport rep = validate_spiral_seed(s);
  if (!rep.ok) throw Error(Errc::SeedInvalid, rep.failures.front());
  SpiralSeed cur = s;
  const int n = s.n, k = s.k;
  for (; steps > 0; --steps) {
    const long i = cur.base;
    HElem p = meet2(line2(cur.at(i + 1), cur.at(i + k + 1), i + n + 1), line2(cur.at(i + n), cur.at(i + k), i + n + 1), i + n + 1);
    cur.points.erase(cur.points.begin());
    cur.points.push_back(p);
    cur.base = i + 1;
  }
  for (; steps < 0; ++steps) {
    const long i = cur.base;
    HElem p = meet2(line2(cur.at(i + n - k - 1), cur.at(i + n - k), i - 1), line2(cur.at(i + n - 1), cur.at(i + k - 1), i - 1), i - 1);
    cur.points.pop_back();
    cur.points.insert(cur.points.begin(), p);
    cur.base = i - 1;
  }
  return cur;
}

LineSeed line_extend(const LineSeed& s, long steps) {
  SeedReport rep = validate_line_seed(s);
  if (!rep.ok) throw Error(Errc::SeedInvalid, rep.failures.front());
  LineSeed cur = s;
  const int n = s.n, k = s.k;
  for (; steps > 0; --steps) {
    const long i = cur.base;
    HElem q = line2(meet2(cur.at(i - 1), cur.at(i), i + n), meet2(cur.at(i + k - 1), cur.at(i + k), i + n), i + n);
    cur.lines.erase(cur.lines.begin());
    cur.lines.push_back(q);
    cur.base = i + 1;
  }
  for (; steps < 0; ++steps) {
    const long i = cur.base;
    HElem q = line2(meet2(cur.at(i - 1), cur.at(i + n - 1), i - 2), meet2(cur.at(i + n - 2), cur.at(i + n - k - 2), i - 2), i - 2);
    cur.lines.pop_back();
    cur.lines.insert(cur.lines.begin(), q);
    cur.base = i - 1;
  }
  return cur;
}

SpiralSeed sample_spiral_seed(int k, int n, long base, const std::vector<HElem>& free_points, const std::vector<Scalar>& params) {
  if (k < 2 || n <= k + 2) throw Error(Errc::BadParameters, "spiral needs k >= 2 and n > k + 2");
  if (free_points.size() != static_cast<std::size_t>(n - k + 1))
    throw Error(Errc::SizeMismatch, "expected n - k + 1 free points");
  if (params.size() != static_cast<std::size_t>(k - 1)) throw Error(Errc::SizeMismatch, "expected k - 1 parameters");
  SpiralSeed s{k, n, base, free_points};
  auto affine = [](const HElem& p) {
    const Scalar& last = p.coords.back();
    if (last.is_zero()) return p.coords;
    Vec v;
    for (const auto& x : p.coords) v.push_back(x / last);
    return v;
  };
  for (int l = 0; l < k - 1; ++l) {
    Vec a = affine(s.at(base + l)), b = affine(s.at(base + n - k + l));
    Vec p;
    for (std::size_t j = 0; j < a.size(); ++j) p.push_back(a[j] + params[l] * (b[j] - a[j]));
    s.points.push_back(make_point(p));
  }
  const long last = base + n;
  s.points.push_back(meet2(line2(s.at(base + k - 1), s.at(base + n - 1), last), line2(s.at(base), s.at(base + k), last), last));
  return s;
}

TorusGraph spiral_graph(int k, int n, long base) {
  if (k < 2 || n <= k + 2) throw Error(Errc::BadParameters, "spiral needs k >= 2 and n > k + 2");
  const int N = n + 1;
  TorusGraph g = pentagram_graph(N, k);
  auto rename = [&](const std::string& v) {
    const long r = std::stol(v.substr(1));
    return v[0] == 'P' ? spiral_white(spiral_white_index(n, base, r)) : spiral_black(spiral_black_index(n, base, r));
  };
  for (auto& v : g.white) v = rename(v);
  for (auto& v : g.black) v = rename(v);
  for (auto& e : g.edges) {
    e.w = rename(e.w);
    e.b = rename(e.b);
  }
  for (auto& f : g.faces) {
    for (auto& v : f.verts) v = rename(v);
    f.id = face_key(f.verts);
  }
  for (long j = base - k - 1; j <= base - 1; ++j) {
    const std::string b = spiral_black(spiral_black_index(n, base, j));
    const std::string w = spiral_white(spiral_white_index(n, base, j + k));
    int found = -1;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (g.edges[e].b == b && g.edges[e].w == w) found = static_cast<int>(e);
    if (found < 0) throw Error(Errc::BadParameters, "no edge " + b + " " + w);
    remove_edge_merging_faces(g, found);
  }
  return g;
}

Config build_spiral_config(const SpiralSeed& sp, const LineSeed& sq) {
  check_shape(sp.k, sp.n, sp.points.size(), "point");
  check_shape(sq.k, sq.n, sq.lines.size(), "line");
  if (sp.k != sq.k || sp.n != sq.n || sp.base != sq.base) throw Error(Errc::BadParameters, "seed parameters differ");
  Config c;
  c.graph = spiral_graph(sp.k, sp.n, sp.base);
  c.d = 2;
  for (long a = sp.base; a <= sp.base + sp.n; ++a) c.labels[spiral_white(a)] = sp.at(a);
  for (long a = sq.base - 1; a <= sq.base + sq.n - 1; ++a) c.labels[spiral_black(a)] = sq.at(a);
  c.basis = find_basis_cycles(c.graph);
  return c;
}

MoveScript spiral_step_script(int k, int n, long base) {
  (void)n;
  const std::string face = face_key({spiral_white(base), spiral_black(base), spiral_white(base + k), spiral_black(base - 1)});
  return {{MoveKind::Urban, face, std::nullopt, std::nullopt},
          {MoveKind::Remove2, spiral_black(base - 1), std::nullopt, std::nullopt},
          {MoveKind::Remove2, spiral_white(base), std::nullopt, std::nullopt}};
}

bool spiral_inscribed_at(const SpiralSeed& sp, const LineSeed& sq, long j) {
  if (j < sp.base || j + 1 > sp.base + sp.n || j - sq.k < sq.base - 1 || j > sq.base + sq.n - 1)
    throw Error(Errc::BadParameters, "index " + std::to_string(j) + " outside the windows");
  HElem Q = meet2(sq.at(j), sq.at(j - sq.k), j);
  return pairing(line2(sp.at(j), sp.at(j + 1), j), Q).is_zero();
}

SpiralSeed spiral_points(const Config& c, int k, int n, long base) {
  SpiralSeed s{k, n, base, {}};
  for (long a = base; a <= base + n; ++a) s.points.push_back(c.label(spiral_white(a)));
  return s;
}

LineSeed spiral_lines(const Config& c, int k, int n, long base) {
  LineSeed s{k, n, base, {}};
  for (long a = base - 1; a <= base + n - 1; ++a) s.lines.push_back(c.label(spiral_black(a)));
  return s;
}

StepResult spiral_step(const Config& c, int k, int n, long base, bool validate) {
  Config expected = build_spiral_config(spiral_extend(spiral_points(c, k, n, base), 1), line_extend(spiral_lines(c, k, n, base), 1));
  ScriptResult r = apply_script(c, spiral_step_script(k, n, base), validate);
  auto canon = canonicalize(r.config, expected);
  if (!canon) throw Error(Errc::LabelMismatch, "move result does not match the spiral recursion");
  return {std::move(canon->config), canon->cocycle_matches, std::move(r.trace)};
}

}  // namespace incidence
