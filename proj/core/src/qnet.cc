#include "incidence/qnet.h"

#include "incidence/error.h"
#include "incidence/iso.h"
#include "incidence/linalg.h"

namespace incidence {

namespace {

long floor_div(long a, long n) { return a >= 0 ? a / n : -((-a + n - 1) / n); }
long mod(long a, long n) { return a - n * floor_div(a, n); }
int parity_of(long i, long j) { return static_cast<int>(mod(i + j, 2)); }

std::string site_str(Site s) { return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")"; }

// Opposite-parity sites whose four neighbours are all present.
std::vector<Site> surrounded(const QNetWindow& w) {
  std::vector<Site> out;
  std::map<Site, int> count;
  for (const auto& [s, v] : w.values)
    for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) ++count[{s.first + di, s.second + dj}];
  for (const auto& [s, c] : count)
    if (c == 4) out.push_back(s);
  return out;
}

const HElem& at(const QNetWindow& w, long i, long j) { return w.values.at({i, j}); }

void require_dim3(const QNetWindow& w) {
  for (const auto& [s, v] : w.values)
    if (v.dim() != 3) throw Error(Errc::UnsupportedDimension, "Q-net labels live in P^3");
}

Subspace line_of(const HElem& a, const HElem& b, Site s) {
  Subspace l = span({a, b});
  if (l.rank() != 2) throw Error(Errc::CoincidentLines, "repeated label next to " + site_str(s));
  return l;
}

}  // namespace

QNetReport is_qnet(const QNetWindow& w) {
  require_dim3(w);
  QNetReport r;
  for (Site s : surrounded(w)) {
    const auto [i, j] = s;
    Mat m{at(w, i - 1, j).coords, at(w, i + 1, j).coords, at(w, i, j - 1).coords, at(w, i, j + 1).coords};
    if (rank(m) > 3) {
      r.ok = false;
      r.failures.push_back("quad around " + site_str(s) + " is not planar");
    }
  }
  return r;
}

QNetWindow laplace(const QNetWindow& f) {
  QNetReport rep = is_qnet(f);
  if (!rep.ok) throw Error(Errc::NotQNet, rep.failures.front());
  QNetWindow out;
  out.parity = 1 - f.parity;
  for (Site s : surrounded(f)) {
    const auto [i, j] = s;
    Subspace l1 = line_of(at(f, i - 1, j), at(f, i, j - 1), s);
    Subspace l2 = line_of(at(f, i + 1, j), at(f, i, j + 1), s);
    const int r = join(l1, l2).rank();
    if (r == 2) throw Error(Errc::CoincidentLines, "lines coincide at " + site_str(s));
    if (r == 4) throw Error(Errc::NotQNet, "skew lines at " + site_str(s));
    out.values[s] = meet(l1, l2).element();
  }
  return out;
}

QNetWindow qstar_points(const QNetWindow& G) {
  require_dim3(G);
  QNetWindow out;
  out.parity = 1 - G.parity;
  for (Site s : surrounded(G)) {
    const auto [i, j] = s;
    Subspace p = annihilator(span({at(G, i - 1, j), at(G, i + 1, j), at(G, i, j - 1), at(G, i, j + 1)}));
    if (p.rank() != 1) throw Error(Errc::NotQStarNet, "planes around " + site_str(s) + " do not meet in one point");
    out.values[s] = p.element();
  }
  return out;
}

QNetWindow dual_laplace(const QNetWindow& G) {
  QNetReport rep = is_qnet(G);
  if (!rep.ok) throw Error(Errc::NotQStarNet, rep.failures.front());
  QNetWindow out;
  out.parity = 1 - G.parity;
  for (Site s : surrounded(G)) {
    const auto [i, j] = s;
    Subspace a = span({at(G, i - 1, j), at(G, i, j + 1)});
    Subspace b = span({at(G, i + 1, j), at(G, i, j - 1)});
    if (a.rank() != 2 || b.rank() != 2) throw Error(Errc::CoincidentLines, "repeated plane next to " + site_str(s));
    Subspace both = join(annihilator(a), annihilator(b));
    if (both.rank() == 2) throw Error(Errc::CoincidentLines, "lines coincide at " + site_str(s));
    if (both.rank() == 4) throw Error(Errc::NotQStarNet, "skew lines at " + site_str(s));
    out.values[s] = annihilator(both).element();
  }
  return out;
}

bool is_f_transform(const QNetWindow& f, const QNetWindow& g) {
  if (f.parity != g.parity) throw Error(Errc::SizeMismatch, "F-transform needs nets on the same sublattice");
  require_dim3(f);
  require_dim3(g);
  auto has = [](const QNetWindow& w, long i, long j) { return w.values.count({i, j}) > 0; };
  for (const auto& [s, v] : f.values) {
    const auto [i, j] = s;
    if (!has(g, i, j)) continue;
    for (int sgn : {1, -1}) {
      if (!has(f, i + 1, j + sgn) || !has(g, i + 1, j + sgn)) continue;
      Mat m{v.coords, at(g, i, j).coords, at(f, i + 1, j + sgn).coords, at(g, i + 1, j + sgn).coords};
      if (rank(m) > 3) return false;
    }
  }
  return true;
}

QNetWindow planes_of(const QNetWindow& g) {
  require_dim3(g);
  QNetWindow out;
  out.parity = 1 - g.parity;
  for (Site s : surrounded(g)) {
    const auto [i, j] = s;
    Subspace p = annihilator(span({at(g, i - 1, j), at(g, i + 1, j), at(g, i, j - 1), at(g, i, j + 1)}));
    if (p.rank() != 1) throw Error(Errc::NotQNet, "points around " + site_str(s) + " span no unique plane");
    out.values[s] = p.element();
  }
  return out;
}

std::string qnet_vertex(bool white, long i, long j) {
  return std::string(white ? "f" : "G") + std::to_string(i) + "_" + std::to_string(j);
}

Config build_qnet_config(const QNetWindow& f, const QNetWindow& G, int a, int b) {
  if (a < 4 || b < 4 || a % 2 || b % 2) throw Error(Errc::BadParameters, "torus sides must be even and at least 4");
  if (f.parity + G.parity != 1) throw Error(Errc::BadParameters, "points and planes must sit on opposite sublattices");
  auto install = [&](const QNetWindow& w, Kind kind, Config& c) {
    for (const auto& [s, v] : w.values) {
      if (v.kind != kind || v.dim() != 3) throw Error(Errc::BadParameters, "wrong label kind at " + site_str(s));
      if (parity_of(s.first, s.second) != w.parity) throw Error(Errc::BadParameters, "site off its sublattice " + site_str(s));
      const long i = mod(s.first, a), j = mod(s.second, b);
      const std::string id = qnet_vertex(kind == Kind::Point, i, j);
      auto it = c.labels.find(id);
      if (it == c.labels.end()) c.labels[id] = v;
      else if (!proj_equal(it->second, v))
        throw Error(Errc::BadParameters, "labels are not periodic at " + site_str(s));
    }
  };
  Config c;
  c.d = 3;
  install(f, Kind::Point, c);
  install(G, Kind::Hyperplane, c);
  TorusGraph& g = c.graph;
  for (long i = 0; i < a; ++i)
    for (long j = 0; j < b; ++j) {
      const bool white = parity_of(i, j) == f.parity;
      const std::string id = qnet_vertex(white, i, j);
      if (!c.labels.count(id)) throw Error(Errc::BadParameters, "no label at " + site_str({i, j}));
      (white ? g.white : g.black).push_back(id);
    }
  for (long i = 0; i < a; ++i)
    for (long j = 0; j < b; ++j) {
      if (parity_of(i, j) != f.parity) continue;
      for (auto [di, dj] : {std::pair{1, 0}, {0, 1}, {-1, 0}, {0, -1}}) {
        const long x = i + di, y = j + dj;
        g.edges.push_back({qnet_vertex(true, i, j), qnet_vertex(false, mod(x, a), mod(y, b)), H{floor_div(x, a), floor_div(y, b)}});
      }
    }
  for (long x = 0; x < a; ++x)
    for (long y = 0; y < b; ++y) {
      Face fc;
      for (auto [dx, dy] : {std::pair{0, 0}, {0, 1}, {1, 1}, {1, 0}}) {
        const long i = mod(x + dx, a), j = mod(y + dy, b);
        fc.verts.push_back(qnet_vertex(parity_of(i, j) == f.parity, i, j));
      }
      fc.id = face_key(fc.verts);
      g.faces.push_back(fc);
    }
  infer_face_edges(g);
  c.basis = find_basis_cycles(g);
  return c;
}

namespace {

QNetWindow window_of(const Config& c, int a, int b, int pad, bool white) {
  QNetWindow w;
  bool set = false;
  for (long i = -pad; i < a + pad; ++i)
    for (long j = -pad; j < b + pad; ++j) {
      const std::string id = qnet_vertex(white, mod(i, a), mod(j, b));
      if (!c.labels.count(id) || !(white ? c.graph.is_white(id) : c.graph.is_black(id))) continue;
      w.values[{i, j}] = c.label(id);
      if (!set) w.parity = parity_of(i, j), set = true;
    }
  return w;
}

}  // namespace

QNetWindow qnet_points(const Config& c, int a, int b, int pad) { return window_of(c, a, b, pad, true); }
QNetWindow qnet_planes(const Config& c, int a, int b, int pad) { return window_of(c, a, b, pad, false); }

MoveScript qnet_step_script(int a, int b, int parity) {
  MoveScript s;
  std::vector<std::string> old_white, old_black;
  for (long x = 0; x < a; ++x)
    for (long y = 0; y < b; ++y) {
      const bool white = parity_of(x, y) == parity;
      (white ? old_white : old_black).push_back(qnet_vertex(white, x, y));
      if (parity_of(x, y + 1) != parity) continue;
      std::vector<std::string> verts;
      for (auto [dx, dy] : {std::pair{0, 0}, {0, 1}, {1, 1}, {1, 0}}) {
        const long i = mod(x + dx, a), j = mod(y + dy, b);
        verts.push_back(qnet_vertex(parity_of(i, j) == parity, i, j));
      }
      s.push_back({MoveKind::Urban, face_key(verts), std::nullopt, std::nullopt});
    }
  for (const auto& v : old_black) s.push_back({MoveKind::Remove2, v, std::nullopt, std::nullopt});
  for (const auto& v : old_white) s.push_back({MoveKind::Remove2, v, std::nullopt, std::nullopt});
  return s;
}

StepResult qnet_step(const Config& c, int a, int b, bool validate) {
  QNetWindow f = qnet_points(c, a, b, 1);
  QNetWindow G = qnet_planes(c, a, b, 1);
  Config expected = build_qnet_config(laplace(f), dual_laplace(G), a, b);
  ScriptResult r = apply_script(c, qnet_step_script(a, b, f.parity), validate);
  auto canon = canonicalize(r.config, expected);
  if (!canon) throw Error(Errc::LabelMismatch, "move result does not match the Laplace transforms");
  return {std::move(canon->config), canon->cocycle_matches, std::move(r.trace)};
}

}  // namespace incidence
