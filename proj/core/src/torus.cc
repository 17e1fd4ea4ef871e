#include "incidence/torus.h"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "incidence/error.h"

namespace incidence {

bool TorusGraph::is_white(const std::string& v) const {
  return std::find(white.begin(), white.end(), v) != white.end();
}
bool TorusGraph::is_black(const std::string& v) const {
  return std::find(black.begin(), black.end(), v) != black.end();
}

std::vector<int> TorusGraph::incident(const std::string& v) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].w == v || edges[i].b == v) out.push_back(i);
  return out;
}

std::string TorusGraph::other_end(int e, const std::string& v) const {
  return edges[e].w == v ? edges[e].b : edges[e].w;
}

int TorusGraph::face_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    if (faces[i].id == id) return i;
  return -1;
}

std::vector<int> TorusGraph::rotation(const std::string& v) const {
  std::map<int, int> next;
  for (const auto& f : faces) {
    const int n = static_cast<int>(f.verts.size());
    for (int j = 0; j < n; ++j)
      if (f.verts[j] == v) next[f.edges[(j + n - 1) % n]] = f.edges[j];
  }
  std::vector<int> inc = incident(v);
  std::vector<int> out;
  if (inc.empty()) return out;
  int e = inc.front();
  for (std::size_t guard = 0; guard < inc.size(); ++guard) {
    out.push_back(e);
    auto it = next.find(e);
    if (it == next.end() || it->second == inc.front()) break;
    e = it->second;
  }
  return out;
}

std::string face_key(const std::vector<std::string>& verts) {
  const std::size_t n = verts.size();
  std::vector<std::string> best;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::string> rot;
    for (std::size_t j = 0; j < n; ++j) rot.push_back(verts[(s + j) % n]);
    if (best.empty() || rot < best) best = rot;
  }
  std::string key;
  for (std::size_t j = 0; j < best.size(); ++j) key += (j ? "," : "") + best[j];
  return key;
}

void infer_face_edges(TorusGraph& g) {
  // used[e] bit 0: traversed white->black, bit 1: black->white
  std::vector<int> used(g.edges.size(), 0);
  for (auto& f : g.faces) {
    const int n = static_cast<int>(f.verts.size());
    f.edges.assign(n, -1);
    for (int j = 0; j < n; ++j) {
      const std::string& x = f.verts[j];
      const std::string& y = f.verts[(j + 1) % n];
      bool from_white = g.is_white(x);
      int bit = from_white ? 1 : 2;
      int fallback = -1;
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const Edge& ed = g.edges[e];
        bool match = from_white ? (ed.w == x && ed.b == y) : (ed.b == x && ed.w == y);
        if (!match) continue;
        if (fallback < 0) fallback = e;
        if (!(used[e] & bit)) {
          f.edges[j] = e;
          break;
        }
      }
      if (f.edges[j] < 0) f.edges[j] = fallback;
      if (f.edges[j] < 0) throw Error(Errc::Parse, "face " + f.id + " uses a missing edge " + x + "-" + y);
      used[f.edges[j]] |= bit;
    }
  }
}

namespace {

H hstep(const TorusGraph& g, int e, const std::string& from) {
  const H& h = g.edges[e].h;
  return g.edges[e].w == from ? h : H{-h[0], -h[1]};
}

void add(H& a, const H& b) {
  a[0] += b[0];
  a[1] += b[1];
}

struct Tree {
  std::string root;
  std::map<std::string, int> parent_edge;  // -1 for the root
  std::vector<int> non_tree;
  std::vector<std::string> order;
};

Tree bfs_tree(const TorusGraph& g) {
  Tree t;
  std::string root = !g.white.empty() ? g.white.front() : (!g.black.empty() ? g.black.front() : "");
  t.root = root;
  if (root.empty()) return t;
  std::unordered_map<std::string, std::vector<int>> adj;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    adj[g.edges[e].w].push_back(e);
    adj[g.edges[e].b].push_back(e);
  }
  std::vector<bool> tree_edge(g.edges.size(), false);
  std::deque<std::string> q{root};
  t.parent_edge[root] = -1;
  while (!q.empty()) {
    std::string v = q.front();
    q.pop_front();
    t.order.push_back(v);
    for (int e : adj[v]) {
      std::string u = g.other_end(e, v);
      if (t.parent_edge.count(u)) continue;
      t.parent_edge[u] = e;
      tree_edge[e] = true;
      q.push_back(u);
    }
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    if (!tree_edge[e]) t.non_tree.push_back(e);
  return t;
}

// Edges from the root down to v.
std::vector<int> path_from_root(const TorusGraph& g, const Tree& t, std::string v) {
  std::vector<int> up;
  while (t.parent_edge.at(v) >= 0) {
    int e = t.parent_edge.at(v);
    up.push_back(e);
    v = g.other_end(e, v);
  }
  std::reverse(up.begin(), up.end());
  return up;
}

}  // namespace

Walk trace_walk(const TorusGraph& g, const std::vector<int>& edges) {
  if (edges.empty()) throw Error(Errc::BadBasis, "empty walk");
  for (int e : edges)
    if (e < 0 || e >= static_cast<int>(g.edges.size())) throw Error(Errc::BadBasis, "walk uses unknown edge");
  // Prefer starting at the white end of the first edge.
  for (const std::string& start : {g.edges[edges[0]].w, g.edges[edges[0]].b}) {
    std::string cur = start;
    H s{0, 0};
    bool ok = true;
    for (int e : edges) {
      if (g.edges[e].w != cur && g.edges[e].b != cur) {
        ok = false;
        break;
      }
      add(s, hstep(g, e, cur));
      cur = g.other_end(e, cur);
    }
    if (ok && cur == start) return Walk{start, s};
  }
  throw Error(Errc::BadBasis, "edge sequence is not a closed walk");
}

GraphReport validate_graph(const TorusGraph& g) {
  GraphReport r;
  auto bad = [&](const std::string& s) {
    r.valid = false;
    r.violations.push_back(s);
  };
  r.whites = static_cast<int>(g.white.size());
  r.blacks = static_cast<int>(g.black.size());
  r.v = r.whites + r.blacks;
  r.e = static_cast<int>(g.edges.size());
  r.f = static_cast<int>(g.faces.size());
  r.euler = r.v - r.e + r.f;

  std::set<std::string> ids;
  for (const auto& v : g.white)
    if (!ids.insert(v).second) bad("duplicate vertex id " + v);
  for (const auto& v : g.black)
    if (!ids.insert(v).second) bad("duplicate vertex id " + v);
  std::set<std::string> whites(g.white.begin(), g.white.end()), blacks(g.black.begin(), g.black.end());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!whites.count(g.edges[i].w)) bad("edge " + std::to_string(i) + " has no white end " + g.edges[i].w);
    if (!blacks.count(g.edges[i].b)) bad("edge " + std::to_string(i) + " has no black end " + g.edges[i].b);
  }
  if (!r.valid) return r;

  std::vector<int> uses(g.edges.size(), 0), dir(g.edges.size(), 0);
  std::set<std::string> face_ids;
  for (const auto& f : g.faces) {
    if (!face_ids.insert(f.id).second) bad("duplicate face id " + f.id);
    const int n = static_cast<int>(f.verts.size());
    if (n < 2 || n % 2 || static_cast<int>(f.edges.size()) != n) {
      bad("face " + f.id + " is not an even alternating cycle");
      continue;
    }
    H s{0, 0};
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      const std::string& x = f.verts[j];
      const std::string& y = f.verts[(j + 1) % n];
      int e = f.edges[j];
      if (e < 0 || e >= r.e) {
        bad("face " + f.id + " refers to a missing edge");
        ok = false;
        break;
      }
      if (whites.count(x) == whites.count(y)) {
        bad("face " + f.id + " does not alternate colors at " + x);
        ok = false;
        break;
      }
      const Edge& ed = g.edges[e];
      if (!((ed.w == x && ed.b == y) || (ed.b == x && ed.w == y))) {
        bad("face " + f.id + " edge " + std::to_string(e) + " does not join " + x + " and " + y);
        ok = false;
        break;
      }
      ++uses[e];
      dir[e] += ed.w == x ? 1 : -1;
      add(s, hstep(g, e, x));
    }
    if (ok && (s[0] != 0 || s[1] != 0))
      bad("face " + f.id + " has h-sum (" + std::to_string(s[0]) + "," + std::to_string(s[1]) + ")");
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (uses[e] != 2)
      bad("edge " + std::to_string(e) + " lies on " + std::to_string(uses[e]) + " face sides");
    else if (dir[e] != 0)
      bad("edge " + std::to_string(e) + " is traversed twice in the same direction");
  }
  if (g.edges.empty()) return r;

  Tree t = bfs_tree(g);
  if (static_cast<int>(t.order.size()) != r.v) bad("graph is disconnected");
  auto cycles = fundamental_cycles(g);
  long det = 0;
  for (std::size_t i = 0; i < cycles.size() && det == 0; ++i)
    for (std::size_t j = i + 1; j < cycles.size() && det == 0; ++j)
      det = cycles[i].hsum[0] * cycles[j].hsum[1] - cycles[i].hsum[1] * cycles[j].hsum[0];
  if (det == 0) bad("period lattice has rank < 2");
  return r;
}

std::vector<FundamentalCycle> fundamental_cycles(const TorusGraph& g) {
  std::vector<FundamentalCycle> out;
  Tree t = bfs_tree(g);
  for (int e : t.non_tree) {
    const Edge& ed = g.edges[e];
    if (!t.parent_edge.count(ed.w) || !t.parent_edge.count(ed.b)) continue;
    FundamentalCycle c;
    c.edges = path_from_root(g, t, ed.w);
    c.edges.push_back(e);
    std::vector<int> back = path_from_root(g, t, ed.b);
    c.edges.insert(c.edges.end(), back.rbegin(), back.rend());
    std::string cur = t.root;
    for (int x : c.edges) {
      add(c.hsum, hstep(g, x, cur));
      cur = g.other_end(x, cur);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<BasisCycles> find_basis_cycles(const TorusGraph& g) {
  struct V {
    H s;
    std::vector<int> walk;
  };
  std::vector<V> vs;
  for (auto& c : fundamental_cycles(g))
    if (c.hsum[0] || c.hsum[1]) vs.push_back({c.hsum, c.edges});
  auto reversed = [](std::vector<int> w) {
    std::reverse(w.begin(), w.end());
    return w;
  };
  // a -= q * b, walks concatenated at the common root.
  auto reduce = [&](V& a, const V& b, long q) {
    std::vector<int> piece = q > 0 ? reversed(b.walk) : b.walk;
    for (long i = 0; i < std::labs(q); ++i) a.walk.insert(a.walk.end(), piece.begin(), piece.end());
    a.s[0] -= q * b.s[0];
    a.s[1] -= q * b.s[1];
  };
  auto gcd_column = [&](std::vector<V>& list, int col) -> std::optional<V> {
    while (true) {
      int piv = -1;
      for (int i = 0; i < static_cast<int>(list.size()); ++i)
        if (list[i].s[col] != 0 && (piv < 0 || std::labs(list[i].s[col]) < std::labs(list[piv].s[col]))) piv = i;
      if (piv < 0) return std::nullopt;
      bool others = false;
      for (int i = 0; i < static_cast<int>(list.size()); ++i) {
        if (i == piv || list[i].s[col] == 0) continue;
        reduce(list[i], list[piv], list[i].s[col] / list[piv].s[col]);
        others = true;
      }
      bool remaining = false;
      for (int i = 0; i < static_cast<int>(list.size()); ++i)
        if (i != piv && list[i].s[col] != 0) remaining = true;
      if (!others || !remaining) {
        V p = list[piv];
        list.erase(list.begin() + piv);
        return p;
      }
    }
  };
  auto p1 = gcd_column(vs, 0);
  if (!p1 || std::labs(p1->s[0]) != 1) return std::nullopt;
  auto p2 = gcd_column(vs, 1);
  if (!p2 || std::labs(p2->s[1]) != 1) return std::nullopt;
  if (p2->s[1] < 0) p2->walk = reversed(p2->walk), p2->s = {-p2->s[0], -p2->s[1]};
  if (p1->s[0] < 0) p1->walk = reversed(p1->walk), p1->s = {-p1->s[0], -p1->s[1]};
  reduce(*p1, *p2, p1->s[1]);
  // Walks may backtrack; that does not change periods or h-sums.
  return BasisCycles{p1->walk, p2->walk};
}

const HElem& Config::label(const std::string& v) const {
  auto it = labels.find(v);
  if (it == labels.end()) throw Error(Errc::UnknownVertex, "no label on vertex " + v);
  return it->second;
}

VReport check_V(const Config& c) {
  VReport r;
  auto check = [&](const std::string& v) {
    std::vector<int> inc = c.graph.incident(v);
    if (static_cast<int>(inc.size()) > c.d + 2)
      throw Error(Errc::DegreeExceedsBound, "vertex " + v + " has degree " + std::to_string(inc.size()));
    if (inc.size() < 2) {
      r.ok = false;
      r.failures.push_back({v, "degree below two"});
      return;
    }
    std::vector<HElem> elems;
    for (int e : inc) elems.push_back(c.label(c.graph.other_end(e, v)));
    if (!is_circuit(elems)) {
      r.ok = false;
      r.failures.push_back({v, "neighbour labels are not a circuit"});
    }
  };
  for (const auto& v : c.graph.white) check(v);
  for (const auto& v : c.graph.black) check(v);
  return r;
}

std::vector<HElem> face_cycle(const Config& c, const Face& f) {
  std::vector<HElem> out;
  for (const auto& v : f.verts) out.push_back(c.label(v));
  return out;
}

FReport check_F(const Config& c) {
  FReport r;
  for (const auto& f : c.graph.faces) {
    bool ok;
    try {
      ok = face_coherent(face_cycle(c, f));
    } catch (const Error& e) {
      if (e.code() == Errc::VanishingPairing) throw Error(Errc::VanishingPairing, "face " + f.id + ": " + e.what());
      throw;
    }
    if (!ok) {
      r.ok = false;
      r.failing_faces.push_back(f.id);
    }
  }
  r.single_failure_flag = r.failing_faces.size() == 1;
  return r;
}

Scalar walk_period(const Config& c, const std::vector<int>& edges) {
  Walk w = trace_walk(c.graph, edges);
  std::string cur = w.start;
  Scalar p(1L);
  for (int e : edges) {
    const Edge& ed = c.graph.edges[e];
    Scalar v = pairing(c.label(ed.b), c.label(ed.w));
    if (v.is_zero()) throw Error(Errc::VanishingPairing, "edge " + ed.w + "-" + ed.b);
    if (ed.w == cur)
      p *= v;
    else
      p /= v;
    cur = c.graph.other_end(e, cur);
  }
  return p;
}

CohomologyClass cohomology_class(const Config& c, const std::vector<int>& z1, const std::vector<int>& z2) {
  H s1 = trace_walk(c.graph, z1).hsum, s2 = trace_walk(c.graph, z2).hsum;
  long det = s1[0] * s2[1] - s1[1] * s2[0];
  if (det != 1 && det != -1) throw Error(Errc::BadBasis, "period matrix has determinant " + std::to_string(det));
  Scalar p1 = walk_period(c, z1), p2 = walk_period(c, z2);
  // (log lambda, log mu) = S^{-1} (log p1, log p2)
  Scalar lambda = p1.pow(s2[1] * det) * p2.pow(-s1[1] * det);
  Scalar mu = p1.pow(-s2[0] * det) * p2.pow(s1[0] * det);
  return {lambda, mu};
}

CohomologyClass cohomology_class(const Config& c) {
  if (c.basis) return cohomology_class(c, c.basis->z1, c.basis->z2);
  auto b = find_basis_cycles(c.graph);
  if (!b) throw Error(Errc::BadBasis, "period lattice is not all of Z^2");
  return cohomology_class(c, b->z1, b->z2);
}

DimensionReport dimension_report(long k, long e, long f, int d, long euler) {
  DimensionReport r;
  r.equations = k * (d + 2) - e + f - 1;
  r.parameters = k * d;
  r.expected_dim = 1 - euler;
  return r;
}

DimensionReport dimension_report(const TorusGraph& g, int d) {
  if (g.white.size() != g.black.size())
    throw Error(Errc::UnequalColorCounts, std::to_string(g.white.size()) + " white vs " + std::to_string(g.black.size()) + " black");
  long k = static_cast<long>(g.white.size());
  long e = static_cast<long>(g.edges.size()), f = static_cast<long>(g.faces.size());
  return dimension_report(k, e, f, d, 2 * k - e + f);
}

bool cohomologous(const TorusGraph& g, const std::vector<H>& h1, const std::vector<H>& h2) {
  TorusGraph a = g, b = g;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    a.edges[i].h = h1[i];
    b.edges[i].h = h2[i];
  }
  auto ca = fundamental_cycles(a), cb = fundamental_cycles(b);
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i].hsum != cb[i].hsum) return false;
  return true;
}

// Merges the two faces on either side of edge e, then drops e.
void remove_edge_merging_faces(TorusGraph& g, int e) {
  std::vector<std::pair<int, int>> occ;
  for (std::size_t f = 0; f < g.faces.size(); ++f)
    for (std::size_t j = 0; j < g.faces[f].edges.size(); ++j)
      if (g.faces[f].edges[j] == e) occ.push_back({static_cast<int>(f), static_cast<int>(j)});
  if (occ.size() != 2 || occ[0].first == occ[1].first)
    throw Error(Errc::BadParameters, "edge does not separate two faces");
  const Face& f1 = g.faces[occ[0].first];
  const Face& f2 = g.faces[occ[1].first];
  Face m;
  auto append = [&m](const Face& f, int j) {
    const int len = static_cast<int>(f.edges.size());
    for (int s = 1; s < len; ++s) {
      const int p = (j + s) % len;
      m.verts.push_back(f.verts[p]);
      m.edges.push_back(f.edges[p]);
    }
  };
  append(f1, occ[0].second);
  append(f2, occ[1].second);
  m.id = face_key(m.verts);
  const int lo = std::min(occ[0].first, occ[1].first), hi = std::max(occ[0].first, occ[1].first);
  g.faces.erase(g.faces.begin() + hi);
  g.faces[lo] = m;
  g.edges.erase(g.edges.begin() + e);
  for (auto& f : g.faces)
    for (auto& x : f.edges)
      if (x > e) --x;
}


}  // namespace incidence
