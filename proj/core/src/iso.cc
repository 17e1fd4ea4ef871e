#include "incidence/iso.h"

#include <deque>
#include <utility>

namespace incidence {

namespace {

using Corner = std::pair<int, int>;  // (face, position)

struct Corners {
  std::vector<std::vector<Corner>> occ;  // per edge, its two face positions

  explicit Corners(const TorusGraph& g) : occ(g.edges.size()) {
    for (std::size_t f = 0; f < g.faces.size(); ++f)
      for (std::size_t j = 0; j < g.faces[f].edges.size(); ++j)
        occ[g.faces[f].edges[j]].push_back({static_cast<int>(f), static_cast<int>(j)});
  }

  std::optional<Corner> twin(const TorusGraph& g, Corner c) const {
    const auto& o = occ[g.faces[c.first].edges[c.second]];
    if (o.size() != 2) return std::nullopt;
    return o[0] == c ? o[1] : o[0];
  }
};

Corner next_in_face(const TorusGraph& g, Corner c) {
  return {c.first, (c.second + 1) % static_cast<int>(g.faces[c.first].verts.size())};
}

std::optional<GraphIso> propagate(const TorusGraph& a, const Corners& ca, const TorusGraph& b, const Corners& cb,
                                  Corner start_a, Corner start_b) {
  GraphIso iso;
  iso.edge.assign(a.edges.size(), -1);
  iso.face.assign(a.faces.size(), -1);
  std::vector<int> edge_inv(b.edges.size(), -1), face_inv(b.faces.size(), -1);
  std::map<std::string, std::string> vertex_inv;
  std::map<Corner, Corner> seen;
  std::deque<std::pair<Corner, Corner>> todo{{start_a, start_b}};

  auto bind = [&](Corner x, Corner y) -> bool {
    const Face& fa = a.faces[x.first];
    const Face& fb = b.faces[y.first];
    if (fa.verts.size() != fb.verts.size()) return false;
    const std::string& va = fa.verts[x.second];
    const std::string& vb = fb.verts[y.second];
    if (a.is_white(va) != b.is_white(vb)) return false;
    auto check = [](auto& fwd, auto& inv, const auto& k, const auto& v) {
      auto it = fwd.find(k);
      if (it != fwd.end()) return it->second == v;
      auto jt = inv.find(v);
      if (jt != inv.end()) return jt->second == k;
      fwd.emplace(k, v);
      inv.emplace(v, k);
      return true;
    };
    if (!check(iso.vertex, vertex_inv, va, vb)) return false;
    auto check_idx = [](std::vector<int>& fwd, std::vector<int>& inv, int k, int v) {
      if (fwd[k] >= 0 || inv[v] >= 0) return fwd[k] == v && inv[v] == k;
      fwd[k] = v;
      inv[v] = k;
      return true;
    };
    return check_idx(iso.face, face_inv, x.first, y.first) &&
           check_idx(iso.edge, edge_inv, fa.edges[x.second], fb.edges[y.second]);
  };

  while (!todo.empty()) {
    auto [x, y] = todo.front();
    todo.pop_front();
    auto it = seen.find(x);
    if (it != seen.end()) {
      if (it->second != y) return std::nullopt;
      continue;
    }
    if (!bind(x, y)) return std::nullopt;
    seen.emplace(x, y);
    todo.push_back({next_in_face(a, x), next_in_face(b, y)});
    auto tx = ca.twin(a, x);
    auto ty = cb.twin(b, y);
    if (tx.has_value() != ty.has_value()) return std::nullopt;
    if (tx) todo.push_back({*tx, *ty});
  }
  if (iso.vertex.size() != a.white.size() + a.black.size()) return std::nullopt;
  for (int e : iso.edge)
    if (e < 0) return std::nullopt;
  for (int f : iso.face)
    if (f < 0) return std::nullopt;
  return iso;
}

}  // namespace

std::vector<GraphIso> map_isomorphisms(const TorusGraph& a, const TorusGraph& b) {
  std::vector<GraphIso> out;
  if (a.white.size() != b.white.size() || a.black.size() != b.black.size() || a.edges.size() != b.edges.size() ||
      a.faces.size() != b.faces.size() || a.faces.empty())
    return out;
  Corners ca(a), cb(b);
  for (std::size_t f = 0; f < b.faces.size(); ++f)
    for (std::size_t j = 0; j < b.faces[f].verts.size(); ++j)
      if (auto iso = propagate(a, ca, b, cb, {0, 0}, {static_cast<int>(f), static_cast<int>(j)}))
        out.push_back(std::move(*iso));
  return out;
}

std::optional<Canonical> canonicalize(const Config& c, const Config& expected) {
  for (auto& iso : map_isomorphisms(c.graph, expected.graph)) {
    bool ok = true;
    for (const auto& [v, w] : iso.vertex) {
      if (!proj_equal(c.label(v), expected.label(w))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Canonical out;
    out.config = expected;
    for (const auto& [v, w] : iso.vertex) out.config.labels[w] = c.label(v);
    std::vector<H> moved(expected.graph.edges.size()), ref(expected.graph.edges.size());
    for (std::size_t e = 0; e < c.graph.edges.size(); ++e) moved[iso.edge[e]] = c.graph.edges[e].h;
    for (std::size_t e = 0; e < ref.size(); ++e) ref[e] = expected.graph.edges[e].h;
    out.cocycle_matches = cohomologous(expected.graph, moved, ref);
    out.iso = std::move(iso);
    return out;
  }
  return std::nullopt;
}

}  // namespace incidence
