#include "incidence/moves.h"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace incidence {

namespace {

void require_vertex(const Config& c, const std::string& v) {
  if (!c.graph.has_vertex(v)) throw Error(Errc::UnknownVertex, "no vertex " + v);
}

H sub(const H& a, const H& b) { return {a[0] - b[0], a[1] - b[1]}; }

// Deletes edges and renumbers face references.
void erase_edges(TorusGraph& g, std::vector<int> dead) {
  std::sort(dead.begin(), dead.end());
  std::vector<int> remap(g.edges.size(), -1);
  std::vector<Edge> kept;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (std::binary_search(dead.begin(), dead.end(), i)) continue;
    remap[i] = static_cast<int>(kept.size());
    kept.push_back(g.edges[i]);
  }
  g.edges = std::move(kept);
  for (auto& f : g.faces)
    for (int& e : f.edges) {
      if (remap[e] < 0) throw Error(Errc::BadParameters, "face " + f.id + " still uses a deleted edge");
      e = remap[e];
    }
}

void erase_vertex(Config& c, const std::string& v) {
  auto drop = [&](std::vector<std::string>& ids) { ids.erase(std::remove(ids.begin(), ids.end(), v), ids.end()); };
  drop(c.graph.white);
  drop(c.graph.black);
  c.labels.erase(v);
}

int add_edge(TorusGraph& g, const std::string& w, const std::string& b, H h) {
  g.edges.push_back(Edge{w, b, h});
  return static_cast<int>(g.edges.size()) - 1;
}

std::vector<HElem> neighbour_labels(const Config& c, const std::string& v, std::initializer_list<int> skip) {
  std::vector<HElem> out;
  for (int e : c.graph.incident(v)) {
    if (std::find(skip.begin(), skip.end(), e) != skip.end()) continue;
    out.push_back(c.label(c.graph.other_end(e, v)));
  }
  return out;
}

HElem meet_element(const std::vector<HElem>& a, const std::vector<HElem>& b, const char* what) {
  if (a.empty() || b.empty()) throw Error(Errc::DegenerateMeet, std::string(what) + ": nothing to intersect");
  Subspace m;
  try {
    m = meet(span(a), span(b));
  } catch (const Error& e) {
    if (e.code() == Errc::EmptyMeet) throw Error(Errc::DegenerateMeet, std::string(what) + " is empty");
    throw;
  }
  if (m.rank() != 1)
    throw Error(Errc::DegenerateMeet, std::string(what) + " has rank " + std::to_string(m.rank()));
  return m.element();
}

}  // namespace

std::string fresh_id(const TorusGraph& g, const std::string& prefix) {
  for (long n = 0;; ++n) {
    std::string id = prefix + std::to_string(n);
    if (!g.has_vertex(id)) return id;
  }
}

MoveOutcome remove_degree2(const Config& input, const std::string& v) {
  require_vertex(input, v);
  Config c = input;
  TorusGraph& g = c.graph;
  std::vector<int> inc = g.incident(v);
  if (inc.size() != 2) throw Error(Errc::WrongDegree, v + " has degree " + std::to_string(inc.size()));
  const int e1 = inc[0], e2 = inc[1];
  const std::string b1 = g.other_end(e1, v), b2 = g.other_end(e2, v);
  if (b1 == b2) throw Error(Errc::WrongDegree, "both edges of " + v + " lead to " + b1);
  if (!proj_equal(c.label(b1), c.label(b2)))
    throw Error(Errc::LabelMismatch, "neighbours " + b1 + " and " + b2 + " of " + v + " carry different labels");
  int merged_degree = g.degree(b1) + g.degree(b2) - 2;
  if (merged_degree > c.d + 2)
    throw Error(Errc::DegreeOverflow, "merging " + b2 + " into " + b1 + " gives degree " + std::to_string(merged_degree));

  const H dh = sub(g.edges[e1].h, g.edges[e2].h);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (i == e2) continue;
    Edge& ed = g.edges[i];
    if (ed.w == b2 || ed.b == b2) {
      (ed.w == b2 ? ed.w : ed.b) = b1;
      ed.h = {ed.h[0] + dh[0], ed.h[1] + dh[1]};
    }
  }
  for (auto& f : g.faces) {
    while (true) {
      const int n = static_cast<int>(f.verts.size());
      auto it = std::find(f.verts.begin(), f.verts.end(), v);
      if (it == f.verts.end()) break;
      int j = static_cast<int>(it - f.verts.begin());
      // Rotate so that v sits at index 1, then drop v, its successor and the
      // two edges around v.
      int s = (j + n - 1) % n;
      std::rotate(f.verts.begin(), f.verts.begin() + s, f.verts.end());
      std::rotate(f.edges.begin(), f.edges.begin() + s, f.edges.end());
      f.verts.erase(f.verts.begin() + 1, f.verts.begin() + 3);
      f.edges.erase(f.edges.begin(), f.edges.begin() + 2);
    }
    for (auto& x : f.verts)
      if (x == b2) x = b1;
  }
  erase_edges(g, {e1, e2});
  erase_vertex(c, v);
  erase_vertex(c, b2);
  c.basis.reset();
  MoveOutcome out{std::move(c), {}};
  out.record.kept = b1;
  out.record.merged = b2;
  return out;
}

MoveOutcome add_degree2(const Config& input, const std::string& v, int start, int len, const HElem& label) {
  require_vertex(input, v);
  Config c = input;
  TorusGraph& g = c.graph;
  const bool white = g.is_white(v);
  std::vector<int> rot = g.rotation(v);
  const int deg = g.degree(v);
  if (static_cast<int>(rot.size()) != deg) throw Error(Errc::BadPartition, "faces around " + v + " are inconsistent");
  if (start < 0 || start >= deg || len < 1 || len > deg - 1)
    throw Error(Errc::BadPartition, "partition [" + std::to_string(start) + "," + std::to_string(len) + "] of degree " +
                                        std::to_string(deg));
  Kind want = white ? Kind::Hyperplane : Kind::Point;
  if (label.kind != want || label.dim() != c.d) throw Error(Errc::KindMismatch, "new label must be a " + std::string(kind_name(want)));
  const HElem& own = c.label(v);
  Scalar p = white ? pairing(label, own) : pairing(own, label);
  if (p.is_zero()) throw Error(Errc::IncidentLabel, "new label is incident to the label of " + v);
  if (len + 1 > c.d + 2 || deg - len + 1 > c.d + 2) throw Error(Errc::DegreeOverflow, "split of " + v);

  std::set<int> arc;
  for (int i = 0; i < len; ++i) arc.insert(rot[(start + i) % deg]);
  const std::string vp = fresh_id(g);
  (white ? g.white : g.black).push_back(vp);
  const std::string u = fresh_id(g);
  (white ? g.black : g.white).push_back(u);
  for (int e : arc) (white ? g.edges[e].w : g.edges[e].b) = vp;
  const int e_vu = white ? add_edge(g, v, u, {0, 0}) : add_edge(g, u, v, {0, 0});
  const int e_vpu = white ? add_edge(g, vp, u, {0, 0}) : add_edge(g, u, vp, {0, 0});

  for (auto& f : g.faces) {
    const int n = static_cast<int>(f.verts.size());
    if (std::find(f.verts.begin(), f.verts.end(), v) == f.verts.end()) continue;
    Face nf{f.id, {}, {}};
    for (int j = 0; j < n; ++j) {
      if (f.verts[j] != v) {
        nf.verts.push_back(f.verts[j]);
        nf.edges.push_back(f.edges[j]);
        continue;
      }
      bool in_arc = arc.count(f.edges[(j + n - 1) % n]), out_arc = arc.count(f.edges[j]);
      if (in_arc && out_arc) {
        nf.verts.push_back(vp);
      } else if (!in_arc && !out_arc) {
        nf.verts.push_back(v);
      } else if (!in_arc) {
        nf.verts.insert(nf.verts.end(), {v, u, vp});
        nf.edges.insert(nf.edges.end(), {e_vu, e_vpu});
      } else {
        nf.verts.insert(nf.verts.end(), {vp, u, v});
        nf.edges.insert(nf.edges.end(), {e_vpu, e_vu});
      }
      nf.edges.push_back(f.edges[j]);
    }
    f = std::move(nf);
  }
  c.labels[vp] = own;
  c.labels[u] = label;
  c.basis.reset();
  MoveOutcome out{std::move(c), {}};
  out.record.created = {vp, u};
  return out;
}

MoveOutcome urban_renewal(const Config& input, const std::string& face_id) {
  int fi = input.graph.face_index(face_id);
  if (fi < 0) throw Error(Errc::UnknownFace, "no face " + face_id);
  Config c = input;
  TorusGraph& g = c.graph;
  Face face = g.faces[fi];
  if (face.verts.size() != 4) throw Error(Errc::NotQuadrilateral, "face " + face_id + " has " + std::to_string(face.verts.size()) + " corners");
  if (!g.is_white(face.verts[0])) {
    std::rotate(face.verts.begin(), face.verts.begin() + 1, face.verts.end());
    std::rotate(face.edges.begin(), face.edges.begin() + 1, face.edges.end());
  }
  const std::string A = face.verts[0], cc = face.verts[1], B = face.verts[2], d = face.verts[3];
  const int e1 = face.edges[0], e2 = face.edges[1], e3 = face.edges[2], e4 = face.edges[3];
  if (A == B || cc == d || std::set<int>{e1, e2, e3, e4}.size() != 4)
    throw Error(Errc::NotQuadrilateral, "face " + face_id + " repeats a vertex or edge");

  HElem E = meet_element({c.label(A), c.label(B)}, neighbour_labels(c, cc, {e1, e2}), "E");
  HElem F = meet_element({c.label(A), c.label(B)}, neighbour_labels(c, d, {e3, e4}), "F");
  HElem gl = meet_element({c.label(cc), c.label(d)}, neighbour_labels(c, A, {e1, e4}), "g");
  HElem hl = meet_element({c.label(cc), c.label(d)}, neighbour_labels(c, B, {e2, e3}), "h");

  const H a1 = g.edges[e1].h, a2 = g.edges[e2].h, a4 = g.edges[e4].h;
  const std::string gid = fresh_id(g);
  g.black.push_back(gid);
  const std::string Eid = fresh_id(g);
  g.white.push_back(Eid);
  const std::string hid = fresh_id(g);
  g.black.push_back(hid);
  const std::string Fid = fresh_id(g);
  g.white.push_back(Fid);

  const int Ag = add_edge(g, A, gid, {0, 0});
  const int Ec = add_edge(g, Eid, cc, a1);
  const int Bh = add_edge(g, B, hid, sub(a2, a1));
  const int Fd = add_edge(g, Fid, d, a4);
  const int Eg = add_edge(g, Eid, gid, {0, 0});
  const int Eh = add_edge(g, Eid, hid, {0, 0});
  const int Fh = add_edge(g, Fid, hid, {0, 0});
  const int Fg = add_edge(g, Fid, gid, {0, 0});

  for (int k = 0; k < static_cast<int>(g.faces.size()); ++k) {
    Face& f = g.faces[k];
    if (k == fi) {
      f.verts = {gid, Eid, hid, Fid};
      f.edges = {Eg, Eh, Fh, Fg};
      continue;
    }
    const int n = static_cast<int>(f.verts.size());
    Face nf{f.id, {}, {}};
    for (int j = 0; j < n; ++j) {
      const std::string& x = f.verts[j];
      const int e = f.edges[j];
      nf.verts.push_back(x);
      auto expand = [&](const std::string& from, std::initializer_list<int> es, std::initializer_list<std::string> vs) {
        if (x != from) throw Error(Errc::BadParameters, "face " + f.id + " is oriented against face " + face_id);
        nf.edges.insert(nf.edges.end(), es.begin(), es.end());
        nf.verts.insert(nf.verts.end(), vs.begin(), vs.end());
      };
      if (e == e1)
        expand(cc, {Ec, Eg, Ag}, {Eid, gid});
      else if (e == e2)
        expand(B, {Bh, Eh, Ec}, {hid, Eid});
      else if (e == e3)
        expand(d, {Fd, Fh, Bh}, {Fid, hid});
      else if (e == e4)
        expand(A, {Ag, Fg, Fd}, {gid, Fid});
      else
        nf.edges.push_back(e);
    }
    f = std::move(nf);
  }
  erase_edges(g, {e1, e2, e3, e4});
  c.labels[gid] = gl;
  c.labels[Eid] = E;
  c.labels[hid] = hl;
  c.labels[Fid] = F;
  c.basis.reset();
  MoveOutcome out{std::move(c), {}};
  out.record.created = {gid, Eid, hid, Fid};
  return out;
}

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::Urban: return "urban";
    case MoveKind::Remove2: return "remove2";
    case MoveKind::Add2: return "add2";
  }
  return "?";
}

MoveOutcome apply_step(const Config& c, const MoveStep& s) {
  switch (s.op) {
    case MoveKind::Urban:
      return urban_renewal(c, s.target);
    case MoveKind::Remove2:
      return remove_degree2(c, s.target);
    case MoveKind::Add2: {
      if (!s.label || !s.partition) throw Error(Errc::BadPartition, "add2 needs a label and a partition");
      require_vertex(c, s.target);
      Kind k = c.graph.is_white(s.target) ? Kind::Hyperplane : Kind::Point;
      return add_degree2(c, s.target, (*s.partition)[0], (*s.partition)[1], HElem{*s.label, k});
    }
  }
  throw Error(Errc::BadParameters, "unknown move");
}

ScriptResult apply_script(const Config& c, const MoveScript& s, bool validate) {
  ScriptResult r{c, {}};
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    MoveOutcome o;
    try {
      o = apply_step(r.config, s[i]);
    } catch (const Error& e) {
      throw ScriptError(i, e.code(), e.what());
    }
    r.config = std::move(o.config);
    TraceEntry t;
    t.step = i;
    t.op = move_name(s[i].op);
    t.target = s[i].target;
    t.record = o.record;
    if (validate) {
      try {
        t.v_ok = check_V(r.config).ok;
        FReport f = check_F(r.config);
        t.f_ok = f.ok;
        t.failing_faces = static_cast<int>(f.failing_faces.size());
      } catch (const Error& e) {
        t.v_ok = t.f_ok = false;
        t.note = e.what();
      }
    }
    r.trace.push_back(std::move(t));
  }
  return r;
}

MoveScript script_from_json(const std::string& text) {
  using nlohmann::json;
  MoveScript s;
  try {
    json j = json::parse(text);
    if (!j.is_array()) throw Error(Errc::Parse, "script must be an array");
    for (const auto& x : j) {
      MoveStep st;
      std::string op = x.at("op").get<std::string>();
      if (op == "urban")
        st.op = MoveKind::Urban;
      else if (op == "remove2")
        st.op = MoveKind::Remove2;
      else if (op == "add2")
        st.op = MoveKind::Add2;
      else
        throw Error(Errc::Parse, "unknown op " + op);
      st.target = x.at("target").get<std::string>();
      if (x.contains("label") && !x.at("label").is_null()) {
        Vec v;
        for (const auto& y : x.at("label")) v.push_back(y.is_string() ? Scalar::parse(y.get<std::string>()) : Scalar::parse(y.dump()));
        st.label = v;
      }
      if (x.contains("partition") && !x.at("partition").is_null()) {
        auto p = x.at("partition").get<std::vector<int>>();
        if (p.size() != 2) throw Error(Errc::Parse, "partition must be [start, length]");
        st.partition = std::array<int, 2>{p[0], p[1]};
      }
      s.push_back(std::move(st));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
  return s;
}

std::string script_to_json(const MoveScript& s) {
  using nlohmann::json;
  json j = json::array();
  for (const auto& st : s) {
    json x;
    x["op"] = move_name(st.op);
    x["target"] = st.target;
    if (st.label) {
      json l = json::array();
      for (const auto& v : *st.label) l.push_back(v.str());
      x["label"] = l;
    }
    if (st.partition) x["partition"] = {(*st.partition)[0], (*st.partition)[1]};
    j.push_back(x);
  }
  return j.dump(2) + "\n";
}

}  // namespace incidence
