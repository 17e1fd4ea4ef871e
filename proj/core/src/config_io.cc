#include "incidence/config_io.h"

#include <fstream>
#include <sstream>

#include "incidence/error.h"
#include "json.hpp"

namespace incidence {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_number()) return Scalar::parse(j.dump());
  throw Error(Errc::Parse, "coordinate must be a string or number");
}

HElem elem_from_json(const json& coords, Kind kind) {
  if (!coords.is_array() || coords.empty()) throw Error(Errc::Parse, "coords must be a nonempty array");
  Vec v;
  for (const auto& x : coords) v.push_back(scalar_from_json(x));
  return HElem{v, kind};
}

json elem_to_json(const HElem& e) {
  json arr = json::array();
  for (const auto& x : e.coords) arr.push_back(x.str());
  return arr;
}

}  // namespace

HElem elem_from_strings(const std::vector<std::string>& coords, Kind kind) {
  Vec v;
  for (const auto& s : coords) v.push_back(Scalar::parse(s));
  return HElem{v, kind};
}

std::vector<std::string> elem_to_strings(const HElem& e) {
  std::vector<std::string> out;
  for (const auto& x : e.coords) out.push_back(x.str());
  return out;
}

Config config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
  try {
    Config c;
    c.d = j.at("dimension").get<int>();
    if (c.d < 1) throw Error(Errc::Parse, "dimension must be positive");
    auto read_side = [&](const char* key, std::vector<std::string>& ids, Kind kind) {
      for (const auto& v : j.at(key)) {
        std::string id = v.at("id").get<std::string>();
        ids.push_back(id);
        if (v.contains("coords") && !v.at("coords").is_null()) {
          HElem e = elem_from_json(v.at("coords"), kind);
          if (e.dim() != c.d) throw Error(Errc::DimensionMismatch, "label of " + id + " has wrong length");
          c.labels[id] = e;
        }
      }
    };
    read_side("white", c.graph.white, Kind::Point);
    read_side("black", c.graph.black, Kind::Hyperplane);
    for (const auto& e : j.at("edges")) {
      Edge ed;
      ed.w = e.at("w").get<std::string>();
      ed.b = e.at("b").get<std::string>();
      if (e.contains("h")) {
        auto h = e.at("h");
        if (!h.is_array() || h.size() != 2) throw Error(Errc::Parse, "h must be a pair of integers");
        ed.h = {h[0].get<long>(), h[1].get<long>()};
      }
      c.graph.edges.push_back(ed);
    }
    for (const auto& f : j.at("faces")) {
      Face face;
      for (const auto& v : f) face.verts.push_back(v.get<std::string>());
      c.graph.faces.push_back(face);
    }
    if (j.contains("face_ids")) {
      const auto& ids = j.at("face_ids");
      if (ids.size() != c.graph.faces.size()) throw Error(Errc::Parse, "face_ids length differs from faces");
      for (std::size_t i = 0; i < ids.size(); ++i) c.graph.faces[i].id = ids[i].get<std::string>();
    } else {
      for (auto& f : c.graph.faces) f.id = face_key(f.verts);
    }
    if (j.contains("face_edges")) {
      const auto& fe = j.at("face_edges");
      if (fe.size() != c.graph.faces.size()) throw Error(Errc::Parse, "face_edges length differs from faces");
      for (std::size_t i = 0; i < fe.size(); ++i) c.graph.faces[i].edges = fe[i].get<std::vector<int>>();
    } else {
      infer_face_edges(c.graph);
    }
    if (j.contains("basis_cycles") && !j.at("basis_cycles").is_null()) {
      BasisCycles b;
      b.z1 = j.at("basis_cycles").at("z1").get<std::vector<int>>();
      b.z2 = j.at("basis_cycles").at("z2").get<std::vector<int>>();
      c.basis = b;
    }
    return c;
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

std::string config_to_json(const Config& c) {
  json j;
  j["dimension"] = c.d;
  bool any_float = false;
  for (const auto& [id, e] : c.labels)
    for (const auto& x : e.coords) any_float |= x.is_float();
  j["scalar"] = any_float ? "float" : "rational";
  auto side = [&](const std::vector<std::string>& ids) {
    json arr = json::array();
    for (const auto& id : ids) {
      json v;
      v["id"] = id;
      auto it = c.labels.find(id);
      if (it != c.labels.end()) v["coords"] = elem_to_json(it->second);
      arr.push_back(v);
    }
    return arr;
  };
  j["white"] = side(c.graph.white);
  j["black"] = side(c.graph.black);
  json edges = json::array();
  for (const auto& e : c.graph.edges) edges.push_back({{"w", e.w}, {"b", e.b}, {"h", {e.h[0], e.h[1]}}});
  j["edges"] = edges;
  json faces = json::array(), ids = json::array(), fedges = json::array();
  for (const auto& f : c.graph.faces) {
    faces.push_back(f.verts);
    ids.push_back(f.id);
    fedges.push_back(f.edges);
  }
  j["faces"] = faces;
  j["face_ids"] = ids;
  j["face_edges"] = fedges;
  if (c.basis) j["basis_cycles"] = {{"z1", c.basis->z1}, {"z2", c.basis->z2}};
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::Io, "write failed for " + path);
}

}  // namespace incidence
