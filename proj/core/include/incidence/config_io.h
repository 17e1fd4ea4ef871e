#pragma once

#include <string>

#include "incidence/torus.h"

namespace incidence {

// Config file format:
// { "dimension", "scalar": "rational"|"float",
//   "white": [{"id", "coords": [...]}], "black": [...],
//   "edges": [{"w", "b", "h": [int, int]}], "faces": [[ids...]],
//   "face_ids": [...], "face_edges": [[edge refs...]],   (optional)
//   "basis_cycles": {"z1": [edge refs], "z2": [...]} }   (optional)
// A vertex listed without "coords" is unlabeled.
Config config_from_json(const std::string& text);
std::string config_to_json(const Config& c);

HElem elem_from_strings(const std::vector<std::string>& coords, Kind kind);
std::vector<std::string> elem_to_strings(const HElem& e);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace incidence
