#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "incidence/linalg.h"
#include "incidence/torus.h"

namespace incidence::cli {

struct RenderSpec {
  std::optional<std::array<double, 4>> box;  // xmin, ymin, xmax, ymax; fitted when absent
  double width = 600.0;                       // pixel width; height follows the box aspect
  double stroke = 1.5;
  double chord_stroke = 0.75;
  double radius = 4.0;
  bool labels = false;
  // Rows of a 3x4 map P^3 -> P^2; needed for d = 3.
  std::optional<Mat> projection;
};

// Parses "a,b,c,d;e,f,g,h;i,j,k,l".
Mat parse_projection(const std::string& text);

// Points as disks, hyperplanes as lines clipped to the box, and the chord
// between consecutive whites of every face (sides and diagonals for the
// pentagram template). Planes of P^3 are not drawn under a projection.
std::string render_config(const Config& c, const RenderSpec& spec);
// Closed polygon: vertices and sides.
std::string render_polygon(const std::vector<HElem>& pts, const RenderSpec& spec);

}  // namespace incidence::cli
