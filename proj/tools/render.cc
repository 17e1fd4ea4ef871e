#include "render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "incidence/error.h"

namespace incidence::cli {

namespace {

struct XY {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);  // no "-0.000"
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(const RenderSpec& spec, int d) : spec_(spec), d_(d) {
    if (!(spec.width > 0.0) || !(spec.stroke > 0.0) || !(spec.chord_stroke > 0.0) || !(spec.radius > 0.0))
      throw Error(Errc::BadParameters, "render sizes must be positive");
    if (d == 3) {
      if (!spec.projection) throw Error(Errc::UnsupportedDimension, "d = 3 needs --projection");
      if (spec.projection->size() != 3)
        throw Error(Errc::BadParameters, "projection needs 3 rows of 4 entries");
      for (const auto& row : *spec.projection)
        if (row.size() != 4) throw Error(Errc::BadParameters, "projection needs 3 rows of 4 entries");
    } else if (d != 2) {
      throw Error(Errc::UnsupportedDimension, "cannot render d = " + std::to_string(d));
    }
  }

  // Affine image of a point, or nothing for points at infinity.
  std::optional<XY> place(const HElem& p) const {
    std::array<double, 3> h{};
    if (d_ == 2) {
      for (int i = 0; i < 3; ++i) h[i] = p.coords[i].to_double();
    } else {
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) h[r] += (*spec_.projection)[r][c].to_double() * p.coords[c].to_double();
    }
    if (std::abs(h[2]) < 1e-12 * (std::abs(h[0]) + std::abs(h[1]) + 1e-300)) return std::nullopt;
    return XY{h[0] / h[2], h[1] / h[2]};
  }

  void fit(const std::vector<XY>& pts) {
    if (spec_.box) {
      box_ = *spec_.box;
    } else if (pts.empty()) {
      box_ = {-1.0, -1.0, 1.0, 1.0};
    } else {
      box_ = {pts[0].x, pts[0].y, pts[0].x, pts[0].y};
      for (const auto& p : pts) {
        box_[0] = std::min(box_[0], p.x);
        box_[1] = std::min(box_[1], p.y);
        box_[2] = std::max(box_[2], p.x);
        box_[3] = std::max(box_[3], p.y);
      }
      const double m = 0.1 * std::max({box_[2] - box_[0], box_[3] - box_[1], 1.0});
      box_ = {box_[0] - m, box_[1] - m, box_[2] + m, box_[3] + m};
    }
    for (double v : box_)
      if (!std::isfinite(v)) throw Error(Errc::BadParameters, "render box must be finite");
    if (!(box_[2] > box_[0]) || !(box_[3] > box_[1])) throw Error(Errc::BadParameters, "render box is empty");
    height_ = spec_.width * (box_[3] - box_[1]) / (box_[2] - box_[0]);
  }

  XY screen(XY p) const {
    return {(p.x - box_[0]) / (box_[2] - box_[0]) * spec_.width, height_ - (p.y - box_[1]) / (box_[3] - box_[1]) * height_};
  }

  // Segment of a x + b y + c = 0 inside the box.
  std::optional<std::pair<XY, XY>> clip(double a, double b, double c) const {
    std::vector<XY> hits;
    const double eps = 1e-9 * std::max(box_[2] - box_[0], box_[3] - box_[1]);
    if (std::abs(b) > 0.0)
      for (double x : {box_[0], box_[2]}) {
        const double y = -(a * x + c) / b;
        if (y >= box_[1] - eps && y <= box_[3] + eps) hits.push_back({x, y});
      }
    if (std::abs(a) > 0.0)
      for (double y : {box_[1], box_[3]}) {
        const double x = -(b * y + c) / a;
        if (x >= box_[0] - eps && x <= box_[2] + eps) hits.push_back({x, y});
      }
    if (hits.size() < 2) return std::nullopt;
    auto key = [&](const XY& p) { return std::abs(b) >= std::abs(a) ? p.x : p.y; };
    auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), [&](const XY& l, const XY& r) { return key(l) < key(r); });
    if (key(*hi) - key(*lo) <= eps) return std::nullopt;
    return std::make_pair(*lo, *hi);
  }

  void segment(XY p, XY q, double width, const char* cls) {
    p = screen(p);
    q = screen(q);
    body_ << "  <line class=\"" << cls << "\" x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\"" << num(q.x)
          << "\" y2=\"" << num(q.y) << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }

  void disk(XY p, const std::string& label) {
    p = screen(p);
    body_ << "  <circle class=\"point\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(spec_.radius) << "\"/>\n";
    if (spec_.labels && !label.empty())
      body_ << "  <text x=\"" << num(p.x + 1.5 * spec_.radius) << "\" y=\"" << num(p.y - 1.5 * spec_.radius) << "\">"
            << escape(label) << "</text>\n";
  }

  void line_label(XY p, const std::string& label) {
    if (!spec_.labels || label.empty()) return;
    p = screen(p);
    body_ << "  <text class=\"line-label\" x=\"" << num(p.x) << "\" y=\"" << num(p.y) << "\">" << escape(label) << "</text>\n";
  }

  std::string finish() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(spec_.width) << "\" height=\"" << num(height_)
        << "\" viewBox=\"0 0 " << num(spec_.width) << " " << num(height_) << "\">\n"
        << "  <style>.point{fill:#1f4e9c}.line{stroke:#b03a2e;fill:none}.chord{stroke:#7f7f7f;fill:none}"
           "text{font:12px sans-serif}</style>\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

  double stroke() const { return spec_.stroke; }
  double chord_stroke() const { return spec_.chord_stroke; }

 private:
  const RenderSpec& spec_;
  int d_;
  std::array<double, 4> box_{};
  double height_ = 0.0;
  std::ostringstream body_;
};

}  // namespace

Mat parse_projection(const std::string& text) {
  Mat m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    Vec r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) r.push_back(Scalar::parse(cell));
    m.push_back(r);
  }
  return m;
}

std::string render_config(const Config& c, const RenderSpec& spec) {
  Canvas cv(spec, c.d);
  std::map<std::string, XY> placed;
  std::vector<XY> finite;
  for (const auto& w : c.graph.white) {
    auto it = c.labels.find(w);
    if (it == c.labels.end()) continue;
    if (auto p = cv.place(it->second)) {
      placed[w] = *p;
      finite.push_back(*p);
    }
  }
  cv.fit(finite);

  std::set<std::pair<std::string, std::string>> drawn;
  for (const auto& f : c.graph.faces) {
    const std::size_t n = f.verts.size();
    if (n < 4) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const std::string& a = f.verts[j];
      const std::string& b = f.verts[(j + 2) % n];
      if (!c.graph.is_white(a) || !drawn.insert(std::minmax(a, b)).second) continue;
      auto pa = placed.find(a), pb = placed.find(b);
      if (pa != placed.end() && pb != placed.end()) cv.segment(pa->second, pb->second, cv.chord_stroke(), "chord");
    }
  }
  if (c.d == 2)
    for (const auto& b : c.graph.black) {
      auto it = c.labels.find(b);
      if (it == c.labels.end()) continue;
      const Vec& l = it->second.coords;
      if (auto seg = cv.clip(l[0].to_double(), l[1].to_double(), l[2].to_double())) {
        cv.segment(seg->first, seg->second, cv.stroke(), "line");
        cv.line_label(seg->second, b);
      }
    }
  for (const auto& w : c.graph.white) {
    auto it = placed.find(w);
    if (it != placed.end()) cv.disk(it->second, w);
  }
  return cv.finish();
}

std::string render_polygon(const std::vector<HElem>& pts, const RenderSpec& spec) {
  Canvas cv(spec, pts.empty() ? 2 : pts[0].dim());
  std::vector<std::optional<XY>> placed;
  std::vector<XY> finite;
  for (const auto& p : pts) {
    placed.push_back(cv.place(p));
    if (placed.back()) finite.push_back(*placed.back());
  }
  cv.fit(finite);
  const std::size_t n = pts.size();
  for (std::size_t i = 0; n >= 2 && i < n; ++i) {
    if (n == 2 && i == 1) break;
    const auto& a = placed[i];
    const auto& b = placed[(i + 1) % n];
    if (a && b) cv.segment(*a, *b, cv.stroke(), "line");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (placed[i]) cv.disk(*placed[i], std::to_string(i));
  return cv.finish();
}

}  // namespace incidence::cli
