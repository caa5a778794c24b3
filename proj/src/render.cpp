#include "qtile/render.hpp"

#include <cmath>
#include <cstdio>

namespace qtile {

namespace {

struct Pt {
  double x, y;
};

class Frame {
 public:
  Frame(const HexagonRegion& region, double scale) : scale_(scale) {
    bool first = true;
    for (const auto& c : region.corners()) {
      Pt p = raw(c.x, c.y);
      if (first || p.x < min_x_) min_x_ = p.x;
      if (first || p.y < min_y_) min_y_ = p.y;
      if (first || p.x > max_x_) max_x_ = p.x;
      if (first || p.y > max_y_) max_y_ = p.y;
      first = false;
    }
  }

  // Lattice (X, Y) to page coordinates; larger X is further west.
  Pt raw(double X, double Y) const { return {-X * std::sqrt(3.0) / 2 * scale_, (X / 2 + Y) * scale_}; }
  Pt at(double X, double Y) const {
    Pt p = raw(X, Y);
    return {p.x - min_x_ + margin(), p.y - min_y_ + margin()};
  }
  double width() const { return max_x_ - min_x_ + 2 * margin(); }
  double height() const { return max_y_ - min_y_ + 2 * margin(); }
  double margin() const { return scale_ / 2; }

 private:
  double scale_;
  double min_x_ = 0, min_y_ = 0, max_x_ = 0, max_y_ = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string pt(const Pt& p) { return fmt(p.x) + "," + fmt(p.y); }

// Outline of a lozenge: the up triangle's vertices plus the far vertex of
// the down triangle, walked in boundary order.
std::vector<LatticePoint> outline(const Lozenge& l) {
  const int x = l.up.x, y = l.up.y;
  switch (l.orientation) {
    case Orientation::Right:  // shared edge (x+1,y)-(x,y+1)
      return {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
    case Orientation::Horizontal:  // shared edge (x,y)-(x,y+1)
      return {{x, y}, {x + 1, y}, {x, y + 1}, {x - 1, y + 1}};
    case Orientation::Left:  // shared edge (x,y)-(x+1,y)
      return {{x, y}, {x + 1, y - 1}, {x + 1, y}, {x, y + 1}};
  }
  return {};
}

const char* fill(Orientation o) {
  switch (o) {
    case Orientation::Horizontal: return "#b0b0b0";
    case Orientation::Right: return "#ffffff";
    case Orientation::Left: return "#e8e8e8";
  }
  return "#ffffff";
}

}  // namespace

std::string render_svg(const LozengeTiling& t, const SvgOptions& opt) {
  const HexagonRegion& region = t.region();
  if (region.triangles().empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";
  Frame f(region, opt.scale);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(f.width()) + "\" height=\"" +
                    fmt(f.height()) + "\" viewBox=\"0 0 " + fmt(f.width()) + " " + fmt(f.height()) + "\">\n";
  out += "<g stroke=\"#000000\" stroke-width=\"1\">\n";
  for (const auto& l : t.lozenges()) {  // sorted by up triangle
    out += "<polygon points=\"";
    bool first = true;
    for (const auto& v : outline(l)) {
      if (!first) out += " ";
      out += pt(f.at(v.x, v.y));
      first = false;
    }
    out += std::string("\" fill=\"") + fill(l.orientation) + "\"/>\n";
  }
  out += "</g>\n";

  // The axis runs along x = 0 from the north vertex to the far side.
  const auto c = region.corners();
  int y_lo = c[0].y, y_hi = c[0].y;
  for (const auto& tri : hexagon_triangles(region.bounds()))
    if (tri.x == 0 || tri.x == -1) y_hi = std::max(y_hi, tri.y + 1);
  out += "<line x1=\"" + fmt(f.at(0, y_lo).x) + "\" y1=\"" + fmt(f.at(0, y_lo).y) + "\" x2=\"" +
         fmt(f.at(0, y_hi).x) + "\" y2=\"" + fmt(f.at(0, y_hi).y) +
         "\" stroke=\"#c00000\" stroke-width=\"1\" stroke-dasharray=\"2,3\"/>\n";

  if (opt.paths && region.is_full()) {
    for (const auto& path : tiling_to_paths(t)) {
      out += "<polyline fill=\"none\" stroke=\"#0050c0\" stroke-width=\"2\" points=\"";
      bool first = true;
      for (const auto& s : path.steps) {
        // Centre of the lozenge: mean of its outline.
        double X = 0, Y = 0;
        for (const auto& v : outline(s.lozenge)) {
          X += v.x / 4.0;
          Y += v.y / 4.0;
        }
        if (!first) out += " ";
        out += pt(f.at(X, Y));
        first = false;
      }
      out += "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string render_ascii(const LozengeTiling& t) {
  const HexagonRegion& region = t.region();
  if (region.triangles().empty()) return "";
  const BoxBounds& b = region.bounds();
  std::string out = "H" + to_string(b) + " pi=" + format_plane_partition(tiling_to_pp(t)) + "\n";
  for (const auto& path : tiling_to_paths(t)) {
    std::string line;
    for (const auto& s : path.steps) {
      if (s.lozenge.orientation == Orientation::Horizontal)
        line += region.on_axis(s.lozenge) ? "_|_" : "___";
      else
        line += " \\ ";
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace qtile
