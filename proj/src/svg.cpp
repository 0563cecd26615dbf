#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "chaingeo/scene.hpp"

namespace chaingeo::lie {

namespace {

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  bool empty() const { return min_x > max_x; }
  void add(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
};

std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

// Arrowhead triangle at `tip` pointing along unit vector `dir` (world coordinates).
std::string arrow(const Vector2<double>& tip, const Vector2<double>& dir, double size, const std::string& stroke) {
  const Vector2<double> normal(-dir.y(), dir.x());
  const Vector2<double> back = tip - size * dir;
  const Vector2<double> l = back + 0.5 * size * normal;
  const Vector2<double> r = back - 0.5 * size * normal;
  std::ostringstream os;
  os << "<path class=\"arrow\" d=\"M " << num(tip.x()) << ' ' << num(-tip.y()) << " L " << num(l.x()) << ' '
     << num(-l.y()) << " L " << num(r.x()) << ' ' << num(-r.y()) << " Z\" fill=\"" << stroke << "\"/>";
  return os.str();
}

// Liang-Barsky clipping of the infinite line through `p` with direction `d`.
bool clip_line(const Box& box, const Vector2<double>& p, const Vector2<double>& d, Vector2<double>& a,
               Vector2<double>& b) {
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  const double lo[2] = {box.min_x, box.min_y};
  const double hi[2] = {box.max_x, box.max_y};
  for (int k = 0; k < 2; ++k) {
    if (std::abs(d[k]) < 1e-15) {
      if (p[k] < lo[k] || p[k] > hi[k]) return false;
      continue;
    }
    double ta = (lo[k] - p[k]) / d[k];
    double tb = (hi[k] - p[k]) / d[k];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
  }
  if (t0 > t1) return false;
  a = p + t0 * d;
  b = p + t1 * d;
  return true;
}

}  // namespace

std::string render_svg(std::span<const Cycle> cycles, std::span<const std::string> strokes,
                       const SvgOptions& options) {
  Box box;
  for (const auto& c : cycles) {
    if (auto* ci = std::get_if<Circle<double>>(&c)) {
      const double r = std::abs(ci->radius());
      box.add(ci->center().x() - r, ci->center().y() - r);
      box.add(ci->center().x() + r, ci->center().y() + r);
    } else if (auto* p = std::get_if<Point<double>>(&c)) {
      box.add(p->position.x(), p->position.y());
    } else if (auto* s = std::get_if<Spear<double>>(&c)) {
      box.add(s->foot().x(), s->foot().y());
    }
  }
  if (box.empty()) {
    box = Box{-10.0, -10.0, 10.0, 10.0};
  } else {
    double w = box.max_x - box.min_x;
    double h = box.max_y - box.min_y;
    if (w <= 0.0 && h <= 0.0) w = h = 2.0;
    const double extent = std::max(w, h);
    const double mx = 0.1 * std::max(w, 0.5 * extent);
    const double my = 0.1 * std::max(h, 0.5 * extent);
    box = Box{box.min_x - mx, box.min_y - my, box.max_x + mx, box.max_y + my};
  }
  const double width = box.max_x - box.min_x;
  const double height = box.max_y - box.min_y;
  const double scale = std::max(width, height);
  const double stroke_width = options.stroke_width > 0.0 ? options.stroke_width : scale / 400.0;
  const double arrow_size = scale / 40.0;

  std::ostringstream os;
  // SVG's y axis points down, so world y is negated throughout.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.min_x) << ' ' << num(-box.max_y) << ' '
     << num(width) << ' ' << num(height) << "\">\n";
  os << "<rect x=\"" << num(box.min_x) << "\" y=\"" << num(-box.max_y) << "\" width=\"" << num(width)
     << "\" height=\"" << num(height) << "\" fill=\"" << options.background << "\"/>\n";

  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const std::string stroke = i < strokes.size() ? strokes[i] : std::string("black");
    const auto& c = cycles[i];
    if (auto* ci = std::get_if<Circle<double>>(&c)) {
      const double r = std::abs(ci->radius());
      const double sense = ci->counterclockwise() ? 1.0 : -1.0;
      const Vector2<double> top = ci->center() + Vector2<double>(0.0, r);
      os << "<g class=\"cycle circle " << (ci->counterclockwise() ? "ccw" : "cw") << "\">"
         << "<circle cx=\"" << num(ci->center().x()) << "\" cy=\"" << num(-ci->center().y()) << "\" r=\"" << num(r)
         << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << num(stroke_width) << "\"/>"
         << arrow(top, Vector2<double>(-sense, 0.0), std::min(arrow_size, r), stroke) << "</g>\n";
    } else if (auto* p = std::get_if<Point<double>>(&c)) {
      os << "<g class=\"cycle point\"><circle cx=\"" << num(p->position.x()) << "\" cy=\"" << num(-p->position.y())
         << "\" r=\"" << num(2.5 * stroke_width) << "\" fill=\"" << stroke << "\"/></g>\n";
    } else if (auto* s = std::get_if<Spear<double>>(&c)) {
      Vector2<double> a, b;
      if (!clip_line(box, s->foot(), s->direction(), a, b)) continue;
      const Vector2<double> mid = 0.5 * (a + b);
      os << "<g class=\"cycle spear\"><line x1=\"" << num(a.x()) << "\" y1=\"" << num(-a.y()) << "\" x2=\""
         << num(b.x()) << "\" y2=\"" << num(-b.y()) << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(stroke_width) << "\"/>" << arrow(mid, s->direction(), arrow_size, stroke) << "</g>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace chaingeo::lie
