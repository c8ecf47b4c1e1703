#include <cmath>
#include <limits>
#include <sstream>

#include "windrose/io.hpp"

namespace windrose {

namespace {

double to_double(std::int64_t v) { return static_cast<double>(v); }
double to_double(const Rational& r) { return r.convert_to<double>(); }

const char* colour(Quadrant o) {
  switch (o) {
    case Quadrant::ne: return "#d62728";
    case Quadrant::nw: return "#1f77b4";
    case Quadrant::sw: return "#2ca02c";
    case Quadrant::se: return "#ff7f0e";
  }
  return "#000000";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

template <class T>
std::string drawing_to_svg(const PlaneGraph& g, const QConstraints& q, const Drawing<T>& d) {
  constexpr double unit = 20.0;  // px per grid unit
  constexpr double margin = 20.0;
  double minx = std::numeric_limits<double>::max(), miny = minx;
  double maxx = std::numeric_limits<double>::lowest(), maxy = maxx;
  auto grow = [&](const Point<T>& p) {
    double x = to_double(p.x), y = to_double(p.y);
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  };
  for (const auto& p : d.points) grow(p);
  for (const auto& b : d.bends)
    for (const auto& p : b) grow(p);
  if (d.points.empty()) minx = maxx = miny = maxy = 0;

  // Drawings with tiny rational coordinates are stretched to stay readable.
  const double extent = std::max({maxx - minx, maxy - miny, 1e-9});
  const double s = extent < 4 ? unit * 4 / extent : unit;
  auto px = [&](double x) { return margin + (x - minx) * s; };
  auto py = [&](double y) { return margin + (maxy - y) * s; };
  const double width = 2 * margin + (maxx - minx) * s;
  const double height = 2 * margin + (maxy - miny) * s;

  std::ostringstream out;
  out.precision(2);
  out << std::fixed;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n<defs>\n";
  for (Quadrant o : all_quadrants)
    out << "  <marker id=\"arrow-" << to_string(o)
        << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
           "orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\""
        << colour(o) << "\"/></marker>\n";
  out << "</defs>\n<g fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\">\n";
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    auto pts = dart_polyline(g, d, g.dart_of(e));
    out << "  <polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      out << (i ? " " : "") << px(to_double(pts[i].x)) << ',' << py(to_double(pts[i].y));
    out << "\"/>\n";
  }
  out << "</g>\n<g stroke-width=\"1.5\">\n";
  for (DartId x = 0; x < static_cast<DartId>(g.dart_count()); ++x) {
    auto pts = dart_polyline(g, d, x);
    double x0 = px(to_double(pts[0].x)), y0 = py(to_double(pts[0].y));
    double x1 = px(to_double(pts[1].x)), y1 = py(to_double(pts[1].y));
    double len = std::hypot(x1 - x0, y1 - y0);
    double t = len > 0 ? std::min(0.35, 14.0 / len) : 0;
    Quadrant o = q.at(x);
    out << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 + (x1 - x0) * t
        << "\" y2=\"" << y0 + (y1 - y0) * t << "\" stroke=\"" << colour(o)
        << "\" marker-end=\"url(#arrow-" << to_string(o) << ")\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    double x = px(to_double(d.points[v].x)), y = py(to_double(d.points[v].y));
    out << "  <circle cx=\"" << x << "\" cy=\"" << y
        << "\" r=\"3.5\" fill=\"#000000\"><title>" << escape(g.name(v)) << "</title></circle>\n";
    out << "  <text x=\"" << x + 5 << "\" y=\"" << y - 5 << "\">" << escape(g.name(v)) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

template std::string drawing_to_svg(const PlaneGraph&, const QConstraints&, const GridDrawing&);
template std::string drawing_to_svg(const PlaneGraph&, const QConstraints&,
                                    const RationalDrawing&);

}  // namespace windrose
