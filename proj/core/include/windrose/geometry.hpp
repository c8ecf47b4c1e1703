#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "windrose/plane_graph.hpp"

namespace windrose {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
struct Point {
  T x{};
  T y{};
  bool operator==(const Point&) const = default;
};

/// Vertex positions plus bend points per edge. Bends of edge e run from
/// tail(g.dart_of(e)) to head(g.dart_of(e)).
template <class T>
struct Drawing {
  std::vector<Point<T>> points;
  std::vector<std::vector<Point<T>>> bends;

  bool operator==(const Drawing&) const = default;

  std::size_t max_bends() const {
    std::size_t m = 0;
    for (const auto& b : bends) m = std::max(m, b.size());
    return m;
  }
};

using GridDrawing = Drawing<std::int64_t>;
using RationalDrawing = Drawing<Rational>;

/// Full point sequence of a dart's curve, from tail to head.
template <class T>
std::vector<Point<T>> dart_polyline(const PlaneGraph& g, const Drawing<T>& d, DartId dart) {
  const EdgeId e = g.edge_of(dart);
  std::vector<Point<T>> pts;
  pts.push_back(d.points[g.tail(dart)]);
  const auto& b = d.bends[e];
  if (g.dart_of(e) == dart)
    pts.insert(pts.end(), b.begin(), b.end());
  else
    pts.insert(pts.end(), b.rbegin(), b.rend());
  pts.push_back(d.points[g.head(dart)]);
  return pts;
}

namespace geom {

__extension__ typedef __int128 int128;

// Wide type for products of coordinate differences.
template <class T>
struct wide {
  using type = T;
};
template <>
struct wide<std::int64_t> {
  using type = int128;
};
template <class T>
using wide_t = typename wide<T>::type;

template <class T>
wide_t<T> cross(const Point<T>& o, const Point<T>& a, const Point<T>& b) {
  using W = wide_t<T>;
  return W(a.x - o.x) * W(b.y - o.y) - W(a.y - o.y) * W(b.x - o.x);
}

template <class T>
int orient(const Point<T>& o, const Point<T>& a, const Point<T>& b) {
  auto c = cross(o, a, b);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

template <class T>
bool on_segment(const Point<T>& a, const Point<T>& b, const Point<T>& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Closed segments share at least one point.
template <class T>
bool segments_intersect(const Point<T>& a, const Point<T>& b, const Point<T>& c,
                        const Point<T>& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b);
}

/// Segments ab and ac share endpoint a: they meet elsewhere only if they overlap.
template <class T>
bool overlap_from_shared(const Point<T>& a, const Point<T>& b, const Point<T>& c) {
  if (orient(a, b, c) != 0) return false;
  // Collinear: same direction from a means overlap.
  using W = wide_t<T>;
  W dot = W(b.x - a.x) * W(c.x - a.x) + W(b.y - a.y) * W(c.y - a.y);
  return dot > 0;
}

/// Half-plane class for angular sorting: 0 for directions in [0, 180), 1 otherwise.
template <class T>
int half(const Point<T>& v) {
  return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

/// Counterclockwise angular order of direction vectors starting at +x.
template <class T>
bool angle_less(const Point<T>& a, const Point<T>& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Point<T> o{T(0), T(0)};
  return cross(o, a, b) > 0;
}

template <class T>
Point<T> sub(const Point<T>& a, const Point<T>& b) {
  return {a.x - b.x, a.y - b.y};
}

/// Twice the signed area of a closed polygon.
template <class T>
wide_t<T> twice_area(const std::vector<Point<T>>& poly) {
  wide_t<T> s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    s += wide_t<T>(p.x) * wide_t<T>(q.y) - wide_t<T>(q.x) * wide_t<T>(p.y);
  }
  return s;
}

}  // namespace geom
}  // namespace windrose
