#pragma once

#include "windrose/error.hpp"

namespace windrose {

template <class Point>
QConstraints constraints_from_points(const PlaneGraph& g, const std::vector<Point>& pts) {
  QConstraints q(g.dart_count());
  for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d) {
    const auto& a = pts[g.tail(d)];
    const auto& b = pts[g.head(d)];
    if (a.x == b.x || a.y == b.y)
      throw error(errc::bad_params, "edge " + g.name(g.tail(d)) + "-" + g.name(g.head(d)) +
                                        " is axis-parallel");
    q.set(d, quadrant_from_signs(b.x > a.x ? 1 : -1, b.y > a.y ? 1 : -1));
  }
  return q;
}

}  // namespace windrose
