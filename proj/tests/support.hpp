#pragma once

// Shared helpers for the test binaries. The oracles here deliberately avoid
// the library's own machinery (faces, labelings, flows) where the point of a
// check is to confirm that machinery.

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "windrose/augment.hpp"
#include "windrose/generate.hpp"
#include "windrose/io.hpp"
#include "windrose/labeling.hpp"

namespace wt {

using namespace windrose;

inline std::string fixture_path(const std::string& name) {
  return std::string(WINDROSE_FIXTURE_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Instance load_fixture(const std::string& name) {
  return to_instance(parse_instance(read_text(fixture_path(name))));
}

inline VertexId vid(const PlaneGraph& g, const std::string& name) { return g.find_vertex(name).value(); }
inline DartId dart(const PlaneGraph& g, const std::string& u, const std::string& v) {
  return g.find_dart(vid(g, u), vid(g, v)).value();
}

// Quadrant of b as seen from a, read straight off coordinates.
template <class T>
Quadrant quadrant_of(const Point<T>& a, const Point<T>& b) {
  const bool east = b.x > a.x, north = b.y > a.y;
  if (north) return east ? Quadrant::ne : Quadrant::nw;
  return east ? Quadrant::se : Quadrant::sw;
}

// Number of faces by walking the face permutation directly.
inline std::size_t count_faces(const PlaneGraph& g) {
  std::vector<char> seen(g.dart_count(), 0);
  std::size_t faces = 0;
  for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d) {
    if (seen[d]) continue;
    ++faces;
    for (DartId x = d; !seen[x]; x = g.cw_next(g.twin(x))) seen[x] = 1;
  }
  return faces;
}

// Clockwise quadrant steps from a to b, from the fixed order NW, NE, SE, SW.
inline int steps_cw(Quadrant a, Quadrant b) {
  const std::vector<Quadrant> order{Quadrant::nw, Quadrant::ne, Quadrant::se, Quadrant::sw};
  auto ia = std::find(order.begin(), order.end(), a) - order.begin();
  auto ib = std::find(order.begin(), order.end(), b) - order.begin();
  return static_cast<int>((ib - ia + 4) % 4);
}

// Refinement identity: every angle of `before` equals the sum of the angles
// of `after` clockwise between its two darts. Dart ids survive surgery.
inline bool refines(const PlaneGraph& before, const AngleLabeling& a_before, const PlaneGraph& after,
                    const AngleLabeling& a_after, std::string* why = nullptr) {
  for (DartId e = 0; e < static_cast<DartId>(before.dart_count()); ++e) {
    const DartId stop = before.cw_next(e);
    int sum = 0;
    DartId x = e;
    do {
      sum += a_after.deg(x);
      x = after.cw_next(x);
    } while (x != stop && x != e);
    if (sum != a_before.deg(e)) {
      if (why)
        *why = "angle at " + before.name(before.tail(e)) + " was " +
               std::to_string(a_before.deg(e)) + ", now sums to " + std::to_string(sum);
      return false;
    }
  }
  return true;
}

// Vertex and cycle condition sums computed without FaceIndex.
inline bool angular_by_hand(const PlaneGraph& g, const AngleLabeling& a) {
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    int sum = 0;
    for (DartId d : g.rotation(v)) sum += a.deg(d);
    if (g.degree(v) > 0 && sum != 360) return false;
  }
  std::vector<char> seen(g.dart_count(), 0);
  for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d) {
    if (seen[d]) continue;
    int k = 0, sum = 0;
    bool outer = false;
    for (DartId x = d; !seen[x]; x = g.cw_next(g.twin(x))) {
      seen[x] = 1;
      ++k;
      outer = outer || x == g.outer_dart();
      // The angle entered by x sits at head(x), between twin(x) and its cw successor.
      sum += a.deg(g.twin(x));
    }
    if (sum != k * 180 + (outer ? 360 : -360)) return false;
  }
  return true;
}

}  // namespace wt
