#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "windrose/constraints.hpp"
#include "windrose/geometry.hpp"
#include "windrose/plane_graph.hpp"

namespace windrose {

struct GeneratedInstance {
  PlaneGraph graph;
  QConstraints q;
  /// Straight-line drawing the quadrants were read from, when there is one.
  std::optional<RationalDrawing> witness;
};

/// Plane graph of a straight-line drawing: rotations from the angular order
/// of the edges, outer face = the clockwise facial walk.
template <class T>
PlaneGraph plane_graph_from_drawing(std::vector<std::string> names,
                                    const std::vector<Point<T>>& points,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges);

/// q-constraints and witness taken from the drawing.
template <class T>
GeneratedInstance instance_from_drawing(std::vector<std::string> names,
                                        const std::vector<Point<T>>& points,
                                        const std::vector<std::pair<VertexId, VertexId>>& edges);

/// n random points with distinct x and distinct y coordinates, Delaunay
/// triangulated.
GeneratedInstance generate_delaunay(int n, std::uint64_t seed);

/// k nested triangles, alternating NE-SW and NW-SE edge directions, joined by
/// corner-to-corner edges.
GeneratedInstance generate_nested_triangles(int k);

/// Planar 3-tree on n >= 3 vertices with exact rational coordinates.
GeneratedInstance generate_apollonian(int n, std::uint64_t seed);

/// A random connected plane subgraph of a small random triangulation,
/// optionally with random quadrant relabeling of some edges (may produce
/// no-instances). Used for exhaustive oracle comparisons.
GeneratedInstance generate_random_small(int n, std::uint64_t seed, double keep_edge_probability,
                                        double relabel_probability);

/// Named fixed instances: triangle, cyclic-triangle, path-ambiguous, k4-apex,
/// quad-diamond, pole-square, star.
GeneratedInstance generate_fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace windrose
