#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "windrose/constraints.hpp"
#include "windrose/labeling.hpp"
#include "windrose/plane_graph.hpp"

namespace windrose {

enum class SurgeryStep { wrap, ear_cut, subdivision, poles };

/// Called after every surgery step with the current graph and its labeling.
/// Darts that existed before the step keep their ids.
using SurgeryObserver =
    std::function<void(SurgeryStep, const PlaneGraph&, const AngleLabeling&)>;

/// Original edge -> path in the augmented graph. Vertex ids of the original
/// graph are preserved by every stage, so paths are written with them.
struct SubdivisionMap {
  std::vector<std::vector<VertexId>> replacement;  // per original edge, from tail(dart_of(e))
  std::vector<VertexId> dummy_vertices;
  std::vector<EdgeId> dummy_edges;  // ids in the augmented graph

  /// Identity map for g.
  static SubdivisionMap identity(const PlaneGraph& g);
  std::size_t subdivided_count() const;
};

struct Triangulation {
  PlaneGraph graph;
  AngleLabeling labeling;
  bool wrapped = false;
  std::size_t ear_cuts = 0;
};

Triangulation triangulate_preserving_labeling(const PlaneGraph& g, const AngleLabeling& a,
                                              const SurgeryObserver& observer = {});

enum class Direction { up, right, down, left };

/// Path from v to the outer face by the extreme-neighbour rules. Throws
/// StuckAtInternalVertex.
std::vector<VertexId> directional_path(const PlaneGraph& g, const QConstraints& q, VertexId v,
                                       Direction dir);

struct EliminationStats {
  std::size_t applications = 0;
  std::size_t descents = 0;
  std::size_t internal_cases = 0;
  std::size_t external_cases = 0;
};

struct Elimination {
  PlaneGraph graph;
  QConstraints q;
  SubdivisionMap map;
  EliminationStats stats;
};

/// `original_edges` is the number of leading edge ids that belong to the
/// caller's original graph; later edges are already dummies. Defaults to all.
Elimination eliminate_180_angles(const PlaneGraph& g, const QConstraints& q,
                                 const SurgeryObserver& observer = {},
                                 std::optional<std::size_t> original_edges = std::nullopt);

struct PoleSet {
  VertexId north = no_id, west = no_id, south = no_id, east = no_id;
};

struct PoledGraph {
  PlaneGraph graph;
  QConstraints q;
  PoleSet poles;
};

PoledGraph add_poles(const PlaneGraph& g, const QConstraints& q,
                     const SurgeryObserver& observer = {});

/// Per-dart flag: dart lies on the outer face.
std::vector<char> outer_dart_flags(const PlaneGraph& g);

}  // namespace windrose
