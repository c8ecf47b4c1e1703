#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace windrose {

using VertexId = std::int32_t;
using DartId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr std::int32_t no_id = -1;

/// Connected plane graph stored as a rotation system of darts.
///
/// Darts 2e and 2e+1 are the two halves of edge e. Around every vertex the
/// outgoing darts form a clockwise cyclic list. A face is an orbit of
/// face_next(d) = cw_next(twin(d)); the face lies to the left of each of its
/// darts, so bounded faces are walked counterclockwise in a drawing.
class PlaneGraph {
public:
  PlaneGraph() = default;

  /// rotations[v] lists the neighbours of v in clockwise order. The outer
  /// face is the one containing the dart witness_tail -> witness_head.
  static PlaneGraph build(std::vector<std::string> names,
                          const std::vector<std::vector<VertexId>>& rotations,
                          VertexId witness_tail, VertexId witness_head);

  std::size_t vertex_count() const noexcept { return first_.size(); }
  std::size_t dart_count() const noexcept { return tail_.size(); }
  std::size_t edge_count() const noexcept { return edge_dart_.size(); }

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;

  DartId twin(DartId d) const { return twin_[d]; }
  EdgeId edge_of(DartId d) const { return edge_[d]; }
  /// The dart of e that was created first; its tail is the edge's reference end.
  DartId dart_of(EdgeId e) const { return edge_dart_[e]; }

  VertexId tail(DartId d) const { return tail_[d]; }
  VertexId head(DartId d) const { return tail_[twin(d)]; }
  DartId cw_next(DartId d) const { return cw_[d]; }
  DartId ccw_next(DartId d) const { return ccw_[d]; }
  DartId face_next(DartId d) const { return cw_[twin(d)]; }

  int degree(VertexId v) const { return degree_[v]; }
  /// Some outgoing dart of v (the first listed neighbour at build time), or no_id.
  DartId first_dart(VertexId v) const { return first_[v]; }
  /// Outgoing darts of v in clockwise order, starting at first_dart(v).
  std::vector<DartId> rotation(VertexId v) const;

  std::optional<DartId> find_dart(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_dart(u, v).has_value(); }

  DartId outer_dart() const noexcept { return outer_; }
  void set_outer_dart(DartId d);

  /// Darts of one face walk starting at d.
  std::vector<DartId> face_walk(DartId d) const;

  // Surgery. These keep the rotation system consistent but do not re-check
  // global invariants; call validate() when a stage is finished.

  VertexId add_vertex(std::string name);

  /// Adds edge (u,v). The new dart u->v is placed clockwise right after
  /// after_u at u, its twin right after after_v at v. Use no_id for an
  /// isolated endpoint. Returns the dart u->v. Refuses self-loops and
  /// parallel edges.
  DartId insert_edge(VertexId u, DartId after_u, VertexId v, DartId after_v);

  struct Subdivision {
    VertexId z;
    DartId z_to_tail;  // z -> tail(d); twin of d
    DartId z_to_head;  // z -> head(d)
  };
  /// Subdivides the edge of d = (a->b) by a new vertex z. Dart d becomes
  /// a->z and its old twin becomes b->z; both keep their ids and rotation
  /// slots, so angles at a and b are unaffected. Edge edge_of(d) stays
  /// a-z; the z-b half is a new edge.
  Subdivision subdivide(DartId d, std::string name);

  /// Throws error if the dart structure, simplicity, connectivity or Euler's
  /// formula fails.
  void validate() const;

private:
  static std::uint64_t key(VertexId u, VertexId v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }
  void attach(DartId d, VertexId v, DartId after);

  std::vector<std::string> names_;
  std::vector<DartId> first_;
  std::vector<int> degree_;
  std::vector<VertexId> tail_;
  std::vector<DartId> twin_;
  std::vector<EdgeId> edge_;
  std::vector<DartId> edge_dart_;
  std::vector<DartId> cw_;
  std::vector<DartId> ccw_;
  std::unordered_map<std::uint64_t, DartId> edge_index_;  // key -> dart from smaller id
  DartId outer_ = no_id;
};

/// Faces as orbits of face_next. Face ids follow the smallest dart of each orbit.
struct FaceIndex {
  std::vector<FaceId> face_of_dart;
  std::vector<std::vector<DartId>> walks;
  FaceId outer = no_id;

  std::size_t face_count() const noexcept { return walks.size(); }
};

FaceIndex extract_faces(const PlaneGraph& g);

/// Faces as vertex sequences; convenience for callers that want walks of ids.
std::vector<std::vector<VertexId>> facial_vertex_walks(const PlaneGraph& g);

}  // namespace windrose
