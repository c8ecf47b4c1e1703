#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "windrose/plane_graph.hpp"
#include "windrose/quadrant.hpp"

namespace windrose {

/// Quadrant label per dart: q[d] = o means head(d) lies in the o-quadrant of tail(d).
class QConstraints {
public:
  QConstraints() = default;
  explicit QConstraints(std::size_t darts) : q_(darts) {}

  std::size_t size() const noexcept { return q_.size(); }
  void resize(std::size_t darts) { q_.resize(darts); }

  bool has(DartId d) const { return d >= 0 && static_cast<std::size_t>(d) < q_.size() && q_[d]; }
  /// Throws MissingDartLabel when unset.
  Quadrant at(DartId d) const;
  Quadrant operator[](DartId d) const { return at(d); }
  void set(DartId d, Quadrant q);
  /// Sets d and its twin consistently.
  void set_pair(const PlaneGraph& g, DartId d, Quadrant q);

  bool operator==(const QConstraints&) const = default;

private:
  std::vector<std::optional<Quadrant>> q_;
};

enum class QViolationKind { twin_inconsistent, cyclic_order };

struct QViolation {
  QViolationKind kind;
  DartId dart = no_id;      // for twin_inconsistent
  VertexId vertex = no_id;  // for cyclic_order
  std::string detail;
};

/// Empty result means consistent. Throws MissingDartLabel if some dart is unlabeled.
std::vector<QViolation> check_q_consistency(const PlaneGraph& g, const QConstraints& q);

/// True when the clockwise labels around v visit quadrants in NW, NE, SE, SW
/// cyclic order without revisiting any.
bool cyclic_order_ok(const PlaneGraph& g, const QConstraints& q, VertexId v);

enum class Axis { vertical, horizontal };

struct DirectedView {
  Axis axis;
  std::vector<std::pair<VertexId, VertexId>> orientation;  // per edge id: (tail, head)
};

DirectedView directed_view(const PlaneGraph& g, const QConstraints& q, Axis axis);

/// Topological order by Kahn's scheme with a min-id ready queue; nullopt on a cycle.
std::optional<std::vector<VertexId>> topological_order(const PlaneGraph& g, const DirectedView& view);

bool is_bi_acyclic(const PlaneGraph& g, const QConstraints& q);

enum class Side { leftmost, rightmost };

/// Neighbours of v in quadrant `quad`, clockwise. For an ambiguous vertex the
/// run starts at first_dart(v). Leftmost is the first of the run.
std::vector<DartId> quadrant_run(const PlaneGraph& g, const QConstraints& q, VertexId v, Quadrant quad);

std::optional<VertexId> extreme_neighbor(const PlaneGraph& g, const QConstraints& q, VertexId v,
                                         Quadrant quad, Side side);

/// All neighbours of v lie in one quadrant (and deg(v) >= 2).
bool is_ambiguous(const PlaneGraph& g, const QConstraints& q, VertexId v);

/// Reads quadrants off vertex positions; equal coordinates are rejected.
template <class Point>
QConstraints constraints_from_points(const PlaneGraph& g, const std::vector<Point>& pts);

}  // namespace windrose

#include "windrose/detail/constraints_impl.hpp"
