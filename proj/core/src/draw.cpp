#include "windrose/draw.hpp"

#include <algorithm>
#include <stdexcept>

#include "windrose/error.hpp"

namespace windrose {

bool is_quasi_triangulated(const PlaneGraph& g, const QConstraints& q) {
  const FaceIndex fi = extract_faces(g);
  const auto& outer = fi.walks[fi.outer];
  if (outer.size() != 4) return false;
  for (FaceId f = 0; f < static_cast<FaceId>(fi.walks.size()); ++f)
    if (f != fi.outer && fi.walks[f].size() != 3) return false;
  // Walking the outer face (clockwise in a drawing) the ring reads
  // N -> E -> S -> W: quadrants SE, SW, NW, NE in this order.
  int ring_start = -1;
  for (int i = 0; i < 4; ++i)
    if (q.at(outer[i]) == Quadrant::se) ring_start = i;
  if (ring_start < 0) return false;
  const Quadrant expected[4] = {Quadrant::se, Quadrant::sw, Quadrant::nw, Quadrant::ne};
  for (int k = 0; k < 4; ++k)
    if (q.at(outer[(ring_start + k) % 4]) != expected[k]) return false;
  AngleLabeling a;
  try {
    a = labeling_from_internally_triangulated(g, q);
  } catch (const error&) {
    return false;
  }
  if (!check_angular(g, fi, a).empty()) return false;
  for (DartId e = 0; e < static_cast<DartId>(g.dart_count()); ++e)
    if (fi.face_of_dart[g.twin(e)] != fi.outer && a.deg(e) > 90) return false;
  return true;
}

GridDrawing quasi_triangulated_drawing(const PlaneGraph& g, const QConstraints& q) {
  if (!is_quasi_triangulated(g, q))
    throw error(errc::not_quasi_triangulated, "input is not quasi-triangulated");
  auto xs = topological_order(g, directed_view(g, q, Axis::horizontal));
  auto ys = topological_order(g, directed_view(g, q, Axis::vertical));
  if (!xs || !ys) throw error(errc::cyclic_view, "a directed view has a cycle");
  GridDrawing d;
  d.points.resize(g.vertex_count());
  d.bends.resize(g.edge_count());
  for (std::size_t i = 0; i < xs->size(); ++i) d.points[(*xs)[i]].x = static_cast<std::int64_t>(i);
  for (std::size_t i = 0; i < ys->size(); ++i) d.points[(*ys)[i]].y = static_cast<std::int64_t>(i);
  return d;
}

GridDrawing collapse_to_one_bend(const PlaneGraph& g, const GridDrawing& augmented,
                                 const SubdivisionMap& sub) {
  GridDrawing d;
  d.points.assign(augmented.points.begin(),
                  augmented.points.begin() + static_cast<std::ptrdiff_t>(g.vertex_count()));
  d.bends.resize(g.edge_count());
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    auto path = sub.replacement.at(e);
    if (path.front() != g.tail(g.dart_of(e))) std::reverse(path.begin(), path.end());
    for (std::size_t i = 1; i + 1 < path.size(); ++i) d.bends[e].push_back(augmented.points[path[i]]);
  }
  return d;
}

PipelineResult windrose_pipeline(const PlaneGraph& g, const QConstraints& q,
                                 const PipelineOptions& opts) {
  for (const auto& v : check_q_consistency(g, q))
    if (v.kind == QViolationKind::twin_inconsistent)
      throw error(errc::inconsistent_constraints, v.detail);

  PipelineResult res;
  res.stats.vertices = g.vertex_count();
  if (g.dart_count() == 0) {
    res.windrose_planar = true;
    res.labeling = AngleLabeling{};
    res.drawing = GridDrawing{};
    res.drawing->points.assign(g.vertex_count(), {0, 0});
    return res;
  }
  AssignmentResult ar = find_large_angle_assignment(g, q);
  if (!ar) {
    res.certificate = std::move(ar.certificate);
    return res;
  }
  res.labeling = ar.labeling;

  Triangulation tri = triangulate_preserving_labeling(g, *ar.labeling, opts.observer);
  res.stats.wrapped = tri.wrapped;
  res.stats.ear_cuts = tri.ear_cuts;

  QConstraints qt = constraints_from_labeling(tri.graph, tri.labeling, 0, q.at(0));
  for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d)
    if (qt.at(d) != q.at(d)) throw std::logic_error("triangulation changed a q-constraint");

  Elimination el = eliminate_180_angles(tri.graph, qt, opts.observer, g.edge_count());
  res.stats.elimination = el.stats;
  PoledGraph poled = add_poles(el.graph, el.q, opts.observer);
  res.stats.augmented_vertices = poled.graph.vertex_count();

  GridDrawing full = quasi_triangulated_drawing(poled.graph, poled.q);
  GridDrawing d = collapse_to_one_bend(g, full, el.map);
  if (opts.self_verify) {
    auto rep = verify_drawing(g, q, d);
    if (!rep.ok())
      throw std::logic_error("pipeline drawing failed verification: " +
                             (rep.violations.empty() ? std::string("?")
                                                     : rep.violations.front().detail));
  }
  res.windrose_planar = true;
  res.drawing = std::move(d);
  return res;
}

}  // namespace windrose
