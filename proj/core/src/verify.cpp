#include "windrose/verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "windrose/error.hpp"

namespace windrose {

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::crossing: return "crossing";
    case ViolationKind::monotonicity: return "monotonicity";
    case ViolationKind::quadrant: return "quadrant";
    case ViolationKind::rotation: return "rotation";
    case ViolationKind::face_orientation: return "face_orientation";
  }
  return "unknown";
}

namespace {

template <class T>
struct Segment {
  Point<T> a, b;
  EdgeId edge;
  std::size_t index;   // position within the edge polyline
  VertexId va, vb;     // graph vertex at a / b, or no_id for a bend
};

template <class T>
bool strictly_monotone(const std::vector<Point<T>>& pts) {
  int sx = 0, sy = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& r = pts[i + 1];
    int dx = r.x > p.x ? 1 : (r.x < p.x ? -1 : 0);
    int dy = r.y > p.y ? 1 : (r.y < p.y ? -1 : 0);
    if (dx == 0 || dy == 0) return false;
    if ((sx != 0 && dx != sx) || (sy != 0 && dy != sy)) return false;
    sx = dx;
    sy = dy;
  }
  return true;
}

template <class T>
bool segments_conflict(const Segment<T>& s, const Segment<T>& t) {
  using geom::overlap_from_shared;
  using geom::segments_intersect;
  if (s.edge == t.edge) {
    if (s.index + 1 == t.index) return overlap_from_shared(s.b, s.a, t.b);
    if (t.index + 1 == s.index) return overlap_from_shared(t.b, t.a, s.b);
    return segments_intersect(s.a, s.b, t.a, t.b);
  }
  // A common graph vertex is the only place two edges may meet.
  VertexId common_vertex = no_id;
  Point<T> cp{}, so{}, to{};
  if (s.va != no_id && (s.va == t.va || s.va == t.vb)) {
    common_vertex = s.va;
    cp = s.a;
    so = s.b;
    to = s.va == t.va ? t.b : t.a;
  } else if (s.vb != no_id && (s.vb == t.va || s.vb == t.vb)) {
    common_vertex = s.vb;
    cp = s.b;
    so = s.a;
    to = s.vb == t.va ? t.b : t.a;
  }
  if (common_vertex != no_id) {
    // The other endpoints might coincide too only for parallel edges.
    if (so == to) return true;
    return overlap_from_shared(cp, so, to);
  }
  return segments_intersect(s.a, s.b, t.a, t.b);
}

}  // namespace

template <class T>
VerificationReport verify_drawing(const PlaneGraph& g, const QConstraints& q, const Drawing<T>& d,
                                  const VerifyOptions& opts) {
  if (d.points.size() < g.vertex_count())
    throw error(errc::missing_geometry, "drawing has fewer points than vertices");
  if (d.bends.size() < g.edge_count())
    throw error(errc::missing_geometry, "drawing has fewer polylines than edges");

  VerificationReport rep;
  std::array<std::size_t, 5> counts{};
  auto report = [&](ViolationKind k, std::vector<EdgeId> es, std::vector<VertexId> vs,
                    std::string detail) {
    if (counts[static_cast<int>(k)]++ >= opts.max_violations_per_kind) return;
    rep.violations.push_back({k, std::move(es), std::move(vs), std::move(detail)});
  };
  auto edge_label = [&](EdgeId e) {
    DartId x = g.dart_of(e);
    return g.name(g.tail(x)) + "-" + g.name(g.head(x));
  };

  const auto m = static_cast<EdgeId>(g.edge_count());
  std::vector<Segment<T>> segs;
  for (EdgeId e = 0; e < m; ++e) {
    const DartId x = g.dart_of(e);
    auto pts = dart_polyline(g, d, x);
    if (!strictly_monotone(pts)) {
      rep.monotonicity_ok = false;
      report(ViolationKind::monotonicity, {e}, {}, "edge " + edge_label(e) + " is not strictly xy-monotone");
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      segs.push_back({pts[i], pts[i + 1], e, i, i == 0 ? g.tail(x) : no_id,
                      i + 2 == pts.size() ? g.head(x) : no_id});
  }

  for (DartId x = 0; x < static_cast<DartId>(g.dart_count()); ++x) {
    const auto& a = d.points[g.tail(x)];
    const auto& b = d.points[g.head(x)];
    const Quadrant o = q.at(x);
    bool ok = (x_sign(o) > 0 ? b.x > a.x : b.x < a.x) && (y_sign(o) > 0 ? b.y > a.y : b.y < a.y);
    if (!ok && x < g.twin(x)) {
      rep.quadrants_ok = false;
      report(ViolationKind::quadrant, {g.edge_of(x)}, {g.tail(x), g.head(x)},
             g.name(g.head(x)) + " is not in the " + std::string(to_string(o)) +
                 " quadrant of " + g.name(g.tail(x)));
    }
  }

  {
    std::vector<std::size_t> order(segs.size());
    std::iota(order.begin(), order.end(), 0);
    auto lo = [&](std::size_t i) { return std::min(segs[i].a.x, segs[i].b.x); };
    auto hi = [&](std::size_t i) { return std::max(segs[i].a.x, segs[i].b.x); };
    if (opts.sweep)
      std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return lo(i) < lo(j) || (lo(i) == lo(j) && i < j);
      });
    for (std::size_t ii = 0; ii < order.size(); ++ii) {
      const auto& s = segs[order[ii]];
      for (std::size_t jj = ii + 1; jj < order.size(); ++jj) {
        const auto& t = segs[order[jj]];
        if (opts.sweep && lo(order[jj]) > hi(order[ii])) break;
        if (segments_conflict(s, t)) {
          rep.planarity_ok = false;
          report(ViolationKind::crossing, {s.edge, t.edge}, {},
                 "edges " + edge_label(s.edge) + " and " + edge_label(t.edge) + " intersect");
        }
      }
    }
  }

  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    auto rot = g.rotation(v);
    if (rot.size() < 3) continue;
    std::vector<Point<T>> dirs;
    for (DartId x : rot) {
      auto pts = dart_polyline(g, d, x);
      dirs.push_back(geom::sub(pts[1], pts[0]));
    }
    // Clockwise order means the counterclockwise angle rises exactly once
    // per turn when read cyclically.
    std::size_t rises = 0;
    bool degenerate = false;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const auto& a = dirs[i];
      const auto& b = dirs[(i + 1) % dirs.size()];
      if (geom::angle_less(a, b)) ++rises;
      else if (!geom::angle_less(b, a)) degenerate = true;
    }
    if (rises != 1 || degenerate) {
      rep.embedding_ok = false;
      report(ViolationKind::rotation, {}, {v}, "edge directions around " + g.name(v) +
                                                   " do not follow the rotation system");
    }
  }

  const FaceIndex faces = extract_faces(g);
  for (FaceId f = 0; f < static_cast<FaceId>(faces.walks.size()); ++f) {
    if (f == faces.outer) continue;
    std::vector<Point<T>> poly;
    for (DartId x : faces.walks[f]) {
      auto pts = dart_polyline(g, d, x);
      poly.insert(poly.end(), pts.begin(), pts.end() - 1);
    }
    if (!(geom::twice_area(poly) > 0)) {
      rep.embedding_ok = false;
      report(ViolationKind::face_orientation, {}, {g.tail(faces.walks[f][0])},
             "bounded face at " + g.name(g.tail(faces.walks[f][0])) +
                 " is not drawn counterclockwise");
    }
  }
  return rep;
}

template VerificationReport verify_drawing(const PlaneGraph&, const QConstraints&,
                                           const GridDrawing&, const VerifyOptions&);
template VerificationReport verify_drawing(const PlaneGraph&, const QConstraints&,
                                           const RationalDrawing&, const VerifyOptions&);

std::vector<AngleLabeling> brute_force_assignment_oracle(const PlaneGraph& g,
                                                         const QConstraints& q, std::size_t cap) {
  std::vector<VertexId> amb;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (is_ambiguous(g, q, v)) amb.push_back(v);
  if (amb.size() > cap)
    throw error(errc::cap_exceeded, std::to_string(amb.size()) + " ambiguous vertices, cap " +
                                        std::to_string(cap));
  const FaceIndex faces = extract_faces(g);
  std::vector<std::vector<DartId>> options;
  for (VertexId v : amb) options.push_back(g.rotation(v));

  std::vector<AngleLabeling> out;
  std::vector<std::size_t> pick(amb.size(), 0);
  LargeAngleAssignment l;
  l.choice.assign(g.vertex_count(), no_id);
  for (;;) {
    for (std::size_t i = 0; i < amb.size(); ++i) l.choice[amb[i]] = options[i][pick[i]];
    AngleLabeling a = labeling_with_assignment(g, q, l);
    if (check_angular(g, faces, a).empty()) out.push_back(std::move(a));
    std::size_t i = 0;
    while (i < amb.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == amb.size()) break;
  }
  return out;
}

}  // namespace windrose
