#include <doctest.h>

#include "support.hpp"
#include "windrose/constraints.hpp"
#include "windrose/draw.hpp"
#include "windrose/error.hpp"

using namespace wt;

namespace {

using IP = Point<std::int64_t>;

// Quadrilateral v1..v4 whose bounded face has angles (0, 270, 90, 0).
GeneratedInstance reflex_quad() {
  return instance_from_drawing<std::int64_t>({"v1", "v2", "v3", "v4"},
                                             {IP{-1, 3}, IP{0, 0}, IP{-2, -1}, IP{3, -2}},
                                             {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

int internal_180_count(const PlaneGraph& g, const QConstraints& q) {
  AngleLabeling a = labeling_from_internally_triangulated(g, q);
  FaceIndex fi = extract_faces(g);
  int n = 0;
  for (DartId e = 0; e < static_cast<DartId>(g.dart_count()); ++e)
    if (fi.face_of_dart[g.twin(e)] != fi.outer && a.deg(e) == 180) ++n;
  return n;
}

// Sum of the angles of each bounded face of a labeling, by face id.
std::vector<int> face_sums(const PlaneGraph& g, const AngleLabeling& a) {
  FaceIndex fi = extract_faces(g);
  std::vector<int> sums(fi.face_count(), 0);
  for (DartId e = 0; e < static_cast<DartId>(g.dart_count()); ++e)
    sums[fi.face_of_dart[g.twin(e)]] += a.deg(e);
  return sums;
}

}  // namespace

TEST_CASE("ear cut after a 270 angle followed by a 90 angle") {
  auto gi = reflex_quad();
  const auto& g = gi.graph;
  AssignmentResult r = find_large_angle_assignment(g, gi.q);
  REQUIRE(r);
  const DartId v2v1 = dart(g, "v2", "v1"), v3v2 = dart(g, "v3", "v2");
  REQUIRE(r.labeling->deg(v2v1) == 270);
  REQUIRE(r.labeling->deg(v3v2) == 90);

  Triangulation t = triangulate_preserving_labeling(g, *r.labeling);
  const auto& h = t.graph;
  REQUIRE(h.adjacent(vid(h, "v2"), vid(h, "v4")));
  const DartId v2v4 = dart(h, "v2", "v4");
  CHECK(h.cw_next(v2v1) == v2v4);
  CHECK(t.labeling.deg(v2v1) == 180);
  CHECK(t.labeling.deg(v2v4) == 90);
  // The ear v2, v3, v4 has angles (90, 90, 0).
  CHECK(t.labeling.deg(dart(h, "v3", "v2")) == 90);
  CHECK(t.labeling.deg(dart(h, "v4", "v3")) == 0);
  CHECK(check_angular(h, t.labeling).empty());
}

TEST_CASE("square with four right angles: one diagonal, two triangles of 180") {
  Instance q4 = load_fixture("q4.json");
  AssignmentResult r = find_large_angle_assignment(q4.graph, q4.q);
  REQUIRE(r);
  Triangulation t = triangulate_preserving_labeling(q4.graph, *r.labeling);
  const auto& h = t.graph;
  const bool d13 = h.adjacent(vid(h, "left"), vid(h, "right"));
  const bool d24 = h.adjacent(vid(h, "top"), vid(h, "bottom"));
  CHECK(d13 != d24);
  FaceIndex fi = extract_faces(h);
  auto sums = face_sums(h, t.labeling);
  // The two faces that use the diagonal.
  DartId diag = d13 ? dart(h, "left", "right") : dart(h, "top", "bottom");
  CHECK(sums[fi.face_of_dart[diag]] == 180);
  CHECK(sums[fi.face_of_dart[h.twin(diag)]] == 180);
  CHECK(check_angular(h, t.labeling).empty());
  CHECK(t.wrapped);  // outer face of length 4
}

TEST_CASE("triangulation output is triangulated and refines the input") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto gi = generate_random_small(4 + static_cast<int>(seed % 6), seed, 0.3, 0.0);
    AssignmentResult r = find_large_angle_assignment(gi.graph, gi.q);
    REQUIRE(r);
    Triangulation t = triangulate_preserving_labeling(gi.graph, *r.labeling);
    t.graph.validate();
    FaceIndex fi = extract_faces(t.graph);
    for (const auto& w : fi.walks) CHECK(w.size() == 3);
    std::string why;
    CHECK_MESSAGE(refines(gi.graph, *r.labeling, t.graph, t.labeling, &why), why);
    CHECK(angular_by_hand(t.graph, t.labeling));
  }
}

TEST_CASE("directional paths in K4") {
  Instance k4 = load_fixture("k4-fixture.json");
  const auto& g = k4.graph;
  auto names = [&](const std::vector<VertexId>& p) {
    std::vector<std::string> out;
    for (VertexId v : p) out.push_back(g.name(v));
    return out;
  };
  CHECK(names(directional_path(g, k4.q, vid(g, "v"), Direction::up)) ==
        std::vector<std::string>{"v", "a"});
  CHECK(names(directional_path(g, k4.q, vid(g, "v"), Direction::right)) ==
        std::vector<std::string>{"v", "b"});
  CHECK(names(directional_path(g, k4.q, vid(g, "a"), Direction::down)) ==
        std::vector<std::string>{"a"});
}

TEST_CASE("directional paths climb strictly and end on the outer face") {
  auto gi = generate_delaunay(60, 5);
  const auto& g = gi.graph;
  auto outer = outer_dart_flags(g);
  std::vector<char> external(g.vertex_count(), 0);
  for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d)
    if (outer[d]) external[g.tail(d)] = 1;
  const auto& p = gi.witness->points;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    for (Direction dir : {Direction::up, Direction::right, Direction::down, Direction::left}) {
      auto path = directional_path(g, gi.q, v, dir);
      CHECK(external[path.back()]);
      for (std::size_t i = 1; i < path.size(); ++i) {
        CHECK(g.adjacent(path[i - 1], path[i]));
        const auto& a = p[path[i - 1]];
        const auto& b = p[path[i]];
        switch (dir) {
          case Direction::up: CHECK(b.y > a.y); break;
          case Direction::down: CHECK(b.y < a.y); break;
          case Direction::right: CHECK(b.x > a.x); break;
          case Direction::left: CHECK(b.x < a.x); break;
        }
      }
    }
  }
}

TEST_CASE("eliminating the 180 angle of K4") {
  Instance k4 = load_fixture("k4-fixture.json");
  const auto& g = k4.graph;
  REQUIRE(internal_180_count(g, k4.q) == 1);
  Elimination el = eliminate_180_angles(g, k4.q);
  const auto& h = el.graph;
  CHECK(h.vertex_count() == g.vertex_count() + 1);
  CHECK(el.map.subdivided_count() == 1);
  const EdgeId ab = g.edge_of(dart(g, "a", "b"));
  REQUIRE(el.map.replacement[ab].size() == 3);
  const VertexId z = el.map.replacement[ab][1];
  REQUIRE(h.adjacent(vid(h, "v"), z));
  CHECK(el.q.at(*h.find_dart(vid(h, "v"), z)) == Quadrant::ne);
  CHECK(el.stats.external_cases == 1);
  CHECK(internal_180_count(h, el.q) == 0);
  h.validate();
}

TEST_CASE("no 180 angle: elimination is the identity") {
  Instance t1 = load_fixture("t1.json");
  Elimination el = eliminate_180_angles(t1.graph, t1.q);
  CHECK(el.graph.vertex_count() == 3);
  CHECK(el.map.subdivided_count() == 0);
  CHECK(el.map.dummy_vertices.empty());
  CHECK(el.q == t1.q);
}

TEST_CASE("elimination count is bounded by the initial 180 angles") {
  std::size_t descents = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto gi = generate_delaunay(15 + static_cast<int>(seed), seed);
    const int before = internal_180_count(gi.graph, gi.q);
    Elimination el = eliminate_180_angles(gi.graph, gi.q);
    CHECK(el.stats.applications <= static_cast<std::size_t>(before));
    CHECK(el.stats.internal_cases + el.stats.external_cases == el.stats.applications);
    CHECK(internal_180_count(el.graph, el.q) == 0);
    CHECK(el.map.subdivided_count() == el.stats.applications);
    descents += el.stats.descents;
  }
  MESSAGE("witness descents over the corpus: " << descents);
}

TEST_CASE("nested triangles: each 180 witness is processed once") {
  auto gi = generate_nested_triangles(2);
  AssignmentResult r = find_large_angle_assignment(gi.graph, gi.q);
  REQUIRE(r);
  Triangulation t = triangulate_preserving_labeling(gi.graph, *r.labeling);
  QConstraints qt = constraints_from_labeling(t.graph, t.labeling, 0, gi.q.at(0));
  const int tri_before = internal_180_count(t.graph, qt);
  Elimination el = eliminate_180_angles(t.graph, qt);
  CHECK(el.stats.applications <= static_cast<std::size_t>(tri_before));
  CHECK(internal_180_count(el.graph, el.q) == 0);
  MESSAGE("180 angles after triangulation: " << tri_before << "; " << el.stats.applications << " applications, " << el.stats.descents
                         << " descents");
}

TEST_CASE("poles around K4 after elimination") {
  Instance k4 = load_fixture("k4-fixture.json");
  Elimination el = eliminate_180_angles(k4.graph, k4.q);
  PoledGraph pg = add_poles(el.graph, el.q);
  const auto& g = pg.graph;
  g.validate();
  const auto& P = pg.poles;
  auto q_of = [&](VertexId a, VertexId b) { return pg.q.at(*g.find_dart(a, b)); };
  CHECK(q_of(P.west, P.north) == Quadrant::ne);
  CHECK(q_of(P.south, P.west) == Quadrant::nw);
  CHECK(q_of(P.east, P.south) == Quadrant::sw);
  CHECK(q_of(P.north, P.east) == Quadrant::se);
  CHECK(is_quasi_triangulated(g, pg.q));

  // Every non-pole vertex now has all four quadrants occupied.
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    if (v == P.north || v == P.west || v == P.south || v == P.east) continue;
    std::set<Quadrant> seen;
    for (DartId d : g.rotation(v)) seen.insert(pg.q.at(d));
    CHECK(seen.size() == 4);
  }

  AngleLabeling a = labeling_from_internally_triangulated(g, pg.q);
  CHECK(check_angular(g, a).empty());
  FaceIndex fi = extract_faces(g);
  for (DartId e = 0; e < static_cast<DartId>(g.dart_count()); ++e)
    if (fi.face_of_dart[g.twin(e)] != fi.outer) CHECK(a.deg(e) <= 90);

  // Faces with two consecutive poles: 0 at the pole reached second in
  // clockwise ring order, 90 at the other two corners.
  const VertexId ring[4] = {P.north, P.east, P.south, P.west};
  for (int i = 0; i < 4; ++i) {
    DartId d = *g.find_dart(ring[(i + 1) % 4], ring[i]);  // bounded side of the ring edge
    auto walk = g.face_walk(d);
    REQUIRE(walk.size() == 3);
    std::multiset<int> angles;
    for (DartId x : walk) angles.insert(a.deg(g.twin(x)));
    CHECK(angles == std::multiset<int>{0, 90, 90});
  }
}

TEST_CASE("property: every surgery step keeps the labeling angular and refining") {
  int steps = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto gi = generate_random_small(4 + static_cast<int>(seed % 5), seed, 0.5, 0.0);
    AssignmentResult r = find_large_angle_assignment(gi.graph, gi.q);
    REQUIRE(r);
    PlaneGraph prev_g = gi.graph;
    AngleLabeling prev_a = *r.labeling;
    PipelineOptions opts;
    opts.observer = [&](SurgeryStep, const PlaneGraph& g, const AngleLabeling& a) {
      ++steps;
      CHECK(check_angular(g, a).empty());
      std::string why;
      CHECK_MESSAGE(refines(prev_g, prev_a, g, a, &why), why);
      prev_g = g;
      prev_a = a;
    };
    PipelineResult res = windrose_pipeline(gi.graph, gi.q, opts);
    CHECK(res.windrose_planar);
  }
  CHECK(steps > 0);
}
