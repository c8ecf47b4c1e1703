#include <doctest.h>

#include "support.hpp"
#include "windrose/constraints.hpp"
#include "windrose/draw.hpp"
#include "windrose/error.hpp"
#include "windrose/verify.hpp"

using namespace wt;

namespace {

// The pipeline's stages run one by one so intermediate results can be checked.
struct Stages {
  Elimination el;
  PoledGraph poled;
  GridDrawing full;
  GridDrawing collapsed;
};

Stages run_stages(const PlaneGraph& g, const QConstraints& q) {
  AssignmentResult r = find_large_angle_assignment(g, q);
  REQUIRE(r);
  Triangulation t = triangulate_preserving_labeling(g, *r.labeling);
  QConstraints qt = constraints_from_labeling(t.graph, t.labeling, 0, q.at(0));
  Elimination el = eliminate_180_angles(t.graph, qt, {}, g.edge_count());
  PoledGraph poled = add_poles(el.graph, el.q);
  GridDrawing full = quasi_triangulated_drawing(poled.graph, poled.q);
  GridDrawing collapsed = collapse_to_one_bend(g, full, el.map);
  return {std::move(el), std::move(poled), std::move(full), std::move(collapsed)};
}

std::int64_t max_coordinate(const GridDrawing& d) {
  std::int64_t m = 0;
  for (const auto& p : d.points) m = std::max({m, p.x, p.y});
  for (const auto& b : d.bends)
    for (const auto& p : b) m = std::max({m, p.x, p.y});
  return m;
}

}  // namespace

TEST_CASE("quasi-triangulated square: straight-line on the n x n grid") {
  Instance ps = load_fixture("pole-square.json");
  const auto& g = ps.graph;
  REQUIRE(is_quasi_triangulated(g, ps.q));
  GridDrawing d = quasi_triangulated_drawing(g, ps.q);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  CHECK(d.points[vid(g, "W")].x == 0);
  CHECK(d.points[vid(g, "E")].x == n - 1);
  CHECK(d.points[vid(g, "S")].y == 0);
  CHECK(d.points[vid(g, "N")].y == n - 1);
  CHECK(d.max_bends() == 0);
  CHECK(verify_drawing(g, ps.q, d).ok());
}

TEST_CASE("face with a 0 angle at u: x(u) < x(w) < x(v) and y(u) < y(v) < y(w)") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto gi = generate_delaunay(25, seed);
    Stages s = run_stages(gi.graph, gi.q);
    const auto& g = s.poled.graph;
    const auto& q = s.poled.q;
    AngleLabeling a = labeling_from_internally_triangulated(g, q);
    FaceIndex fi = extract_faces(g);
    for (FaceId f = 0; f < static_cast<FaceId>(fi.face_count()); ++f) {
      if (f == fi.outer) continue;
      for (DartId x : fi.walks[f]) {
        const DartId e = g.twin(x);  // angle at head(x)
        if (a.deg(e) != 0 || q.at(e) != Quadrant::ne) continue;
        VertexId u = g.tail(e);
        VertexId p = g.head(e), r = g.head(g.cw_next(e));
        // v is the one with w NW of it.
        VertexId v = q.at(*g.find_dart(p, r)) == Quadrant::nw ? p : r;
        VertexId w = v == p ? r : p;
        const auto& P = s.full.points;
        CHECK(P[u].x < P[w].x);
        CHECK(P[w].x < P[v].x);
        CHECK(P[u].y < P[v].y);
        CHECK(P[v].y < P[w].y);
      }
    }
  }
}

TEST_CASE("collapse: subdivided edges bend at the subdivision vertex") {
  Instance k4 = load_fixture("k4-fixture.json");
  Stages s = run_stages(k4.graph, k4.q);
  const auto& g = k4.graph;
  int bent = 0;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const auto& path = s.el.map.replacement[e];
    if (path.size() == 3) {
      ++bent;
      REQUIRE(s.collapsed.bends[e].size() == 1);
      CHECK(s.collapsed.bends[e][0] == s.full.points[path[1]]);
    } else {
      CHECK(s.collapsed.bends[e].empty());
    }
  }
  CHECK(bent == 1);
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    CHECK(s.collapsed.points[v] == s.full.points[v]);
  CHECK(verify_drawing(g, k4.q, s.collapsed).ok());
}

TEST_CASE("pipeline verdicts") {
  Instance t1 = load_fixture("t1.json");
  PipelineResult r1 = windrose_pipeline(t1.graph, t1.q);
  REQUIRE(r1.windrose_planar);
  CHECK(verify_drawing(t1.graph, t1.q, *r1.drawing).ok());

  Instance t2 = load_fixture("t2-cyclic.json");
  PipelineResult r2 = windrose_pipeline(t2.graph, t2.q);
  CHECK_FALSE(r2.windrose_planar);
  REQUIRE(r2.certificate);
  CHECK(r2.certificate->reason() == "infeasible assignment");

  Instance k4 = load_fixture("k4-fixture.json");
  PipelineResult r3 = windrose_pipeline(k4.graph, k4.q);
  REQUIRE(r3.windrose_planar);
  CHECK(r3.drawing->max_bends() <= 1);
  CHECK(verify_drawing(k4.graph, k4.q, *r3.drawing).ok());
}

TEST_CASE("pipeline rejects twin-inconsistent constraints") {
  Instance t1 = load_fixture("t1.json");
  QConstraints q = t1.q;
  q.set(dart(t1.graph, "u", "v"), Quadrant::nw);
  try {
    windrose_pipeline(t1.graph, q);
    FAIL("accepted inconsistent constraints");
  } catch (const error& e) {
    CHECK(e.code() == errc::inconsistent_constraints);
  }
}

TEST_CASE("single vertex and single edge") {
  PlaneGraph one = PlaneGraph::build({"x"}, {{}}, 0, 0);
  PipelineResult r = windrose_pipeline(one, QConstraints(0));
  CHECK(r.windrose_planar);
  REQUIRE(r.drawing);
  CHECK(r.drawing->points.size() == 1);

  PlaneGraph edge = PlaneGraph::build({"u", "v"}, {{1}, {0}}, 0, 1);
  QConstraints q(edge.dart_count());
  q.set_pair(edge, 0, Quadrant::sw);
  PipelineResult re = windrose_pipeline(edge, q);
  REQUIRE(re.windrose_planar);
  CHECK(verify_drawing(edge, q, *re.drawing).ok());
}

TEST_CASE("delaunay n=200: coordinates bounded by the augmented vertex count") {
  auto gi = generate_delaunay(200, 7);
  PipelineResult r = windrose_pipeline(gi.graph, gi.q);
  REQUIRE(r.windrose_planar);
  const auto n_star = static_cast<std::int64_t>(r.stats.augmented_vertices);
  CHECK(max_coordinate(*r.drawing) <= n_star - 1);
  for (const auto& p : r.drawing->points) {
    CHECK(p.x >= 0);
    CHECK(p.y >= 0);
  }
  CHECK(r.drawing->max_bends() <= 1);
}

TEST_CASE("3-tree blocks: base cases and fixtures") {
  PlaneGraph edge = PlaneGraph::build({"u", "v"}, {{1}, {0}}, 0, 1);
  QConstraints q(edge.dart_count());
  q.set_pair(edge, 0, Quadrant::ne);
  RationalDrawing d = three_tree_block_drawing(edge, q);
  CHECK(d.points[0] == Point<Rational>{0, 0});
  CHECK(d.points[1] == Point<Rational>{1, 1});

  Instance k4 = load_fixture("k4-fixture.json");
  REQUIRE(has_three_tree_blocks(k4.graph));
  RationalDrawing dk = three_tree_block_drawing(k4.graph, k4.q);
  CHECK(dk.max_bends() == 0);
  CHECK(verify_drawing(k4.graph, k4.q, dk).ok());

  Instance star = load_fixture("star.json");
  RationalDrawing ds = three_tree_block_drawing(star.graph, star.q);
  const auto& c = ds.points[vid(star.graph, "c")];
  for (const char* leaf : {"ne", "nw", "sw", "se"}) {
    const auto& p = ds.points[vid(star.graph, leaf)];
    CHECK(abs(p.x - c.x) == 1);
    CHECK(abs(p.y - c.y) == 1);
  }
  CHECK(verify_drawing(star.graph, star.q, ds).ok());

  Instance q4 = load_fixture("q4.json");
  CHECK_FALSE(has_three_tree_blocks(q4.graph));
  try {
    three_tree_block_drawing(q4.graph, q4.q);
    FAIL("drew a 4-cycle block");
  } catch (const error& e) {
    CHECK(e.code() == errc::block_structure_unsupported);
  }
}

TEST_CASE("3-tree drawings stay valid at a smaller radius") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto gi = generate_apollonian(8 + static_cast<int>(seed), seed);
    for (Rational radius : {Rational(1), Rational(1, 8)}) {
      RationalDrawing d = three_tree_block_drawing(gi.graph, gi.q, {radius});
      CHECK(verify_drawing(gi.graph, gi.q, d).ok());
    }
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto gi = generate_random_small(3 + static_cast<int>(seed % 7), seed, 0.3, 0.0);
    if (!has_three_tree_blocks(gi.graph)) continue;
    for (Rational radius : {Rational(1), Rational(1, 8)}) {
      RationalDrawing d = three_tree_block_drawing(gi.graph, gi.q, {radius});
      CHECK(verify_drawing(gi.graph, gi.q, d).ok());
    }
  }
}
