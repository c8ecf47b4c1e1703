#include <doctest.h>

#include <set>

#include "support.hpp"
#include "windrose/constraints.hpp"
#include "windrose/error.hpp"
#include "windrose/verify.hpp"

using namespace wt;

namespace {

// Determined category of the angle named by e: quadrant steps, ambiguous as
// 0, a degree-1 angle as 360.
int determined_by_hand(const PlaneGraph& g, const QConstraints& q, DartId e) {
  if (g.degree(g.tail(e)) == 1) return 360;
  return 90 * steps_cw(q.at(e), q.at(g.cw_next(e)));
}

AngleLabeling by_face(const PlaneGraph& g, const std::map<std::pair<std::string, bool>, int>& table) {
  // table: (vertex, on outer face) -> degrees
  FaceIndex fi = extract_faces(g);
  AngleLabeling a(g.dart_count());
  for (DartId e = 0; e < static_cast<DartId>(g.dart_count()); ++e) {
    bool outer = fi.face_of_dart[g.twin(e)] == fi.outer;
    a[e] = category_from_degrees(table.at({g.name(g.tail(e)), outer}));
  }
  return a;
}

// All twin-consistent labelings of a graph's edges.
std::vector<QConstraints> all_consistent(const PlaneGraph& g) {
  std::vector<QConstraints> out;
  const auto m = g.edge_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    QConstraints q(g.dart_count());
    std::size_t c = code;
    for (EdgeId e = 0; e < static_cast<EdgeId>(m); ++e, c /= 4)
      q.set_pair(g, g.dart_of(e), quadrant_from_index(static_cast<int>(c % 4)));
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

TEST_CASE("angle categories from quadrants") {
  Instance t1 = load_fixture("t1.json");
  const auto& g = t1.graph;
  CHECK(g.cw_next(dart(g, "v", "w")) == dart(g, "v", "u"));
  CHECK(angle_category_between(g, t1.q, dart(g, "v", "w")) == AngleCategory::deg90);
  CHECK_FALSE(angle_category_between(g, t1.q, dart(g, "u", "v")).has_value());

  Instance k4 = load_fixture("k4-fixture.json");
  const auto& h = k4.graph;
  REQUIRE(h.cw_next(dart(h, "v", "a")) == dart(h, "v", "b"));
  CHECK(angle_category_between(h, k4.q, dart(h, "v", "a")) ==
        category_from_degrees(90 * steps_cw(Quadrant::nw, Quadrant::se)));

  Instance p2 = load_fixture("p2.json");
  CHECK(angle_category_between(p2.graph, p2.q, dart(p2.graph, "u", "v")) == AngleCategory::deg360);
}

TEST_CASE("check_angular on hand-made labelings") {
  Instance t1 = load_fixture("t1.json");
  const auto& g = t1.graph;
  AngleLabeling good = by_face(g, {{{"u", false}, 0}, {{"v", false}, 90}, {{"w", false}, 90},
                                   {{"u", true}, 360}, {{"v", true}, 270}, {{"w", true}, 270}});
  CHECK(check_angular(g, good).empty());
  CHECK(angular_by_hand(g, good));

  AngleLabeling zero = by_face(g, {{{"u", false}, 0}, {{"v", false}, 0}, {{"w", false}, 0},
                                   {{"u", true}, 360}, {{"v", true}, 360}, {{"w", true}, 360}});
  auto vs = check_angular(g, zero);
  FaceIndex fi = extract_faces(g);
  bool inner_cycle = false;
  for (const auto& v : vs)
    if (v.kind == AngularViolationKind::cycle_condition && v.face != fi.outer) {
      inner_cycle = true;
      CHECK(v.sum == 0);
      CHECK(v.expected == 180);
    }
  CHECK(inner_cycle);

  Instance q4 = load_fixture("q4.json");
  std::map<std::pair<std::string, bool>, int> square;
  for (const auto& n : q4.graph.names()) {
    square[{n, false}] = 90;
    square[{n, true}] = 270;
  }
  CHECK(check_angular(q4.graph, by_face(q4.graph, square)).empty());
}

TEST_CASE("labeling of triangulated inputs") {
  Instance t1 = load_fixture("t1.json");
  const auto& g = t1.graph;
  AngleLabeling a = labeling_from_triangulated(g, t1.q);
  FaceIndex fi = extract_faces(g);
  for (DartId e : g.rotation(vid(g, "u"))) {
    bool outer = fi.face_of_dart[g.twin(e)] == fi.outer;
    CHECK(a.deg(e) == (outer ? 360 : 0));
  }
  CHECK(check_angular(g, a).empty());

  Instance t2 = load_fixture("t2-cyclic.json");
  AngleLabeling b = labeling_from_triangulated(t2.graph, t2.q);
  CHECK_FALSE(check_angular(t2.graph, b).empty());

  SUBCASE("internal vertex with every neighbour NE") {
    Instance k4 = load_fixture("k4-fixture.json");
    QConstraints q = k4.q;
    for (DartId d : k4.graph.rotation(vid(k4.graph, "v"))) q.set_pair(k4.graph, d, Quadrant::ne);
    try {
      labeling_from_triangulated(k4.graph, q);
      FAIL("accepted an internal ambiguous vertex");
    } catch (const error& e) {
      CHECK(e.code() == errc::internal_ambiguous_vertex);
    }
  }
  SUBCASE("not triangulated") {
    Instance q4 = load_fixture("q4.json");
    CHECK_THROWS_AS(labeling_from_triangulated(q4.graph, q4.q), error);
  }
}

TEST_CASE("face demands") {
  Instance p2 = load_fixture("p2.json");
  DemandResult pd = face_demands(p2.graph, p2.q);
  REQUIRE(pd.demand);
  REQUIRE(pd.demand->demand.size() == 1);
  // 360 + 360 + 0 + 0 determined, target 4*180 + 360.
  CHECK(pd.demand->demand[0] == (4 * 180 + 360 - 720) / 360);

  Instance t1 = load_fixture("t1.json");
  DemandResult td = face_demands(t1.graph, t1.q);
  REQUIRE(td.demand);
  FaceIndex fi = extract_faces(t1.graph);
  for (FaceId f = 0; f < static_cast<FaceId>(fi.face_count()); ++f)
    if (f != fi.outer) CHECK(td.demand->demand[f] == 0);
}

TEST_CASE("face demands over every consistent labelling of the triangle") {
  Instance t1 = load_fixture("t1.json");
  const auto& g = t1.graph;
  FaceIndex fi = extract_faces(g);
  int fractional = 0, negative = 0;
  for (const auto& q : all_consistent(g)) {
    std::vector<int> gap(fi.face_count());
    std::optional<CertificateKind> expect;
    for (FaceId f = 0; f < static_cast<FaceId>(fi.face_count()); ++f) {
      int sum = 0;
      for (DartId x : fi.walks[f]) sum += determined_by_hand(g, q, g.twin(x));
      const int k = static_cast<int>(fi.walks[f].size());
      gap[f] = k * 180 + (f == fi.outer ? 360 : -360) - sum;
      if (!expect && gap[f] % 360 != 0) expect = CertificateKind::fractional_demand;
      if (!expect && gap[f] < 0) expect = CertificateKind::negative_demand;
    }
    DemandResult r = face_demands(g, q);
    if (expect) {
      REQUIRE(r.certificate);
      CHECK(r.certificate->kind == *expect);
      (*expect == CertificateKind::fractional_demand ? fractional : negative)++;
    } else {
      REQUIRE(r.demand);
      for (FaceId f = 0; f < static_cast<FaceId>(fi.face_count()); ++f)
        CHECK(r.demand->demand[f] == gap[f] / 360);
    }
  }
  // Quadrant-consistent labels keep every face gap a multiple of 360 here.
  CHECK(fractional == 0);
  CHECK(negative > 0);
}

TEST_CASE("large-angle assignment against the brute-force oracle") {
  Instance p2 = load_fixture("p2.json");
  auto oracle_p2 = brute_force_assignment_oracle(p2.graph, p2.q);
  CHECK(oracle_p2.size() == 2);
  AssignmentResult rp = find_large_angle_assignment(p2.graph, p2.q);
  REQUIRE(rp);
  CHECK(std::find(oracle_p2.begin(), oracle_p2.end(), *rp.labeling) != oracle_p2.end());
  const DartId vu = dart(p2.graph, "v", "u"), vw = dart(p2.graph, "v", "w");
  CHECK(rp.labeling->deg(vu) + rp.labeling->deg(vw) == 360);
  CHECK(rp.labeling->deg(vu) * rp.labeling->deg(vw) == 0);

  Instance t1 = load_fixture("t1.json");
  auto oracle_t1 = brute_force_assignment_oracle(t1.graph, t1.q);
  REQUIRE(oracle_t1.size() == 1);
  AssignmentResult rt = find_large_angle_assignment(t1.graph, t1.q);
  REQUIRE(rt);
  CHECK(*rt.labeling == oracle_t1[0]);

  Instance t2 = load_fixture("t2-cyclic.json");
  CHECK(brute_force_assignment_oracle(t2.graph, t2.q).empty());
  AssignmentResult r2 = find_large_angle_assignment(t2.graph, t2.q);
  CHECK_FALSE(r2);
  REQUIRE(r2.certificate);
  CHECK(r2.certificate->reason() == "infeasible assignment");
}

TEST_CASE("rotation-order violations are certified before any flow") {
  PlaneGraph g = PlaneGraph::build({"c", "a", "b", "d"}, {{1, 2, 3}, {0}, {0}, {0}}, 0, 1);
  QConstraints q(g.dart_count());
  q.set_pair(g, dart(g, "c", "a"), Quadrant::ne);
  q.set_pair(g, dart(g, "c", "b"), Quadrant::nw);
  q.set_pair(g, dart(g, "c", "d"), Quadrant::se);
  AssignmentResult r = find_large_angle_assignment(g, q);
  REQUIRE(r.certificate);
  CHECK(r.certificate->kind == CertificateKind::rotation_order);
  CHECK(r.certificate->reason() == "rotation order");
  CHECK(brute_force_assignment_oracle(g, q).empty());
}

TEST_CASE("constraints recovered from a labeling") {
  Instance t1 = load_fixture("t1.json");
  const auto& g = t1.graph;
  AngleLabeling a = labeling_from_triangulated(g, t1.q);
  const DartId uv = dart(g, "u", "v");
  CHECK(constraints_from_labeling(g, a, uv, Quadrant::ne) == t1.q);

  QConstraints shifted = constraints_from_labeling(g, a, uv, Quadrant::nw);
  for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d)
    CHECK(steps_cw(shifted.at(d), t1.q.at(d)) == 1);  // one step counterclockwise

  AngleLabeling zero(g.dart_count(), AngleCategory::deg0);
  try {
    constraints_from_labeling(g, zero, uv, Quadrant::ne);
    FAIL("propagated an all-0 labeling");
  } catch (const error& e) {
    CHECK(e.code() == errc::inconsistent_propagation);
  }
}

TEST_CASE("property: sum identities for accepted labelings") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto gi = generate_random_small(3 + static_cast<int>(seed % 6), seed, 0.5, 0.3);
    AssignmentResult r = find_large_angle_assignment(gi.graph, gi.q);
    if (!r) continue;
    const auto& g = gi.graph;
    CHECK(check_angular(g, *r.labeling).empty());
    CHECK(angular_by_hand(g, *r.labeling));
    int total = 0;
    for (DartId e = 0; e < static_cast<DartId>(g.dart_count()); ++e) total += r.labeling->deg(e);
    CHECK(total == 360 * static_cast<int>(g.vertex_count()));
    // Faces: sum k*180 -/+ 360 = 2E*180 - 360(F-2) = 360 V by Euler.
    CHECK(total == 2 * static_cast<int>(g.edge_count()) * 180 -
                       360 * (static_cast<int>(count_faces(g)) - 2));
    // The labeling reproduces q from any anchor.
    CHECK(constraints_from_labeling(g, *r.labeling, 0, gi.q.at(0)) == gi.q);
  }
}
