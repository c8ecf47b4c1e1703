#include <doctest.h>

#include "support.hpp"
#include "windrose/constraints.hpp"
#include "windrose/draw.hpp"
#include "windrose/error.hpp"
#include "windrose/verify.hpp"

using namespace wt;

namespace {

errc parse_code(const std::string& text, std::string* message = nullptr) {
  try {
    to_instance(parse_instance(text));
  } catch (const error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("document accepted: " << text);
  return errc::parse_error;
}

const char* t1_text = R"({
  "vertices": ["u", "v", "w"],
  "rotations": {"u": ["v", "w"], "v": ["w", "u"], "w": ["u", "v"]},
  "outer_face": ["u", "v", "w"],
  "quadrants": {"u->v": "NE", "u->w": "NE", "v->w": "SE", "v->u": "SW", "w->u": "SW", "w->v": "NW"}
})";

}  // namespace

TEST_CASE("canonical documents round-trip byte for byte") {
  for (const char* name : {"t1.json", "t2-cyclic.json", "p2.json", "k4-fixture.json", "q4.json",
                           "pole-square.json", "star.json", "nested-3.json", "delaunay-30.json",
                           "apollonian-12.json"}) {
    CAPTURE(name);
    const std::string text = read_text(fixture_path(name));
    InstanceDocument doc = parse_instance(text);
    CHECK(serialize_instance(doc) == text);
    Instance in = to_instance(doc);
    CHECK(to_document(in.graph, in.q) == doc);
  }
}

TEST_CASE("hand-written T1 parses to the triangle fixture") {
  Instance a = to_instance(parse_instance(t1_text));
  Instance b = load_fixture("t1.json");
  CHECK(to_document(a.graph, a.q) == to_document(b.graph, b.q));
}

TEST_CASE("invalid documents") {
  std::string msg;
  CHECK(parse_code("{", &msg) == errc::parse_error);
  CHECK(parse_code(R"({"vertices": ["u"]})", &msg) == errc::parse_error);
  CHECK(msg.find("rotations") != std::string::npos);

  std::string bad_quadrant = t1_text;
  bad_quadrant.replace(bad_quadrant.find("\"NE\""), 4, "\"UP\"");
  CHECK(parse_code(bad_quadrant, &msg) == errc::parse_error);
  CHECK(msg.find("u->v") != std::string::npos);

  std::string bad_key = t1_text;
  bad_key.replace(bad_key.find("\"u->v\""), 6, "\"u-v\"");
  CHECK(parse_code(bad_key) == errc::parse_error);

  std::string missing = t1_text;
  missing.replace(missing.find(", \"w->v\": \"NW\""), 14, "");
  CHECK(parse_code(missing) == errc::missing_dart_label);

  std::string not_a_face = t1_text;
  not_a_face.replace(not_a_face.find("[\"u\", \"v\", \"w\"]"), 15, "[\"u\", \"w\", \"x\"]");
  CHECK(parse_code(not_a_face) == errc::parse_error);

  std::string unknown_neighbour = t1_text;
  unknown_neighbour.replace(unknown_neighbour.find("[\"v\", \"w\"]"), 10, "[\"v\", \"q\"]");
  CHECK(parse_code(unknown_neighbour) == errc::parse_error);

  CHECK(parse_code(read_text(fixture_path("malformed-rotations.json"))) ==
        errc::inconsistent_rotation);
}

TEST_CASE("the outer face must be a facial walk") {
  std::string inner = t1_text;
  const std::string from = "\"outer_face\": [\"u\", \"v\", \"w\"]";
  inner.replace(inner.find(from), from.size(), "\"outer_face\": [\"u\", \"w\", \"v\"]");
  Instance in = to_instance(parse_instance(inner));  // the other face is a valid choice
  FaceIndex fi = extract_faces(in.graph);
  CHECK(fi.walks[fi.outer].size() == 3);
  CHECK(in.graph.outer_dart() == dart(in.graph, "u", "w"));
}

TEST_CASE("components are split with their own outer walks") {
  const char* text = R"({
  "vertices": ["u", "v", "w", "z"],
  "rotations": {"u": ["v", "w"], "v": ["w", "u"], "w": ["u", "v"], "z": []},
  "outer_face": [["u", "v", "w"], ["z"]],
  "quadrants": {"u->v": "NE", "v->u": "SW", "u->w": "NE", "w->u": "SW", "v->w": "SE", "w->v": "NW"}
})";
  InstanceDocument doc = parse_instance(text);
  try {
    to_instance(doc);
    FAIL("disconnected document accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_connected);
  }
  auto parts = split_components(doc);
  REQUIRE(parts.size() == 2);
  Instance a = to_instance(parts[0]);
  Instance b = to_instance(parts[1]);
  CHECK(a.graph.vertex_count() == 3);
  CHECK(b.graph.vertex_count() == 1);
  CHECK(windrose_pipeline(a.graph, a.q).windrose_planar);
  CHECK(windrose_pipeline(b.graph, b.q).windrose_planar);
}

TEST_CASE("drawing JSON round trip") {
  Instance k4 = load_fixture("k4-fixture.json");
  PipelineResult r = windrose_pipeline(k4.graph, k4.q);
  REQUIRE(r.drawing);
  RationalDrawing back = drawing_from_json(k4.graph, drawing_to_json(k4.graph, *r.drawing));
  REQUIRE(back.points.size() == r.drawing->points.size());
  for (std::size_t i = 0; i < back.points.size(); ++i) {
    CHECK(back.points[i].x == r.drawing->points[i].x);
    CHECK(back.points[i].y == r.drawing->points[i].y);
  }
  CHECK(verify_drawing(k4.graph, k4.q, back).ok());

  RationalDrawing exact = three_tree_block_drawing(k4.graph, k4.q);
  const std::string text = drawing_to_json(k4.graph, exact);
  CHECK(text.find("\"coordinate_kind\": \"rational\"") != std::string::npos);
  CHECK(drawing_from_json(k4.graph, text) == exact);
}

TEST_CASE("svg output colours darts by quadrant") {
  Instance t1 = load_fixture("t1.json");
  PipelineResult r = windrose_pipeline(t1.graph, t1.q);
  const std::string svg = drawing_to_svg(t1.graph, t1.q, *r.drawing);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("url(#arrow-NE)") != std::string::npos);
  CHECK(svg.find("url(#arrow-SW)") != std::string::npos);
  CHECK(svg.find("url(#arrow-SE)") != std::string::npos);
  CHECK(svg.find("url(#arrow-NW)") != std::string::npos);
}

TEST_CASE("generators") {
  SUBCASE("cyclic triangle is exactly the cyclic fixture") {
    auto gi = generate_fixture("cyclic-triangle");
    const auto& g = gi.graph;
    CHECK(g.vertex_count() == 3);
    CHECK(gi.q.at(dart(g, "u", "v")) == Quadrant::ne);
    CHECK(gi.q.at(dart(g, "v", "w")) == Quadrant::ne);
    CHECK(gi.q.at(dart(g, "w", "u")) == Quadrant::ne);
    CHECK(serialize_instance(to_document(g, gi.q)) == read_text(fixture_path("t2-cyclic.json")));
  }
  SUBCASE("nested triangles k=2") {
    auto gi = generate_nested_triangles(2);
    CHECK(gi.graph.vertex_count() == 6);
    CHECK(gi.graph.edge_count() == 3 + 3 + 3);
    REQUIRE(gi.witness);
    CHECK(verify_drawing(gi.graph, gi.q, *gi.witness).ok());
    // Triangle edges are diagonal in alternating directions.
    for (int level = 0; level < 2; ++level) {
      const std::string s = std::to_string(level);
      for (auto [a, b] : {std::pair{"a", "b"}, {"b", "c"}, {"c", "a"}}) {
        Quadrant o = gi.q.at(dart(gi.graph, a + s, b + s));
        bool negative_slope = o == Quadrant::nw || o == Quadrant::se;
        CHECK(negative_slope == (level == 0));
      }
    }
  }
  SUBCASE("delaunay is deterministic per seed and a yes-instance") {
    auto a = generate_delaunay(100, 7);
    auto b = generate_delaunay(100, 7);
    auto c = generate_delaunay(100, 8);
    const auto sa = serialize_instance(to_document(a.graph, a.q));
    CHECK(sa == serialize_instance(to_document(b.graph, b.q)));
    CHECK(sa != serialize_instance(to_document(c.graph, c.q)));
    // Distinct coordinates in both axes.
    std::set<Rational> xs, ys;
    for (const auto& p : a.witness->points) {
      xs.insert(p.x);
      ys.insert(p.y);
    }
    CHECK(xs.size() == 100);
    CHECK(ys.size() == 100);
    CHECK(windrose_pipeline(a.graph, a.q).windrose_planar);
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(generate_delaunay(2, 1), error);
    CHECK_THROWS_AS(generate_nested_triangles(0), error);
    CHECK_THROWS_AS(generate_fixture("hexagon"), error);
  }
  SUBCASE("every fixture's witness drawing verifies") {
    for (const auto& name : fixture_names()) {
      CAPTURE(name);
      auto gi = generate_fixture(name);
      if (gi.witness) CHECK(verify_drawing(gi.graph, gi.q, *gi.witness).ok());
    }
  }
}
