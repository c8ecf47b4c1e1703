#include "windrose/io.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

#ifdef WINDROSE_VENDORED_JSON
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif

#include "windrose/error.hpp"

namespace windrose {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw error(errc::parse_error, field + ": " + what);
}

std::string id_of(const json& j, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(field, "expected a vertex id (string)");
}

std::vector<std::string> id_list(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected a list of vertex ids");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(id_of(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

InstanceDocument parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, e.what());
  }
  if (!root.is_object()) fail("(root)", "expected a JSON object");
  for (const char* key : {"vertices", "rotations", "outer_face", "quadrants"})
    if (!root.contains(key)) fail(key, "missing field");

  InstanceDocument doc;
  doc.vertices = id_list(root["vertices"], "vertices");
  std::set<std::string> known;
  for (const auto& v : doc.vertices)
    if (!known.insert(v).second) fail("vertices", "duplicate id '" + v + "'");

  const json& rot = root["rotations"];
  if (!rot.is_object()) fail("rotations", "expected an object mapping ids to neighbour lists");
  std::map<std::string, std::vector<std::string>> by_id;
  for (auto it = rot.begin(); it != rot.end(); ++it) {
    const std::string field = "rotations." + it.key();
    if (!known.count(it.key())) fail(field, "unknown vertex");
    auto nbrs = id_list(it.value(), field);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      if (!known.count(nbrs[i]))
        fail(field + "[" + std::to_string(i) + "]", "unknown vertex '" + nbrs[i] + "'");
    by_id[it.key()] = std::move(nbrs);
  }
  for (const auto& v : doc.vertices) {
    auto it = by_id.find(v);
    if (it == by_id.end()) fail("rotations." + v, "missing rotation");
    doc.rotations.emplace_back(v, it->second);
  }

  const json& outer = root["outer_face"];
  if (!outer.is_array() || outer.empty()) fail("outer_face", "expected a non-empty list");
  if (outer[0].is_array()) {
    for (std::size_t i = 0; i < outer.size(); ++i)
      doc.outer_faces.push_back(id_list(outer[i], "outer_face[" + std::to_string(i) + "]"));
  } else {
    doc.outer_faces.push_back(id_list(outer, "outer_face"));
  }
  for (const auto& walk : doc.outer_faces)
    for (const auto& v : walk)
      if (!known.count(v)) fail("outer_face", "unknown vertex '" + v + "'");

  const json& quads = root["quadrants"];
  if (!quads.is_object()) fail("quadrants", "expected an object mapping \"u->v\" to a quadrant");
  for (auto it = quads.begin(); it != quads.end(); ++it) {
    const std::string field = "quadrants." + it.key();
    if (!it.value().is_string()) fail(field, "expected one of NE, NW, SW, SE");
    auto o = parse_quadrant(it.value().get<std::string>());
    if (!o) fail(field, "expected one of NE, NW, SW, SE");
    doc.quadrants.emplace_back(it.key(), *o);
  }
  return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
  json root;
  root["vertices"] = doc.vertices;
  json rot = json::object();
  for (const auto& [v, nbrs] : doc.rotations) rot[v] = nbrs;
  root["rotations"] = rot;
  if (doc.outer_faces.size() == 1)
    root["outer_face"] = doc.outer_faces[0];
  else
    root["outer_face"] = doc.outer_faces;
  json quads = json::object();
  for (const auto& [k, o] : doc.quadrants) quads[k] = std::string(to_string(o));
  root["quadrants"] = quads;
  return root.dump(2) + "\n";
}

namespace {

std::pair<std::string, std::string> split_key(const std::string& key) {
  auto pos = key.find("->");
  if (pos == std::string::npos) fail("quadrants." + key, "key must look like \"u->v\"");
  return {key.substr(0, pos), key.substr(pos + 2)};
}

}  // namespace

Instance to_instance(const InstanceDocument& doc) {
  std::unordered_map<std::string, VertexId> id;
  for (std::size_t i = 0; i < doc.vertices.size(); ++i)
    id.emplace(doc.vertices[i], static_cast<VertexId>(i));
  std::vector<std::vector<VertexId>> rotations(doc.vertices.size());
  for (const auto& [v, nbrs] : doc.rotations)
    for (const auto& w : nbrs) rotations[id.at(v)].push_back(id.at(w));

  if (doc.outer_faces.size() != 1)
    throw error(errc::not_connected, "one outer face per component given; split components first");
  const auto& walk = doc.outer_faces[0];
  Instance inst;
  if (walk.size() == 1) {
    inst.graph = PlaneGraph::build(doc.vertices, rotations, id.at(walk[0]), id.at(walk[0]));
  } else {
    inst.graph = PlaneGraph::build(doc.vertices, rotations, id.at(walk[0]), id.at(walk[1]));
    auto face = inst.graph.face_walk(inst.graph.outer_dart());
    bool same = face.size() == walk.size();
    for (std::size_t i = 0; same && i < face.size(); ++i)
      same = inst.graph.name(inst.graph.tail(face[i])) == walk[i];
    if (!same)
      fail("outer_face", "does not match the facial walk starting at " + walk[0] + "->" + walk[1]);
  }

  const PlaneGraph& g = inst.graph;
  inst.q = QConstraints(g.dart_count());
  for (const auto& [key, o] : doc.quadrants) {
    auto [a, b] = split_key(key);
    auto ia = id.find(a), ib = id.find(b);
    if (ia == id.end() || ib == id.end()) fail("quadrants." + key, "unknown vertex");
    auto d = g.find_dart(ia->second, ib->second);
    if (!d) fail("quadrants." + key, "not an edge");
    inst.q.set(*d, o);
  }
  for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d)
    if (!inst.q.has(d))
      throw error(errc::missing_dart_label,
                  "quadrants." + g.name(g.tail(d)) + "->" + g.name(g.head(d)));
  return inst;
}

std::vector<InstanceDocument> split_components(const InstanceDocument& doc) {
  std::unordered_map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) id.emplace(doc.vertices[i], i);
  std::vector<std::size_t> comp(doc.vertices.size(), SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t s = 0; s < doc.vertices.size(); ++s) {
    if (comp[s] != SIZE_MAX) continue;
    std::queue<std::size_t> bfs;
    bfs.push(s);
    comp[s] = count;
    while (!bfs.empty()) {
      std::size_t u = bfs.front();
      bfs.pop();
      for (const auto& w : doc.rotations[u].second) {
        std::size_t x = id.at(w);
        if (comp[x] == SIZE_MAX) {
          comp[x] = count;
          bfs.push(x);
        }
      }
    }
    ++count;
  }
  if (count == 1) return {doc};

  std::vector<InstanceDocument> out(count);
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    out[comp[i]].vertices.push_back(doc.vertices[i]);
    out[comp[i]].rotations.push_back(doc.rotations[i]);
  }
  for (const auto& walk : doc.outer_faces) {
    std::size_t c = comp[id.at(walk.front())];
    if (!out[c].outer_faces.empty()) fail("outer_face", "two walks for one component");
    out[c].outer_faces.push_back(walk);
  }
  for (std::size_t c = 0; c < count; ++c)
    if (out[c].outer_faces.empty()) {
      if (out[c].vertices.size() == 1)
        out[c].outer_faces.push_back({out[c].vertices[0]});
      else
        fail("outer_face", "no outer walk for the component of '" + out[c].vertices[0] + "'");
    }
  for (const auto& [key, o] : doc.quadrants) {
    auto it = id.find(split_key(key).first);
    if (it == id.end()) fail("quadrants." + key, "unknown vertex");
    out[comp[it->second]].quadrants.emplace_back(key, o);
  }
  return out;
}

InstanceDocument to_document(const PlaneGraph& g, const QConstraints& q) {
  InstanceDocument doc;
  doc.vertices = g.names();
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    std::vector<std::string> nbrs;
    for (DartId d : g.rotation(v)) {
      nbrs.push_back(g.name(g.head(d)));
      doc.quadrants.emplace_back(g.name(v) + "->" + g.name(g.head(d)), q.at(d));
    }
    doc.rotations.emplace_back(g.name(v), std::move(nbrs));
  }
  std::vector<std::string> walk;
  if (g.outer_dart() == no_id) {
    walk.push_back(g.name(0));
  } else {
    for (DartId d : g.face_walk(g.outer_dart())) walk.push_back(g.name(g.tail(d)));
  }
  doc.outer_faces.push_back(std::move(walk));
  return doc;
}

namespace {

json coord(std::int64_t v) { return v; }
json coord(const Rational& r) {
  json j;
  j["num"] = boost::multiprecision::numerator(r).str();
  j["den"] = boost::multiprecision::denominator(r).str();
  return j;
}

template <class T>
json point_json(const Point<T>& p) {
  json j;
  j["x"] = coord(p.x);
  j["y"] = coord(p.y);
  return j;
}

Rational read_coord(const json& j, const std::string& field) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_object() && j.contains("num") && j.contains("den")) {
      auto str = [](const json& x) {
        return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>());
      };
      boost::multiprecision::cpp_int num(str(j["num"])), den(str(j["den"]));
      if (den == 0) fail(field, "zero denominator");
      return Rational(num, den);
    }
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
  fail(field, "expected an integer or {\"num\", \"den\"}");
}

Point<Rational> read_point(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) fail(field, "expected {\"x\", \"y\"}");
  return {read_coord(j["x"], field + ".x"), read_coord(j["y"], field + ".y")};
}

}  // namespace

template <class T>
std::string drawing_to_json(const PlaneGraph& g, const Drawing<T>& d) {
  json root;
  root["coordinate_kind"] = std::is_same_v<T, Rational> ? "rational" : "integer";
  json verts = json::object();
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    verts[g.name(v)] = point_json(d.points[v]);
  root["vertices"] = verts;
  json edges = json::array();
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    DartId x = g.dart_of(e);
    json je;
    je["u"] = g.name(g.tail(x));
    je["v"] = g.name(g.head(x));
    json bends = json::array();
    for (const auto& p : d.bends[e]) bends.push_back(point_json(p));
    je["bends"] = bends;
    edges.push_back(je);
  }
  root["edges"] = edges;
  return root.dump(2) + "\n";
}

template std::string drawing_to_json(const PlaneGraph&, const GridDrawing&);
template std::string drawing_to_json(const PlaneGraph&, const RationalDrawing&);

RationalDrawing drawing_from_json(const PlaneGraph& g, std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, e.what());
  }
  if (!root.is_object() || !root.contains("vertices") || !root["vertices"].is_object())
    fail("vertices", "missing vertex coordinates");
  RationalDrawing d;
  d.points.resize(g.vertex_count());
  d.bends.resize(g.edge_count());
  std::vector<char> seen(g.vertex_count(), 0);
  for (auto it = root["vertices"].begin(); it != root["vertices"].end(); ++it) {
    auto v = g.find_vertex(it.key());
    if (!v) fail("vertices." + it.key(), "unknown vertex");
    d.points[*v] = read_point(it.value(), "vertices." + it.key());
    seen[*v] = 1;
  }
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (!seen[v]) throw error(errc::missing_geometry, "no point for " + g.name(v));
  if (root.contains("edges")) {
    const json& edges = root["edges"];
    if (!edges.is_array()) fail("edges", "expected a list");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string field = "edges[" + std::to_string(i) + "]";
      const json& je = edges[i];
      if (!je.is_object() || !je.contains("u") || !je.contains("v")) fail(field, "expected {u, v, bends}");
      auto u = g.find_vertex(id_of(je["u"], field + ".u"));
      auto v = g.find_vertex(id_of(je["v"], field + ".v"));
      if (!u || !v) fail(field, "unknown vertex");
      auto dart = g.find_dart(*u, *v);
      if (!dart) fail(field, "not an edge");
      std::vector<Point<Rational>> bends;
      if (je.contains("bends")) {
        if (!je["bends"].is_array()) fail(field + ".bends", "expected a list");
        for (std::size_t k = 0; k < je["bends"].size(); ++k)
          bends.push_back(read_point(je["bends"][k], field + ".bends[" + std::to_string(k) + "]"));
      }
      EdgeId e = g.edge_of(*dart);
      if (g.dart_of(e) != *dart) std::reverse(bends.begin(), bends.end());
      d.bends[e] = std::move(bends);
    }
  }
  return d;
}

}  // namespace windrose
