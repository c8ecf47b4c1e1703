#include "windrose/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "windrose/error.hpp"

namespace windrose {

template <class T>
PlaneGraph plane_graph_from_drawing(std::vector<std::string> names,
                                    const std::vector<Point<T>>& points,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  const auto n = static_cast<VertexId>(names.size());
  std::vector<std::vector<VertexId>> rot(n);
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& r = rot[v];
    std::sort(r.begin(), r.end(), [&](VertexId a, VertexId b) {
      return geom::angle_less(geom::sub(points[a], points[v]), geom::sub(points[b], points[v]));
    });
    std::reverse(r.begin(), r.end());  // clockwise, starting at the largest angle
  }
  if (edges.empty()) return PlaneGraph::build(std::move(names), rot, 0, 0);
  PlaneGraph g = PlaneGraph::build(std::move(names), rot, edges[0].first, edges[0].second);
  const FaceIndex fi = extract_faces(g);
  FaceId best = 0;
  geom::wide_t<T> best_area = 0;
  for (FaceId f = 0; f < static_cast<FaceId>(fi.walks.size()); ++f) {
    std::vector<Point<T>> poly;
    for (DartId d : fi.walks[f]) poly.push_back(points[g.tail(d)]);
    auto area = geom::twice_area(poly);
    if (f == 0 || area < best_area) {
      best = f;
      best_area = area;
    }
  }
  g.set_outer_dart(fi.walks[best][0]);
  return g;
}

template <class T>
GeneratedInstance instance_from_drawing(std::vector<std::string> names,
                                        const std::vector<Point<T>>& points,
                                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
  GeneratedInstance out;
  out.graph = plane_graph_from_drawing(std::move(names), points, edges);
  out.q = constraints_from_points(out.graph, points);
  RationalDrawing w;
  for (const auto& p : points) w.points.push_back({Rational(p.x), Rational(p.y)});
  w.bends.resize(out.graph.edge_count());
  out.witness = std::move(w);
  return out;
}

template PlaneGraph plane_graph_from_drawing(std::vector<std::string>,
                                             const std::vector<Point<std::int64_t>>&,
                                             const std::vector<std::pair<VertexId, VertexId>>&);
template PlaneGraph plane_graph_from_drawing(std::vector<std::string>,
                                             const std::vector<Point<Rational>>&,
                                             const std::vector<std::pair<VertexId, VertexId>>&);
template GeneratedInstance instance_from_drawing(std::vector<std::string>,
                                                 const std::vector<Point<std::int64_t>>&,
                                                 const std::vector<std::pair<VertexId, VertexId>>&);
template GeneratedInstance instance_from_drawing(std::vector<std::string>,
                                                 const std::vector<Point<Rational>>&,
                                                 const std::vector<std::pair<VertexId, VertexId>>&);

namespace {

using IP = Point<std::int64_t>;
using Edges = std::vector<std::pair<VertexId, VertexId>>;

std::vector<std::string> numbered(int n, const char* prefix = "v") {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// Bounded draw without relying on distribution implementations, so output
// is identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<std::int64_t> distinct_values(std::mt19937_64& rng, int n, std::int64_t range) {
  std::set<std::int64_t> seen;
  std::vector<std::int64_t> out;
  while (static_cast<int>(out.size()) < n) {
    auto v = static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(range)));
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

geom::int128 incircle(const IP& a, const IP& b, const IP& c, const IP& d) {
  geom::int128 adx = a.x - d.x, ady = a.y - d.y;
  geom::int128 bdx = b.x - d.x, bdy = b.y - d.y;
  geom::int128 cdx = c.x - d.x, cdy = c.y - d.y;
  geom::int128 ad = adx * adx + ady * ady, bd = bdx * bdx + bdy * bdy, cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

// Triangulation of points with distinct x by an x-sweep, then Lawson flips.
// Returns nullopt if the first three points are collinear.
std::optional<Edges> triangulate_points(const std::vector<IP>& pts, bool delaunay) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pts[a].x < pts[b].x; });
  if (n < 3) {
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(order[i], order[i + 1]);
    return e;
  }
  using Tri = std::array<int, 3>;
  std::vector<Tri> tris;
  int o = geom::orient(pts[order[0]], pts[order[1]], pts[order[2]]);
  if (o == 0) return std::nullopt;
  std::vector<int> hull = o > 0 ? std::vector<int>{order[0], order[1], order[2]}
                                : std::vector<int>{order[0], order[2], order[1]};
  tris.push_back({hull[0], hull[1], hull[2]});
  for (int k = 3; k < n; ++k) {
    const int p = order[k];
    const int h = static_cast<int>(hull.size());
    std::vector<char> vis(h);
    for (int i = 0; i < h; ++i)
      vis[i] = geom::orient(pts[hull[i]], pts[hull[(i + 1) % h]], pts[p]) < 0;
    int s = -1;
    for (int i = 0; i < h; ++i)
      if (vis[i] && !vis[(i + h - 1) % h]) s = i;
    if (s < 0) return std::nullopt;
    int e = s;
    while (vis[e % h]) {
      tris.push_back({hull[e % h], p, hull[(e + 1) % h]});
      ++e;
    }
    std::vector<int> next;
    // Keep hull[e] .. hull[s] (cyclically), then p.
    for (int i = e % h;; i = (i + 1) % h) {
      next.push_back(hull[i]);
      if (i == s) break;
    }
    next.push_back(p);
    hull = std::move(next);
  }

  if (delaunay) {
    auto key = [](int a, int b) { return std::pair{std::min(a, b), std::max(a, b)}; };
    std::map<std::pair<int, int>, std::vector<int>> owners;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
      for (int i = 0; i < 3; ++i) owners[key(tris[t][i], tris[t][(i + 1) % 3])].push_back(t);
    std::vector<std::pair<int, int>> stack;
    for (const auto& [k, ts] : owners)
      if (ts.size() == 2) stack.push_back(k);
    auto third = [](const Tri& t, int a, int b) {
      for (int x : t)
        if (x != a && x != b) return x;
      return -1;
    };
    auto replace_owner = [&](std::pair<int, int> k, int from, int to) {
      for (int& t : owners[k])
        if (t == from) t = to;
    };
    std::size_t guard = 0;
    while (!stack.empty() && ++guard < 50'000'000) {
      auto k = stack.back();
      stack.pop_back();
      auto it = owners.find(k);
      if (it == owners.end() || it->second.size() != 2) continue;
      int t1 = it->second[0], t2 = it->second[1];
      // Orient so that t1 = (a, b, c) counterclockwise.
      int a = k.first, b = k.second;
      int c = third(tris[t1], a, b), d = third(tris[t2], a, b);
      if (geom::orient(pts[a], pts[b], pts[c]) < 0) {
        std::swap(t1, t2);
        std::swap(c, d);
      }
      if (incircle(pts[a], pts[b], pts[c], pts[d]) <= 0) continue;
      tris[t1] = {a, d, c};
      tris[t2] = {d, b, c};
      owners.erase(it);
      owners[key(c, d)] = {t1, t2};
      replace_owner(key(b, c), t1, t2);
      replace_owner(key(a, d), t2, t1);
      for (auto e2 : {key(a, d), key(d, b), key(b, c), key(c, a)}) stack.push_back(e2);
    }
  }

  std::set<std::pair<int, int>> es;
  for (const auto& t : tris)
    for (int i = 0; i < 3; ++i)
      es.insert({std::min(t[i], t[(i + 1) % 3]), std::max(t[i], t[(i + 1) % 3])});
  return Edges(es.begin(), es.end());
}

std::vector<IP> random_points(std::mt19937_64& rng, int n, std::int64_t range) {
  auto xs = distinct_values(rng, n, range);
  auto ys = distinct_values(rng, n, range);
  std::vector<IP> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = {xs[i], ys[i]};
  return pts;
}

}  // namespace

GeneratedInstance generate_delaunay(int n, std::uint64_t seed) {
  if (n < 3) throw error(errc::bad_params, "delaunay needs n >= 3");
  std::mt19937_64 rng(seed);
  const std::int64_t range = std::max<std::int64_t>(1000, 64LL * n);
  for (;;) {
    auto pts = random_points(rng, n, range);
    auto edges = triangulate_points(pts, true);
    if (edges) return instance_from_drawing(numbered(n), pts, *edges);
  }
}

GeneratedInstance generate_random_small(int n, std::uint64_t seed, double keep_edge_probability,
                                        double relabel_probability) {
  if (n < 2) throw error(errc::bad_params, "random instance needs n >= 2");
  std::mt19937_64 rng(seed);
  auto chance = [&](double p) { return static_cast<double>(draw(rng, 1'000'000)) < p * 1e6; };
  for (;;) {
    auto pts = random_points(rng, n, 8LL * n + 8);
    auto all = triangulate_points(pts, false);
    if (!all) continue;
    // Random spanning tree keeps the graph connected.
    std::vector<std::size_t> idx(all->size());
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[draw(rng, i)]);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<char> keep(all->size(), 0);
    for (std::size_t i : idx) {
      auto [a, b] = (*all)[i];
      if (find(a) != find(b)) {
        parent[find(a)] = find(b);
        keep[i] = 1;
      }
    }
    Edges edges;
    for (std::size_t i = 0; i < all->size(); ++i)
      if (keep[i] || chance(keep_edge_probability)) edges.push_back((*all)[i]);
    GeneratedInstance inst = instance_from_drawing(numbered(n), pts, edges);
    bool relabeled = false;
    for (EdgeId e = 0; e < static_cast<EdgeId>(inst.graph.edge_count()); ++e)
      if (chance(relabel_probability)) {
        inst.q.set_pair(inst.graph, inst.graph.dart_of(e), quadrant_from_index(static_cast<int>(draw(rng, 4))));
        relabeled = true;
      }
    if (relabeled) inst.witness.reset();
    return inst;
  }
}

GeneratedInstance generate_nested_triangles(int k) {
  if (k < 1) throw error(errc::bad_params, "nested-triangles needs k >= 1");
  std::vector<IP> pts;
  Edges edges;
  auto shift_to_origin = [&] {
    std::int64_t mx = pts[0].x, my = pts[0].y;
    for (const auto& p : pts) {
      mx = std::min(mx, p.x);
      my = std::min(my, p.y);
    }
    for (auto& p : pts) {
      p.x -= mx;
      p.y -= my;
    }
  };
  auto crosses = [&](VertexId a, VertexId b) {
    for (auto [c, d] : edges) {
      if (c == a || c == b || d == a || d == b) continue;
      if (geom::segments_intersect(pts[a], pts[b], pts[c], pts[d])) return true;
    }
    for (VertexId x = 0; x < static_cast<VertexId>(pts.size()); ++x)
      if (x != a && x != b && geom::on_segment(pts[a], pts[b], pts[x])) return true;
    return false;
  };
  for (int level = 0; level < k; ++level) {
    std::int64_t W = 0, H = 0;
    if (!pts.empty()) {
      shift_to_origin();
      for (const auto& p : pts) {
        W = std::max(W, p.x);
        H = std::max(H, p.y);
      }
    }
    const std::int64_t M = W + H + 3;
    std::array<IP, 3> tri;
    if (level % 2 == 0)  // all edges of negative slope (NW-SE)
      tri = {IP{-2, M}, IP{-1, -1}, IP{M, -2}};
    else  // all edges of positive slope (NE-SW)
      tri = {IP{W + 2, M}, IP{W + 1, -1}, IP{W - M, -2}};
    const auto base = static_cast<VertexId>(pts.size());
    for (const auto& p : tri) pts.push_back(p);
    for (int i = 0; i < 3; ++i) edges.emplace_back(base + i, base + (i + 1) % 3);
    if (level == 0) continue;
    const VertexId inner = base - 3;
    bool joined = false;
    // The two triangles may have opposite orientations; try both directions.
    for (int s = 0; s < 6 && !joined; ++s) {
      Edges extra;
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        VertexId a = inner + i, b = base + (s < 3 ? (i + s) % 3 : (s - i + 3) % 3);
        if (pts[a].x == pts[b].x || pts[a].y == pts[b].y || crosses(a, b)) ok = false;
        for (auto [c, d] : extra)
          if (ok && geom::segments_intersect(pts[a], pts[b], pts[c], pts[d])) ok = false;
        extra.emplace_back(a, b);
      }
      if (ok) {
        edges.insert(edges.end(), extra.begin(), extra.end());
        joined = true;
      }
    }
    if (!joined) throw std::logic_error("no planar corner correspondence between nested triangles");
  }
  shift_to_origin();
  std::vector<std::string> names;
  for (int level = 0; level < k; ++level)
    for (char c : {'a', 'b', 'c'}) names.push_back(std::string(1, c) + std::to_string(level));
  return instance_from_drawing(names, pts, edges);
}

GeneratedInstance generate_apollonian(int n, std::uint64_t seed) {
  if (n < 3) throw error(errc::bad_params, "apollonian needs n >= 3");
  using RP = Point<Rational>;
  std::mt19937_64 rng(seed);
  std::vector<RP> pts{{0, 0}, {7, 2}, {3, 9}};
  Edges edges{{0, 1}, {1, 2}, {2, 0}};
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}};
  while (static_cast<int>(pts.size()) < n) {
    std::size_t fi = draw(rng, faces.size());
    auto f = faces[fi];
    RP p;
    for (int attempt = 0;; ++attempt) {
      Rational wa = 1 + static_cast<long>(draw(rng, 4));
      Rational wb = 1 + static_cast<long>(draw(rng, 4));
      Rational wc = 1 + static_cast<long>(draw(rng, 4));
      Rational s = wa + wb + wc;
      p = {(wa * pts[f[0]].x + wb * pts[f[1]].x + wc * pts[f[2]].x) / s,
           (wa * pts[f[0]].y + wb * pts[f[1]].y + wc * pts[f[2]].y) / s};
      bool ok = true;
      for (VertexId c : f) ok = ok && p.x != pts[c].x && p.y != pts[c].y;
      if (ok) break;
      if (attempt > 200) throw std::logic_error("apollonian insertion found no generic point");
    }
    const auto v = static_cast<VertexId>(pts.size());
    pts.push_back(p);
    for (VertexId c : f) edges.emplace_back(c, v);
    faces[fi] = {f[0], f[1], v};
    faces.push_back({f[1], f[2], v});
    faces.push_back({f[2], f[0], v});
  }
  return instance_from_drawing(numbered(n), pts, edges);
}

std::vector<std::string> fixture_names() {
  return {"triangle", "cyclic-triangle", "path-ambiguous", "k4-apex", "quad-diamond",
          "pole-square", "star"};
}

GeneratedInstance generate_fixture(std::string_view name) {
  if (name == "triangle")
    return instance_from_drawing<std::int64_t>({"u", "v", "w"}, {{0, 0}, {1, 2}, {2, 1}},
                                               {{0, 1}, {1, 2}, {2, 0}});
  if (name == "cyclic-triangle") {
    GeneratedInstance out;
    out.graph = PlaneGraph::build({"u", "v", "w"}, {{1, 2}, {2, 0}, {0, 1}}, 0, 1);
    out.q = QConstraints(out.graph.dart_count());
    out.q.set_pair(out.graph, *out.graph.find_dart(0, 1), Quadrant::ne);
    out.q.set_pair(out.graph, *out.graph.find_dart(1, 2), Quadrant::ne);
    out.q.set_pair(out.graph, *out.graph.find_dart(2, 0), Quadrant::ne);
    return out;
  }
  if (name == "path-ambiguous")
    return instance_from_drawing<std::int64_t>({"u", "v", "w"}, {{1, 2}, {0, 0}, {2, 1}},
                                               {{0, 1}, {1, 2}});
  if (name == "k4-apex")
    return instance_from_drawing<std::int64_t>(
        {"a", "b", "c", "v"}, {{-1, 2}, {2, -1}, {-2, -2}, {0, 0}},
        {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
  if (name == "quad-diamond")
    return instance_from_drawing<std::int64_t>({"left", "top", "right", "bottom"},
                                               {{0, 1}, {1, 3}, {3, 2}, {2, 0}},
                                               {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  if (name == "pole-square")
    return instance_from_drawing<std::int64_t>(
        {"W", "N", "E", "S", "x"}, {{0, 1}, {1, 4}, {4, 3}, {3, 0}, {2, 2}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  if (name == "star")
    return instance_from_drawing<std::int64_t>(
        {"c", "ne", "nw", "sw", "se"}, {{0, 0}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}},
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  throw error(errc::bad_params, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace windrose
