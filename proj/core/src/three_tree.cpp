#include <algorithm>
#include <array>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <map>
#include <set>
#include <stdexcept>

#include "windrose/draw.hpp"
#include "windrose/error.hpp"

namespace windrose {

namespace {

using R = Rational;
using P = Point<R>;

struct Blocks {
  std::vector<std::vector<VertexId>> vertices;  // per block, sorted
  std::vector<std::size_t> edge_count;
  std::vector<char> is_cut;                     // per vertex of g
};

// Blocks of the subgraph induced by alive vertices.
Blocks blocks_of(const PlaneGraph& g, const std::vector<char>& alive) {
  using UG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                   boost::property<boost::edge_index_t, std::size_t>>;
  std::vector<int> local(g.vertex_count(), -1);
  std::vector<VertexId> global;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (alive[v]) {
      local[v] = static_cast<int>(global.size());
      global.push_back(v);
    }
  UG ug(global.size());
  std::size_t m = 0;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    DartId d = g.dart_of(e);
    VertexId a = g.tail(d), b = g.head(d);
    if (alive[a] && alive[b]) boost::add_edge(local[a], local[b], m++, ug);
  }
  std::vector<std::size_t> comp(m);
  auto index = boost::get(boost::edge_index, ug);
  std::vector<UG::vertex_descriptor> arts;
  auto nc = boost::biconnected_components(
                ug, boost::make_iterator_property_map(comp.begin(), index), std::back_inserter(arts))
                .first;
  Blocks b;
  b.is_cut.assign(g.vertex_count(), 0);
  for (auto a : arts) b.is_cut[global[a]] = 1;
  std::vector<std::set<VertexId>> sets(nc);
  b.edge_count.assign(nc, 0);
  for (auto [it, end] = boost::edges(ug); it != end; ++it) {
    auto c = comp[index[*it]];
    sets[c].insert(global[boost::source(*it, ug)]);
    sets[c].insert(global[boost::target(*it, ug)]);
    ++b.edge_count[c];
  }
  for (auto& s : sets) b.vertices.emplace_back(s.begin(), s.end());
  return b;
}

// View of g restricted to alive vertices, with the same rotation system.
struct AliveView {
  const PlaneGraph& g;
  std::vector<char> alive;

  bool live(DartId d) const { return alive[g.tail(d)] && alive[g.head(d)]; }

  DartId cw(DartId d) const {
    DartId x = g.cw_next(d);
    while (!alive[g.head(x)]) x = g.cw_next(x);
    return x;
  }
  DartId ccw(DartId d) const {
    DartId x = g.ccw_next(d);
    while (!alive[g.head(x)]) x = g.ccw_next(x);
    return x;
  }
  DartId face_next(DartId d) const { return cw(g.twin(d)); }

  std::vector<DartId> walk(DartId d) const {
    std::vector<DartId> w;
    DartId x = d;
    do {
      w.push_back(x);
      x = face_next(x);
    } while (x != d && w.size() <= 2 * g.dart_count());
    return w;
  }

  std::vector<DartId> darts(VertexId v) const {
    std::vector<DartId> out;
    for (DartId d : g.rotation(v))
      if (alive[g.head(d)]) out.push_back(d);
    return out;
  }
};

bool peelable_three_tree(const PlaneGraph& g, const std::vector<VertexId>& block) {
  std::set<VertexId> rest(block.begin(), block.end());
  auto adj = [&](VertexId a, VertexId b) { return g.adjacent(a, b); };
  while (rest.size() > 3) {
    bool found = false;
    for (VertexId v : rest) {
      std::vector<VertexId> nb;
      for (DartId d : g.rotation(v))
        if (rest.count(g.head(d))) nb.push_back(g.head(d));
      if (nb.size() == 3 && adj(nb[0], nb[1]) && adj(nb[1], nb[2]) && adj(nb[0], nb[2])) {
        rest.erase(v);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool has_three_tree_blocks(const PlaneGraph& g) {
  std::vector<char> alive(g.vertex_count(), 1);
  Blocks b = blocks_of(g, alive);
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    const std::size_t k = b.vertices[i].size();
    if (k <= 3) continue;
    if (b.edge_count[i] != 3 * k - 6) return false;
    if (!peelable_three_tree(g, b.vertices[i])) return false;
  }
  return true;
}

namespace {

enum class StepKind { leaf2, leaf3, interior };

struct Step {
  StepKind kind;
  VertexId c = no_id;  // cut vertex (leaf steps)
  VertexId v = no_id;
  VertexId u = no_id;  // leaf3: second vertex, clockwise after v at c
  std::array<VertexId, 3> tri{no_id, no_id, no_id};  // interior: neighbours
};

// ---- exact geometry helpers ----

R floor_r(const R& r) {
  using boost::multiprecision::cpp_int;
  cpp_int n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
  cpp_int q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return R(q);
}

R linf(const P& p) { return std::max(abs(p.x), abs(p.y)); }

P scale(const P& p, const R& t) { return {p.x * t, p.y * t}; }
P add(const P& a, const P& b) { return {a.x + b.x, a.y + b.y}; }

// Scaled by a power of two into 1/2 < |p| <= 1, so dyadic input stays dyadic.
P normalized(const P& p) {
  R t = 1;
  while (linf(scale(p, t)) > 1) t /= 2;
  while (linf(scale(p, t)) <= R(1, 2)) t *= 2;
  return scale(p, t);
}

bool same_direction(const P& a, const P& b) {
  P o{0, 0};
  return geom::cross(o, a, b) == 0 && a.x * b.x + a.y * b.y > 0;
}

int cls(const P& s, const P& x) {
  P o{0, 0};
  R c = geom::cross(o, s, x);
  if (c > 0) return 1;
  if (c < 0) return 3;
  return (s.x * x.x + s.y * x.y > 0) ? 0 : 2;
}

// Counterclockwise angle from s to a is smaller than from s to b.
bool ccw_before(const P& s, const P& a, const P& b) {
  int ca = cls(s, a), cb = cls(s, b);
  if (ca != cb) return ca < cb;
  if (ca == 0 || ca == 2) return false;
  P o{0, 0};
  return geom::cross(o, a, b) > 0;
}

bool in_quadrant(const P& d, Quadrant o) {
  return (x_sign(o) > 0 ? d.x > 0 : d.x < 0) && (y_sign(o) > 0 ? d.y > 0 : d.y < 0);
}

// Open wedge swept counterclockwise from w1 to w2 (w1 == w2: all but that ray).
struct Wedge {
  bool full = true;
  P w1, w2;
  bool contains(const P& d) const {
    if (full) return true;
    if (same_direction(w1, w2)) return !same_direction(w1, d);
    return cls(w1, d) != 0 && ccw_before(w1, d, w2);
  }
};

std::vector<P> candidate_directions(Quadrant o, const Wedge& wedge) {
  std::vector<P> boundary{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  if (!wedge.full) {
    boundary.push_back(normalized(wedge.w1));
    boundary.push_back(normalized(wedge.w2));
  }
  std::sort(boundary.begin(), boundary.end(), geom::angle_less<R>);
  std::vector<P> dirs;
  boundary.erase(std::unique(boundary.begin(), boundary.end(),
                             [](const P& a, const P& b) { return same_direction(a, b); }),
                 boundary.end());
  const int k = 8;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const P& a = boundary[i];
    const P& b = boundary[(i + 1) % boundary.size()];
    // Middle first, then spread towards the ends.
    for (int j : {4, 3, 5, 2, 6, 1, 7}) {
      P d = add(scale(a, R(k - j)), scale(b, R(j)));
      if (in_quadrant(d, o) && wedge.contains(d)) dirs.push_back(d);
    }
  }
  return dirs;
}

class Placer {
public:
  Placer(const PlaneGraph& g, const QConstraints& q, R radius)
      : g_(g), q_(q), radius_(std::move(radius)), pts_(g.vertex_count()),
        placed_(g.vertex_count(), 0) {}

  void place(VertexId v, const P& p) {
    pts_[v] = p;
    placed_[v] = 1;
  }
  bool placed(VertexId v) const { return placed_[v]; }
  const P& at(VertexId v) const { return pts_[v]; }

  // Directions for a new edge c->x that leave room, on both sides, for the
  // neighbours of c that are still unplaced: sweeping clockwise from the
  // nearest placed neighbour, each unplaced one pushes the bound to the start
  // of its quadrant. `extra` is treated as placed at c + extra_dir.
  Wedge slot_wedge(VertexId c, VertexId x, VertexId extra = no_id, const P& extra_dir = {}) const {
    auto known = [&](VertexId y) { return placed_[y] || y == extra; };
    auto dir = [&](VertexId y) { return y == extra ? extra_dir : geom::sub(pts_[y], pts_[c]); };
    auto quad = [&](DartId d) { return q_.at(d); };
    const DartId dx = *g_.find_dart(c, x);
    std::vector<DartId> before, after;
    DartId prev = g_.ccw_next(dx);
    while (prev != dx && !known(g_.head(prev))) {
      before.push_back(prev);
      prev = g_.ccw_next(prev);
    }
    Wedge w;
    if (prev == dx) return w;
    DartId next = g_.cw_next(dx);
    while (!known(g_.head(next))) {
      after.push_back(next);
      next = g_.cw_next(next);
    }
    P low = dir(g_.head(prev)), high = dir(g_.head(next));
    for (auto it = before.rbegin(); it != before.rend(); ++it) {
      Quadrant o = quad(*it);
      P entry{o == Quadrant::se ? 1 : (o == Quadrant::nw ? -1 : 0),
              o == Quadrant::ne ? 1 : (o == Quadrant::sw ? -1 : 0)};
      if (!in_quadrant(low, o) && !same_direction(low, entry)) low = entry;
    }
    for (auto it = after.rbegin(); it != after.rend(); ++it) {
      Quadrant o = quad(*it);
      P entry{o == Quadrant::ne ? 1 : (o == Quadrant::sw ? -1 : 0),
              o == Quadrant::nw ? 1 : (o == Quadrant::se ? -1 : 0)};
      if (!in_quadrant(high, o) && !same_direction(high, entry)) high = entry;
    }
    w.full = false;
    // Clockwise from low to high equals counterclockwise from high to low.
    w.w1 = high;
    w.w2 = low;
    return w;
  }

  // New segment a-b against all placed edges. Shared endpoints may only touch.
  bool segment_free(VertexId va, const P& a, VertexId vb, const P& b) const {
    for (EdgeId e = 0; e < static_cast<EdgeId>(g_.edge_count()); ++e) {
      DartId d = g_.dart_of(e);
      VertexId x = g_.tail(d), y = g_.head(d);
      if (!placed_[x] || !placed_[y]) continue;
      const P& px = pts_[x];
      const P& py = pts_[y];
      VertexId shared = no_id;
      if (x == va || y == va) shared = va;
      if (x == vb || y == vb) shared = shared == no_id ? vb : no_id;
      if (shared != no_id) {
        const P& s = shared == va ? a : b;
        const P& other_new = shared == va ? b : a;
        const P& other_old = (x == shared) ? py : px;
        if (geom::overlap_from_shared(s, other_new, other_old)) return false;
        continue;
      }
      if (geom::segments_intersect(a, b, px, py)) return false;
    }
    for (VertexId x = 0; x < static_cast<VertexId>(g_.vertex_count()); ++x)
      if (placed_[x] && x != va && x != vb && geom::on_segment(a, b, pts_[x])) return false;
    return true;
  }

  // Smallest j >= 0 with |t d| <= radius for t = 2^-j.
  R initial_scale(const P& d) const {
    R t = 1;
    while (linf(scale(d, t)) > radius_) t /= 2;
    return t;
  }

  void leaf2(VertexId c, VertexId v) {
    const Quadrant o = q_.at(*g_.find_dart(c, v));
    Wedge wedge = slot_wedge(c, v);
    for (const P& d : candidate_directions(o, wedge)) {
      R t = initial_scale(d);
      for (int j = 0; j < 64; ++j, t /= 2) {
        P p = add(pts_[c], scale(d, t));
        if (segment_free(c, pts_[c], v, p)) {
          place(v, p);
          return;
        }
      }
    }
    throw std::logic_error("no room for leaf " + g_.name(v));
  }

  // v then u clockwise around c; triangle c, v, u.
  void leaf3(VertexId c, VertexId v, VertexId u) {
    const Quadrant ov = q_.at(*g_.find_dart(c, v));
    const Quadrant ou = q_.at(*g_.find_dart(c, u));
    const Quadrant ovu = q_.at(*g_.find_dart(v, u));
    const R ratios[] = {R(1), R(2), R(1, 2), R(4), R(1, 4), R(8), R(1, 8), R(16), R(1, 16)};
    P o{0, 0};
    for (const P& dv : candidate_directions(ov, slot_wedge(c, v)))
      for (const P& du0 : candidate_directions(ou, slot_wedge(c, u, v, dv))) {
        if (!(geom::cross(o, dv, du0) < 0)) continue;  // u clockwise of v within 180
        for (const R& r : ratios) {
          P du = scale(du0, r);
          if (!in_quadrant(geom::sub(du, dv), ovu)) continue;
          R t = std::min(initial_scale(dv), initial_scale(du));
          for (int j = 0; j < 64; ++j, t /= 2) {
            P pv = add(pts_[c], scale(dv, t));
            P pu = add(pts_[c], scale(du, t));
            if (segment_free(c, pts_[c], v, pv) && segment_free(c, pts_[c], u, pu) &&
                segment_free(v, pv, u, pu) && !crosses_new(c, pv, pu)) {
              place(v, pv);
              place(u, pu);
              return;
            }
          }
        }
      }
    throw std::logic_error("no room for leaf triangle at " + g_.name(c));
  }

  void interior(VertexId v, const std::array<VertexId, 3>& tri) {
    std::vector<P> poly{pts_[tri[0]], pts_[tri[1]], pts_[tri[2]]};
    if (geom::twice_area(poly) < 0) std::swap(poly[1], poly[2]);
    struct Half {
      R a, b, c;  // a x + b y + c > 0
    };
    std::vector<Half> hs;
    for (VertexId p : tri) {
      Quadrant o = q_.at(*g_.find_dart(p, v));
      hs.push_back({R(x_sign(o)), R(0), -R(x_sign(o)) * pts_[p].x});
      hs.push_back({R(0), R(y_sign(o)), -R(y_sign(o)) * pts_[p].y});
      // Stay inside the slot left over by p's unplaced neighbours.
      Wedge w = slot_wedge(p, v);
      if (!w.full) {
        const P& c = pts_[p];
        hs.push_back({w.w2.y, -w.w2.x, w.w2.x * c.y - w.w2.y * c.x});
        hs.push_back({-w.w1.y, w.w1.x, w.w1.y * c.x - w.w1.x * c.y});
      }
    }
    for (const Half& h : hs) {
      std::vector<P> next;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const P& s = poly[i];
        const P& e = poly[(i + 1) % poly.size()];
        R fs = h.a * s.x + h.b * s.y + h.c;
        R fe = h.a * e.x + h.b * e.y + h.c;
        if (fs >= 0) next.push_back(s);
        if ((fs > 0 && fe < 0) || (fs < 0 && fe > 0)) {
          R t = fs / (fs - fe);
          next.push_back({s.x + (e.x - s.x) * t, s.y + (e.y - s.y) * t});
        }
      }
      poly = std::move(next);
      if (poly.empty()) break;
    }
    if (poly.size() < 3 || !(geom::twice_area(poly) > 0))
      throw std::logic_error("empty placement region for " + g_.name(v));
    P centroid{0, 0};
    for (const P& p : poly) centroid = add(centroid, p);
    centroid = scale(centroid, R(1) / R(static_cast<long>(poly.size())));

    auto inside = [&](const P& p) {
      for (const Half& h : hs)
        if (!(h.a * p.x + h.b * p.y + h.c > 0)) return false;
      const P& a = pts_[tri[0]];
      const P& b = pts_[tri[1]];
      const P& c = pts_[tri[2]];
      int s1 = geom::orient(a, b, p), s2 = geom::orient(b, c, p), s3 = geom::orient(c, a, p);
      return s1 != 0 && s1 == s2 && s2 == s3;
    };
    // Snap to a dyadic point to keep denominators small.
    R step = 1;
    for (int k = 0; k < 200; ++k, step /= 2) {
      P p{floor_r(centroid.x / step + R(1, 2)) * step, floor_r(centroid.y / step + R(1, 2)) * step};
      if (inside(p)) {
        place(v, p);
        return;
      }
    }
    place(v, centroid);
  }

private:
  // Segment v-u must not separate c's other edges: no placed vertex inside the triangle.
  bool crosses_new(VertexId c, const P& pv, const P& pu) const {
    const P& pc = pts_[c];
    int s = geom::orient(pc, pv, pu);
    for (VertexId x = 0; x < static_cast<VertexId>(g_.vertex_count()); ++x) {
      if (!placed_[x] || x == c) continue;
      const P& p = pts_[x];
      if (geom::orient(pc, pv, p) == s && geom::orient(pv, pu, p) == s &&
          geom::orient(pu, pc, p) == s)
        return true;
    }
    return false;
  }

  const PlaneGraph& g_;
  const QConstraints& q_;
  R radius_;
  std::vector<P> pts_;
  std::vector<char> placed_;

public:
  RationalDrawing drawing() const {
    RationalDrawing d;
    d.points = pts_;
    d.bends.resize(g_.edge_count());
    return d;
  }
};

}  // namespace

RationalDrawing three_tree_block_drawing(const PlaneGraph& g, const QConstraints& q,
                                         const ThreeTreeOptions& opts) {
  if (!has_three_tree_blocks(g))
    throw error(errc::block_structure_unsupported, "some block is neither an edge nor a planar 3-tree");
  const auto n = static_cast<VertexId>(g.vertex_count());
  AliveView view{g, std::vector<char>(n, 1)};
  std::vector<Step> steps;
  DartId outer = g.outer_dart();
  std::vector<DartId> outer_walk = view.walk(outer);
  VertexId alive_count = n;

  auto kill = [&](VertexId v) {
    view.alive[v] = 0;
    --alive_count;
  };
  auto refresh_outer = [&] {
    if (view.live(outer)) {
      outer_walk = view.walk(outer);
      return;
    }
    for (DartId d : outer_walk)
      if (view.live(d)) {
        outer = d;
        outer_walk = view.walk(outer);
        return;
      }
    throw std::logic_error("lost the outer face while peeling");
  };
  auto on_outer = [&](VertexId v) {
    for (DartId d : outer_walk)
      if (g.tail(d) == v) return true;
    return false;
  };
  auto is_triangle_face = [&](DartId d) { return view.walk(d).size() == 3; };

  // Peelable interior vertex of the block, or no_id.
  auto interior_candidate = [&](const std::vector<VertexId>& block, VertexId cut,
                                std::array<VertexId, 3>& nb) {
    for (VertexId v : block) {
      if (v == cut || on_outer(v)) continue;
      auto ds = view.darts(v);
      if (ds.size() != 3) continue;
      bool ok = true;
      for (DartId d : ds) ok = ok && is_triangle_face(g.twin(d));
      if (!ok) continue;
      for (int i = 0; i < 3; ++i) nb[i] = g.head(ds[i]);
      if (g.adjacent(nb[0], nb[1]) && g.adjacent(nb[1], nb[2]) && g.adjacent(nb[0], nb[2]))
        return v;
    }
    return no_id;
  };

  while (alive_count > 2) {
    Blocks b = blocks_of(g, view.alive);
    if (b.vertices.size() == 1) {
      const auto& blk = b.vertices[0];
      if (blk.size() == 3) break;  // triangle base case
      std::array<VertexId, 3> nb{};
      VertexId v = interior_candidate(blk, no_id, nb);
      if (v == no_id) throw error(errc::block_structure_unsupported, "no peelable vertex");
      steps.push_back({StepKind::interior, no_id, v, no_id, nb});
      kill(v);
      refresh_outer();
      continue;
    }
    // Outer edges, to avoid peeling the block that holds all of them.
    std::set<EdgeId> outer_edges;
    for (DartId d : outer_walk) outer_edges.insert(g.edge_of(d));
    bool progressed = false;
    for (std::size_t i = 0; i < b.vertices.size() && !progressed; ++i) {
      const auto& blk = b.vertices[i];
      VertexId cut = no_id;
      int cuts = 0;
      for (VertexId v : blk)
        if (b.is_cut[v]) {
          cut = v;
          ++cuts;
        }
      if (cuts != 1) continue;
      std::set<VertexId> inblk(blk.begin(), blk.end());
      bool holds_all = true;
      for (EdgeId e : outer_edges) {
        DartId d = g.dart_of(e);
        if (!inblk.count(g.tail(d)) || !inblk.count(g.head(d))) holds_all = false;
      }
      if (holds_all) continue;
      if (blk.size() == 2) {
        VertexId v = blk[0] == cut ? blk[1] : blk[0];
        steps.push_back({StepKind::leaf2, cut, v, no_id, {}});
        kill(v);
      } else if (blk.size() == 3) {
        VertexId x = blk[0] == cut ? blk[1] : blk[0];
        VertexId y = blk[2] == cut ? blk[1] : blk[2];
        // The triangle must be a face, lying clockwise from v to u at the cut vertex.
        auto bounds_face = [&](VertexId a, VertexId c2) {
          DartId ca = *g.find_dart(cut, a);
          return view.cw(ca) == *g.find_dart(cut, c2) && is_triangle_face(g.twin(ca)) &&
                 std::find(outer_walk.begin(), outer_walk.end(), g.twin(ca)) == outer_walk.end();
        };
        VertexId v = x, u = y;
        if (!bounds_face(v, u)) std::swap(v, u);
        if (!bounds_face(v, u)) continue;
        steps.push_back({StepKind::leaf3, cut, v, u, {}});
        kill(v);
        kill(u);
      } else {
        std::array<VertexId, 3> nb{};
        VertexId v = interior_candidate(blk, cut, nb);
        if (v == no_id) continue;
        steps.push_back({StepKind::interior, no_id, v, no_id, nb});
        kill(v);
      }
      progressed = true;
    }
    if (!progressed) throw error(errc::block_structure_unsupported, "no leaf block can be peeled");
    refresh_outer();
  }

  Placer placer(g, q, opts.radius);
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v)
    if (view.alive[v]) rest.push_back(v);
  if (rest.size() == 1) {
    placer.place(rest[0], {0, 0});
  } else if (rest.size() == 2) {
    Quadrant o = q.at(*g.find_dart(rest[0], rest[1]));
    placer.place(rest[0], {0, 0});
    placer.place(rest[1], {R(x_sign(o)), R(y_sign(o))});
  } else {
    const VertexId c = rest[0];
    VertexId v = rest[1], u = rest[2];
    // The bounded face lies clockwise from v to u at c.
    DartId cv = *g.find_dart(c, v);
    if (view.cw(cv) != *g.find_dart(c, u) ||
        std::find(outer_walk.begin(), outer_walk.end(), g.twin(cv)) != outer_walk.end())
      std::swap(v, u);
    placer.place(c, {0, 0});
    placer.leaf3(c, v, u);
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->kind) {
      case StepKind::leaf2: placer.leaf2(it->c, it->v); break;
      case StepKind::leaf3: placer.leaf3(it->c, it->v, it->u); break;
      case StepKind::interior: placer.interior(it->v, it->tri); break;
    }
  }
  RationalDrawing d = placer.drawing();
  auto rep = verify_drawing(g, q, d);
  if (!rep.ok())
    throw std::logic_error("3-tree drawing failed verification: " +
                           (rep.violations.empty() ? std::string("?") : rep.violations.front().detail));
  return d;
}

}  // namespace windrose
