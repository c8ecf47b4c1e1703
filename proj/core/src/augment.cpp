#include "windrose/augment.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <string>

#include "windrose/error.hpp"

namespace windrose {

SubdivisionMap SubdivisionMap::identity(const PlaneGraph& g) {
  SubdivisionMap m;
  m.replacement.reserve(g.edge_count());
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    DartId d = g.dart_of(e);
    m.replacement.push_back({g.tail(d), g.head(d)});
  }
  return m;
}

std::size_t SubdivisionMap::subdivided_count() const {
  return static_cast<std::size_t>(std::count_if(replacement.begin(), replacement.end(),
                                                [](const auto& p) { return p.size() > 2; }));
}

std::vector<char> outer_dart_flags(const PlaneGraph& g) {
  std::vector<char> flags(g.dart_count(), 0);
  if (g.outer_dart() == no_id) return flags;
  for (DartId d : g.face_walk(g.outer_dart())) flags[d] = 1;
  return flags;
}

namespace {

std::string fresh_name(const PlaneGraph& g, const std::string& base) {
  std::string name = base + std::to_string(g.vertex_count());
  while (g.find_vertex(name)) name += "'";
  return name;
}

bool is_small(AngleCategory c) { return c == AngleCategory::deg0 || c == AngleCategory::deg90; }

class EarCutter {
public:
  EarCutter(PlaneGraph& g, AngleLabeling& a, const SurgeryObserver& obs, std::size_t& cuts)
      : g_(g), a_(a), obs_(obs), cuts_(cuts) {}

  void run(const std::vector<DartId>& corners) {
    std::deque<DartId> pending(corners.begin(), corners.end());
    stack_.clear();
    std::size_t idle = 0;
    while (size_left(pending) > 3) {
      if (reduce(pending)) {
        idle = 0;
        continue;
      }
      if (!pending.empty()) {
        stack_.push_back(pending.front());
        pending.pop_front();
        continue;
      }
      // Scan exhausted: rotate the cyclic sequence and look again.
      if (++idle > stack_.size() + 1)
        throw error(errc::not_angular, "no ear pattern in a face of length " +
                                           std::to_string(stack_.size()));
      stack_.push_back(stack_.front());
      stack_.pop_front();
    }
  }

private:
  std::size_t size_left(const std::deque<DartId>& pending) const {
    return stack_.size() + pending.size();
  }

  AngleCategory at(DartId c) const { return a_[c]; }

  // Inserts the diagonal between corners ci and cj, splitting their angles:
  // A(ci) = xi, A(n) = yi, A(cj) = xj, A(twin n) = yj. Returns n.
  DartId cut(DartId ci, int xi, int yi, DartId cj, int xj, int yj) {
    VertexId u = g_.tail(ci), v = g_.tail(cj);
    DartId n = g_.insert_edge(u, ci, v, cj);
    a_.resize(g_.dart_count());
    a_[ci] = category_from_degrees(xi);
    a_[n] = category_from_degrees(yi);
    a_[cj] = category_from_degrees(xj);
    a_[g_.twin(n)] = category_from_degrees(yj);
    ++cuts_;
    if (obs_) obs_(SurgeryStep::ear_cut, g_, a_);
    return n;
  }

  bool reduce(const std::deque<DartId>& pending) {
    const std::size_t len = size_left(pending);
    const std::size_t k = stack_.size();
    if (k >= 3) {
      DartId c2 = stack_[k - 3], c3 = stack_[k - 2], c4 = stack_[k - 1];
      int a2 = degrees(at(c2)), a3 = degrees(at(c3));
      if (a2 >= 270 && is_small(at(c3))) {
        if (g_.adjacent(g_.tail(c2), g_.tail(c4)))
          throw error(errc::parallel_edge_would_be_created,
                      g_.name(g_.tail(c2)) + " - " + g_.name(g_.tail(c4)));
        int y2 = 180 - a3;
        DartId n = cut(c2, a2 - y2, y2, c4, 0, degrees(at(c4)));
        stack_.resize(k - 3);
        stack_.push_back(c2);
        stack_.push_back(g_.twin(n));
        return true;
      }
    }
    if (k >= 4) {
      DartId c1 = stack_[k - 4], c2 = stack_[k - 3], c3 = stack_[k - 2], c4 = stack_[k - 1];
      bool row = at(c2) == AngleCategory::deg180 && is_small(at(c3));
      bool square = len == 4 && at(c1) == AngleCategory::deg90 &&
                    at(c2) == AngleCategory::deg90 && at(c3) == AngleCategory::deg90 &&
                    at(c4) == AngleCategory::deg90;
      if (row || square) {
        int a1 = degrees(at(c1)), a2 = degrees(at(c2)), a3 = degrees(at(c3));
        int a4 = degrees(at(c4));
        stack_.resize(k - 4);
        if (!g_.adjacent(g_.tail(c1), g_.tail(c3))) {
          int x3 = 180 - a2;
          DartId n = cut(c1, a1, 0, c3, x3, a3 - x3);
          stack_.push_back(c1);
          stack_.push_back(g_.twin(n));
          stack_.push_back(c4);
          return true;
        }
        if (g_.adjacent(g_.tail(c2), g_.tail(c4)))
          throw error(errc::parallel_edge_would_be_created,
                      "both diagonals of a quadrilateral ear exist");
        int y2 = 180 - a3;
        DartId n = cut(c2, a2 - y2, y2, c4, 0, a4);
        stack_.push_back(c1);
        stack_.push_back(c2);
        stack_.push_back(g_.twin(n));
        return true;
      }
    }
    return false;
  }

  PlaneGraph& g_;
  AngleLabeling& a_;
  const SurgeryObserver& obs_;
  std::size_t& cuts_;
  std::deque<DartId> stack_;
};

}  // namespace

Triangulation triangulate_preserving_labeling(const PlaneGraph& g0, const AngleLabeling& a0,
                                              const SurgeryObserver& observer) {
  if (!check_angular(g0, a0).empty())
    throw error(errc::not_angular, "triangulation needs an angular labeling");
  Triangulation t{g0, a0, false, 0};
  PlaneGraph& g = t.graph;
  AngleLabeling& a = t.labeling;

  FaceIndex fi = extract_faces(g);
  const auto& outer_walk = fi.walks[fi.outer];
  bool wrap = outer_walk.size() != 3;
  if (!wrap) {
    // A 180 degree angle inside the outer triangle would survive ear cutting
    // at an external vertex; move it inside a fresh triangle instead.
    for (DartId d : outer_walk)
      for (DartId e : g.rotation(g.tail(d)))
        if (fi.face_of_dart[g.twin(e)] != fi.outer && a[e] == AngleCategory::deg180) wrap = true;
  }

  if (wrap) {
    const DartId e = g.twin(outer_walk.back());  // outer angle at tail(outer_walk[0])
    const VertexId v = g.tail(e);
    VertexId ta = g.add_vertex(fresh_name(g, "_a"));
    VertexId tb = g.add_vertex(fresh_name(g, "_b"));
    VertexId tc = g.add_vertex(fresh_name(g, "_c"));
    DartId ab = g.insert_edge(ta, no_id, tb, no_id);
    DartId bc = g.insert_edge(tb, g.twin(ab), tc, no_id);
    DartId ca = g.insert_edge(tc, g.twin(bc), ta, ab);
    DartId va = g.insert_edge(v, e, ta, ab);
    a.resize(g.dart_count());
    a[ab] = AngleCategory::deg0;             // ab -> av
    a[g.twin(va)] = AngleCategory::deg0;     // av -> ac
    a[g.twin(ca)] = AngleCategory::deg360;   // ac -> ab
    a[bc] = AngleCategory::deg90;            // bc -> ba
    a[g.twin(ab)] = AngleCategory::deg270;   // ba -> bc
    a[ca] = AngleCategory::deg90;            // ca -> cb
    a[g.twin(bc)] = AngleCategory::deg270;   // cb -> ca
    a[va] = a[e];
    a[e] = AngleCategory::deg0;
    g.set_outer_dart(ab);
    t.wrapped = true;
    if (observer) observer(SurgeryStep::wrap, g, a);
    fi = extract_faces(g);
  }

  EarCutter cutter(g, a, observer, t.ear_cuts);
  for (FaceId f = 0; f < static_cast<FaceId>(fi.walks.size()); ++f) {
    if (f == fi.outer || fi.walks[f].size() <= 3) continue;
    cutter.run(face_angles(g, fi.walks[f]));
  }

  g.validate();
  FaceIndex done = extract_faces(g);
  for (const auto& w : done.walks)
    if (w.size() != 3) throw std::logic_error("triangulation left a non-triangular face");
  if (!check_angular(g, done, a).empty())
    throw std::logic_error("triangulation broke the angular labeling");
  return t;
}

std::vector<VertexId> directional_path(const PlaneGraph& g, const QConstraints& q, VertexId v,
                                       Direction dir) {
  std::vector<char> external(g.vertex_count(), 0);
  for (DartId d : g.face_walk(g.outer_dart())) external[g.tail(d)] = 1;

  struct Rule {
    Quadrant first;
    Side first_side;
    Quadrant second;
    Side second_side;
  };
  Rule rule{};
  switch (dir) {
    case Direction::up: rule = {Quadrant::nw, Side::rightmost, Quadrant::ne, Side::leftmost}; break;
    case Direction::right: rule = {Quadrant::se, Side::leftmost, Quadrant::ne, Side::rightmost}; break;
    case Direction::down: rule = {Quadrant::se, Side::rightmost, Quadrant::sw, Side::leftmost}; break;
    case Direction::left: rule = {Quadrant::nw, Side::leftmost, Quadrant::sw, Side::rightmost}; break;
  }

  std::vector<VertexId> path{v};
  while (!external[path.back()]) {
    VertexId x = path.back();
    auto next = extreme_neighbor(g, q, x, rule.first, rule.first_side);
    if (!next) next = extreme_neighbor(g, q, x, rule.second, rule.second_side);
    if (!next) throw error(errc::stuck_at_internal_vertex, "at " + g.name(x));
    if (path.size() > g.vertex_count())
      throw error(errc::stuck_at_internal_vertex, "directional path revisits a vertex");
    path.push_back(*next);
  }
  return path;
}

namespace {

class Eliminator {
public:
  Eliminator(const PlaneGraph& g, const QConstraints& q, const SurgeryObserver& obs,
             std::size_t original_edges)
      : g_(g), q_(q), obs_(obs) {
    outer_ = outer_dart_flags(g_);
    protected_.assign(g_.edge_count(), 0);
    map_.replacement.reserve(original_edges);
    for (EdgeId e = 0; e < static_cast<EdgeId>(original_edges); ++e) {
      DartId d = g_.dart_of(e);
      map_.replacement.push_back({g_.tail(d), g_.head(d)});
    }
  }

  // First dart of the internal 180 angle at v that skips quadrant s.
  DartId witness(VertexId v, Quadrant s) const {
    if (g_.degree(v) < 2) return no_id;
    DartId f = g_.first_dart(v), e = f;
    do {
      DartId e2 = g_.cw_next(e);
      if (!outer_[g_.twin(e)] && cw_steps(q_[e], q_[e2]) == 2 && rotate_cw(q_[e], 1) == s)
        return e;
      e = e2;
    } while (e != f);
    return no_id;
  }

  std::size_t count_internal_180() const {
    std::size_t c = 0;
    for (DartId e = 0; e < static_cast<DartId>(g_.dart_count()); ++e)
      if (!outer_[g_.twin(e)] && g_.cw_next(e) != e && cw_steps(q_[e], q_[g_.cw_next(e)]) == 2)
        ++c;
    return c;
  }

  void run() {
    const std::size_t initial = count_internal_180();
    for (Quadrant s : {Quadrant::ne, Quadrant::nw, Quadrant::sw, Quadrant::se}) {
      // The witness set only changes at the vertex being fixed, so one
      // ascending sweep with recursive descent drains it.
      const auto n0 = static_cast<VertexId>(g_.vertex_count());
      for (VertexId v0 = 0; v0 < n0; ++v0) {
        while (witness(v0, s) != no_id) {
          VertexId v = v0;
          std::size_t depth = 0;
          for (;;) {
            DartId e = witness(v, s);
            VertexId u = g_.head(e), w = g_.head(g_.cw_next(e));
            VertexId next = no_id;
            if (witness(u, s) != no_id)
              next = u;
            else if (witness(w, s) != no_id)
              next = w;
            if (next == no_id) {
              apply(e, s);
              break;
            }
            if (++depth > g_.vertex_count())
              throw error(errc::not_angular, "180 degree witnesses form a cycle");
            ++stats_.descents;
            v = next;
          }
        }
      }
    }
    if (count_internal_180() != 0)
      throw error(errc::not_angular, "internal 180 degree angles remain after elimination");
    if (stats_.applications > initial)
      throw std::logic_error("elimination applied more steps than there were 180 degree angles");
  }

  Elimination result() && {
    g_.validate();
    return {std::move(g_), std::move(q_), std::move(map_), stats_};
  }

private:
  void apply(DartId e, Quadrant s) {
    const VertexId v = g_.tail(e);
    const DartId e2 = g_.cw_next(e);
    const VertexId u = g_.head(e);
    const DartId dwu = g_.face_next(e2);
    if (g_.head(dwu) != u || g_.face_next(dwu) != g_.twin(e))
      throw error(errc::not_triangulated, "face at " + g_.name(v) + " is not a triangle");
    const DartId duw = g_.twin(dwu);
    const EdgeId uw = g_.edge_of(dwu);
    if (protected_[uw]) throw std::logic_error("subdivision edge selected again");
    const bool external = outer_[duw] != 0;
    const VertexId r = external ? no_id : g_.head(g_.face_next(duw));

    auto sub = g_.subdivide(dwu, fresh_name(g_, "_z"));
    const VertexId z = sub.z;
    const DartId m1 = sub.z_to_tail;  // z -> w
    const DartId m2 = sub.z_to_head;  // z -> u
    q_.set(m1, opposite(q_[dwu]));
    q_.set(m2, opposite(q_[duw]));
    if (q_[m2] != rotate_cw(s, -1) || q_[m1] != rotate_cw(s, 1))
      throw error(errc::not_angular, "subdivided edge has unexpected quadrants");
    outer_.resize(g_.dart_count(), 0);
    outer_[m2] = outer_[dwu];
    outer_[m1] = outer_[duw];
    protected_.resize(g_.edge_count(), 0);
    protected_[uw] = 1;
    protected_[g_.edge_of(m2)] = 1;
    map_.dummy_vertices.push_back(z);
    if (uw < static_cast<EdgeId>(map_.replacement.size())) {
      auto& path = map_.replacement[uw];
      if (path.size() != 2) throw std::logic_error("original edge subdivided twice");
      path = {path.front(), z, path.back()};
    }

    DartId vz = g_.insert_edge(v, e, z, m1);
    q_.set_pair(g_, vz, s);
    map_.dummy_edges.push_back(g_.edge_of(vz));
    if (!external) {
      const DartId dwr = g_.face_next(m1);
      DartId zr = g_.insert_edge(z, m2, r, g_.twin(dwr));
      q_.set_pair(g_, zr, s);
      map_.dummy_edges.push_back(g_.edge_of(zr));
      ++stats_.internal_cases;
    } else {
      ++stats_.external_cases;
    }
    outer_.resize(g_.dart_count(), 0);
    protected_.resize(g_.edge_count(), 0);
    protected_[g_.edge_of(vz)] = 1;
    ++stats_.applications;
    if (obs_) obs_(SurgeryStep::subdivision, g_, labeling_from_internally_triangulated(g_, q_));
  }

  PlaneGraph g_;
  QConstraints q_;
  const SurgeryObserver& obs_;
  std::vector<char> outer_;
  std::vector<char> protected_;
  SubdivisionMap map_;
  EliminationStats stats_;
};

}  // namespace

Elimination eliminate_180_angles(const PlaneGraph& g, const QConstraints& q,
                                 const SurgeryObserver& observer,
                                 std::optional<std::size_t> original_edges) {
  {
    const FaceIndex fi = extract_faces(g);
    for (FaceId f = 0; f < static_cast<FaceId>(fi.walks.size()); ++f)
      if (f != fi.outer && fi.walks[f].size() != 3)
        throw error(errc::not_triangulated, "bounded face of length " +
                                                std::to_string(fi.walks[f].size()));
    if (!check_angular(g, fi, labeling_from_internally_triangulated(g, q)).empty())
      throw error(errc::not_angular, "input labeling is not angular");
  }
  Eliminator el(g, q, observer, original_edges.value_or(g.edge_count()));
  el.run();
  return std::move(el).result();
}

namespace {

VertexId pole_for(const PoleSet& p, Quadrant s) {
  switch (s) {
    case Quadrant::ne: return p.east;
    case Quadrant::nw: return p.north;
    case Quadrant::sw: return p.west;
    case Quadrant::se: return p.south;
  }
  return no_id;
}

}  // namespace

PoledGraph add_poles(const PlaneGraph& g0, const QConstraints& q0,
                     const SurgeryObserver& observer) {
  PoledGraph out{g0, q0, {}};
  PlaneGraph& g = out.graph;
  QConstraints& q = out.q;
  const AngleLabeling before = labeling_from_internally_triangulated(g0, q0);

  const auto walk = g.face_walk(g.outer_dart());
  {
    std::vector<char> seen(g.vertex_count(), 0);
    for (DartId d : walk)
      if (seen[g.tail(d)]++) throw error(errc::not_angular, "outer face is not a simple cycle");
  }

  PoleSet& p = out.poles;
  p.north = g.add_vertex(fresh_name(g, "_N"));
  p.west = g.add_vertex(fresh_name(g, "_W"));
  p.south = g.add_vertex(fresh_name(g, "_S"));
  p.east = g.add_vertex(fresh_name(g, "_E"));

  std::array<DartId, 4> last_attach{no_id, no_id, no_id, no_id};  // by quadrant index
  struct Transition {
    DartId to_a, to_b;  // consecutive pole darts at an outer vertex, clockwise
  };
  std::vector<Transition> ring;

  for (std::size_t i = 0; i < walk.size(); ++i) {
    const DartId din = walk[(i + walk.size() - 1) % walk.size()];
    const DartId first = g.twin(din);
    const DartId second = walk[i];
    const VertexId x = g.tail(second);
    int steps = cw_steps(q[first], q[second]);
    if (steps == 0) {
      if (before.deg(first) == 360)
        steps = 4;
      else
        throw error(errc::not_angular, "outer angle of 0 degrees at " + g.name(x));
    }
    if (steps < 2) throw error(errc::not_angular, "outer angle below 180 degrees at " + g.name(x));
    DartId prev = first;
    DartId prev_pole_dart = no_id;
    for (int k = 1; k < steps; ++k) {
      const Quadrant s = rotate_cw(q[first], k);
      const VertexId pole = pole_for(p, s);
      DartId& last = last_attach[index(s)];
      DartId after_pole = last == no_id ? no_id : g.ccw_next(last);
      DartId xp = g.insert_edge(x, prev, pole, after_pole);
      q.set_pair(g, xp, s);
      last = g.twin(xp);
      if (prev_pole_dart != no_id) ring.push_back({prev_pole_dart, xp});
      prev_pole_dart = xp;
      prev = xp;
    }
  }
  if (ring.size() != 4) throw error(errc::not_angular, "pole ring has " + std::to_string(ring.size()) + " transitions");

  DartId outer = no_id;
  for (const auto& t : ring) {
    const VertexId pa = g.head(t.to_a), pb = g.head(t.to_b);
    DartId ba = g.insert_edge(pb, g.twin(t.to_b), pa, g.ccw_next(g.twin(t.to_a)));
    Quadrant ring_q;  // quadrant of pa as seen from pb
    if (pb == p.east && pa == p.north) ring_q = Quadrant::nw;
    else if (pb == p.south && pa == p.east) ring_q = Quadrant::ne;
    else if (pb == p.west && pa == p.south) ring_q = Quadrant::se;
    else if (pb == p.north && pa == p.west) ring_q = Quadrant::sw;
    else throw std::logic_error("unexpected pole pair");
    q.set_pair(g, ba, ring_q);
    if (pa == p.north) outer = g.twin(ba);  // dart N -> E
  }
  g.set_outer_dart(outer);
  g.validate();
  if (g.face_walk(outer).size() != 4) throw std::logic_error("pole ring is not the outer face");
  if (observer) observer(SurgeryStep::poles, g, labeling_from_internally_triangulated(g, q));
  return out;
}

}  // namespace windrose
