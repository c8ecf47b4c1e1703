#include "windrose/plane_graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "windrose/error.hpp"

namespace windrose {

PlaneGraph PlaneGraph::build(std::vector<std::string> names,
                             const std::vector<std::vector<VertexId>>& rotations,
                             VertexId witness_tail, VertexId witness_head) {
  const auto n = static_cast<VertexId>(names.size());
  if (rotations.size() != names.size())
    throw error(errc::inconsistent_rotation, "rotation count differs from vertex count");

  auto label = [&](VertexId v) { return names[v]; };

  for (VertexId u = 0; u < n; ++u) {
    std::unordered_set<VertexId> seen;
    for (VertexId v : rotations[u]) {
      if (v < 0 || v >= n)
        throw error(errc::inconsistent_rotation, "unknown neighbour of " + label(u));
      if (v == u) throw error(errc::self_loop, "at " + label(u));
      if (!seen.insert(v).second) {
        const auto& back = rotations[v];
        if (std::count(back.begin(), back.end(), u) > 1)
          throw error(errc::parallel_edge, label(u) + " - " + label(v));
        throw error(errc::inconsistent_rotation,
                    label(v) + " listed twice around " + label(u));
      }
    }
  }
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : rotations[u]) {
      const auto& back = rotations[v];
      if (std::find(back.begin(), back.end(), u) == back.end())
        throw error(errc::inconsistent_rotation,
                    label(v) + " is missing neighbour " + label(u));
    }

  PlaneGraph g;
  g.names_ = std::move(names);
  g.first_.assign(n, no_id);
  g.degree_.assign(n, 0);

  // Create all darts first, then wire the cyclic lists.
  std::vector<std::vector<DartId>> out(n);
  for (VertexId u = 0; u < n; ++u) out[u].assign(rotations[u].size(), no_id);
  for (VertexId u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < rotations[u].size(); ++i) {
      VertexId v = rotations[u][i];
      if (u > v) continue;
      auto j = static_cast<std::size_t>(
          std::find(rotations[v].begin(), rotations[v].end(), u) - rotations[v].begin());
      DartId d = static_cast<DartId>(g.tail_.size());
      EdgeId e = static_cast<EdgeId>(g.edge_dart_.size());
      g.tail_.push_back(u);
      g.tail_.push_back(v);
      g.twin_.push_back(d + 1);
      g.twin_.push_back(d);
      g.edge_.push_back(e);
      g.edge_.push_back(e);
      g.edge_dart_.push_back(d);
      g.edge_index_.emplace(key(u, v), d);
      out[u][i] = d;
      out[v][j] = d + 1;
    }
  }
  g.cw_.assign(g.tail_.size(), no_id);
  g.ccw_.assign(g.tail_.size(), no_id);
  for (VertexId u = 0; u < n; ++u) {
    const auto& ds = out[u];
    const auto k = ds.size();
    g.degree_[u] = static_cast<int>(k);
    if (k == 0) continue;
    g.first_[u] = ds[0];
    for (std::size_t i = 0; i < k; ++i) {
      g.cw_[ds[i]] = ds[(i + 1) % k];
      g.ccw_[ds[(i + 1) % k]] = ds[i];
    }
  }

  if (n == 0) throw error(errc::not_connected, "empty graph");
  {
    std::vector<char> seen(n, 0);
    std::queue<VertexId> bfs;
    bfs.push(0);
    seen[0] = 1;
    VertexId reached = 1;
    while (!bfs.empty()) {
      VertexId u = bfs.front();
      bfs.pop();
      for (VertexId v : rotations[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          bfs.push(v);
        }
    }
    if (reached != n) throw error(errc::not_connected, "graph has more than one component");
  }

  if (g.tail_.empty()) {  // a single vertex has no darts and one face
    g.validate();
    return g;
  }
  if (witness_tail < 0 || witness_tail >= n || witness_head < 0 || witness_head >= n)
    throw error(errc::bad_witness, "witness endpoints are not vertices");
  auto w = g.find_dart(witness_tail, witness_head);
  if (!w) throw error(errc::bad_witness, "no dart " + g.name(witness_tail) + "->" + g.name(witness_head));
  g.outer_ = *w;
  g.validate();
  return g;
}

std::optional<VertexId> PlaneGraph::find_vertex(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

std::vector<DartId> PlaneGraph::rotation(VertexId v) const {
  std::vector<DartId> r;
  DartId start = first_[v];
  if (start == no_id) return r;
  r.reserve(degree_[v]);
  DartId d = start;
  do {
    r.push_back(d);
    d = cw_[d];
  } while (d != start);
  return r;
}

std::optional<DartId> PlaneGraph::find_dart(VertexId u, VertexId v) const {
  auto it = edge_index_.find(key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  DartId d = it->second;
  return tail_[d] == u ? d : twin_[d];
}

void PlaneGraph::set_outer_dart(DartId d) {
  if (d < 0 || static_cast<std::size_t>(d) >= tail_.size())
    throw error(errc::bad_witness, "outer dart out of range");
  outer_ = d;
}

std::vector<DartId> PlaneGraph::face_walk(DartId d) const {
  std::vector<DartId> walk;
  DartId x = d;
  do {
    walk.push_back(x);
    x = face_next(x);
  } while (x != d);
  return walk;
}

VertexId PlaneGraph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  first_.push_back(no_id);
  degree_.push_back(0);
  return static_cast<VertexId>(first_.size() - 1);
}

void PlaneGraph::attach(DartId d, VertexId v, DartId after) {
  tail_[d] = v;
  if (after == no_id) {
    if (first_[v] != no_id) throw std::logic_error("attach: vertex is not isolated");
    first_[v] = d;
    cw_[d] = ccw_[d] = d;
  } else {
    if (tail_[after] != v) throw std::logic_error("attach: anchor dart not at vertex");
    DartId nxt = cw_[after];
    cw_[after] = d;
    ccw_[d] = after;
    cw_[d] = nxt;
    ccw_[nxt] = d;
  }
  ++degree_[v];
}

DartId PlaneGraph::insert_edge(VertexId u, DartId after_u, VertexId v, DartId after_v) {
  if (u == v) throw error(errc::self_loop, "insert_edge at " + names_[u]);
  if (edge_index_.count(key(u, v)))
    throw error(errc::parallel_edge_would_be_created, names_[u] + " - " + names_[v]);
  DartId d = static_cast<DartId>(tail_.size());
  EdgeId e = static_cast<EdgeId>(edge_dart_.size());
  tail_.resize(tail_.size() + 2);
  cw_.resize(tail_.size());
  ccw_.resize(tail_.size());
  twin_.push_back(d + 1);
  twin_.push_back(d);
  edge_.push_back(e);
  edge_.push_back(e);
  edge_dart_.push_back(d);
  attach(d, u, after_u);
  attach(d + 1, v, after_v);
  edge_index_.emplace(key(u, v), u < v ? d : d + 1);
  return d;
}

PlaneGraph::Subdivision PlaneGraph::subdivide(DartId d, std::string name) {
  const VertexId a = tail_[d];
  const DartId dt = twin_[d];
  const VertexId b = tail_[dt];
  const EdgeId old_edge = edge_[d];
  VertexId z = add_vertex(std::move(name));

  // New darts: m1 = z->a (twin of d), m2 = z->b (twin of dt).
  DartId m1 = static_cast<DartId>(tail_.size());
  DartId m2 = m1 + 1;
  tail_.resize(tail_.size() + 2);
  cw_.resize(tail_.size());
  ccw_.resize(tail_.size());
  twin_.resize(tail_.size());
  edge_.resize(tail_.size());
  twin_[d] = m1;
  twin_[m1] = d;
  twin_[dt] = m2;
  twin_[m2] = dt;
  EdgeId new_edge = static_cast<EdgeId>(edge_dart_.size());
  edge_[m1] = old_edge;
  edge_[dt] = new_edge;
  edge_[m2] = new_edge;
  edge_dart_[old_edge] = d;
  edge_dart_.push_back(m2);

  attach(m1, z, no_id);
  attach(m2, z, m1);

  edge_index_.erase(key(a, b));
  edge_index_.emplace(key(a, z), a < z ? d : m1);
  edge_index_.emplace(key(z, b), z < b ? m2 : dt);
  return {z, m1, m2};
}

void PlaneGraph::validate() const {
  const auto n = static_cast<VertexId>(first_.size());
  const auto m = static_cast<DartId>(tail_.size());
  for (DartId d = 0; d < m; ++d) {
    if (twin_[twin_[d]] != d || twin_[d] == d)
      throw error(errc::inconsistent_rotation, "twin(twin(d)) != d");
    if (edge_[d] != edge_[twin_[d]]) throw error(errc::inconsistent_rotation, "edge ids of twins differ");
    if (ccw_[cw_[d]] != d) throw error(errc::inconsistent_rotation, "cw/ccw lists disagree");
    if (tail_[cw_[d]] != tail_[d]) throw error(errc::inconsistent_rotation, "rotation leaves vertex");
    if (tail_[d] == tail_[twin_[d]]) throw error(errc::self_loop, "at " + names_[tail_[d]]);
  }
  std::unordered_set<std::uint64_t> keys;
  for (EdgeId e = 0; e < static_cast<EdgeId>(edge_dart_.size()); ++e) {
    DartId d = edge_dart_[e];
    if (!keys.insert(key(tail_[d], head(d))).second)
      throw error(errc::parallel_edge, names_[tail_[d]] + " - " + names_[head(d)]);
  }
  std::vector<int> deg(n, 0);
  for (DartId d = 0; d < m; ++d) ++deg[tail_[d]];
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] != degree_[v]) throw error(errc::inconsistent_rotation, "degree mismatch at " + names_[v]);
    if (deg[v] > 0 && static_cast<int>(rotation(v).size()) != deg[v])
      throw error(errc::inconsistent_rotation, "rotation at " + names_[v] + " is not one cycle");
  }
  // Connectivity over darts.
  if (n > 0) {
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    VertexId reached = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      if (first_[u] == no_id) continue;
      DartId d = first_[u];
      do {
        VertexId v = head(d);
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
        d = cw_[d];
      } while (d != first_[u]);
    }
    if (reached != n) throw error(errc::not_connected, "graph has more than one component");
  }
  std::size_t faces = 0;
  std::vector<char> seen(m, 0);
  for (DartId d = 0; d < m; ++d) {
    if (seen[d]) continue;
    ++faces;
    DartId x = d;
    do {
      seen[x] = 1;
      x = face_next(x);
    } while (x != d);
  }
  if (m == 0) faces = 1;
  const long euler = static_cast<long>(n) - static_cast<long>(edge_dart_.size()) +
                     static_cast<long>(faces);
  if (euler != 2) throw error(errc::inconsistent_rotation, "Euler's formula fails: embedding is not planar");
  if (m > 0 && (outer_ < 0 || outer_ >= m)) throw error(errc::bad_witness, "outer dart unset");
}

FaceIndex extract_faces(const PlaneGraph& g) {
  FaceIndex fi;
  const auto m = static_cast<DartId>(g.dart_count());
  fi.face_of_dart.assign(m, no_id);
  for (DartId d = 0; d < m; ++d) {
    if (fi.face_of_dart[d] != no_id) continue;
    const auto f = static_cast<FaceId>(fi.walks.size());
    fi.walks.emplace_back();
    DartId x = d;
    do {
      fi.face_of_dart[x] = f;
      fi.walks.back().push_back(x);
      x = g.face_next(x);
    } while (x != d);
  }
  if (g.outer_dart() != no_id) fi.outer = fi.face_of_dart[g.outer_dart()];
  return fi;
}

std::vector<std::vector<VertexId>> facial_vertex_walks(const PlaneGraph& g) {
  auto fi = extract_faces(g);
  std::vector<std::vector<VertexId>> out;
  out.reserve(fi.walks.size());
  for (const auto& w : fi.walks) {
    out.emplace_back();
    for (DartId d : w) out.back().push_back(g.tail(d));
  }
  return out;
}

}  // namespace windrose
