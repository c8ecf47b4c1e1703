#include "windrose/constraints.hpp"

#include <functional>
#include <queue>

#include "windrose/error.hpp"

namespace windrose {

Quadrant QConstraints::at(DartId d) const {
  if (!has(d)) throw error(errc::missing_dart_label, "dart " + std::to_string(d));
  return *q_[d];
}

void QConstraints::set(DartId d, Quadrant q) {
  if (d < 0) throw std::out_of_range("QConstraints::set");
  if (static_cast<std::size_t>(d) >= q_.size()) q_.resize(d + 1);
  q_[d] = q;
}

void QConstraints::set_pair(const PlaneGraph& g, DartId d, Quadrant q) {
  set(d, q);
  set(g.twin(d), opposite(q));
}

bool cyclic_order_ok(const PlaneGraph& g, const QConstraints& q, VertexId v) {
  if (g.degree(v) == 0) return true;
  int steps = 0;
  for (DartId d : g.rotation(v)) steps += cw_steps(q.at(d), q.at(g.cw_next(d)));
  return steps == 0 || steps == 4;
}

std::vector<QViolation> check_q_consistency(const PlaneGraph& g, const QConstraints& q) {
  std::vector<QViolation> out;
  for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d) {
    Quadrant a = q.at(d);
    Quadrant b = q.at(g.twin(d));
    if (b != opposite(a) && d < g.twin(d))
      out.push_back({QViolationKind::twin_inconsistent, d, no_id,
                     g.name(g.tail(d)) + "->" + g.name(g.head(d)) + " is " +
                         std::string(to_string(a)) + " but reverse is " +
                         std::string(to_string(b))});
  }
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (!cyclic_order_ok(g, q, v))
      out.push_back({QViolationKind::cyclic_order, no_id, v,
                     "clockwise labels around " + g.name(v) +
                         " are not a cyclic subsequence of NW, NE, SE, SW"});
  return out;
}

DirectedView directed_view(const PlaneGraph& g, const QConstraints& q, Axis axis) {
  DirectedView view{axis, {}};
  view.orientation.reserve(g.edge_count());
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    DartId d = g.dart_of(e);
    Quadrant o = q.at(d);
    bool forward = axis == Axis::vertical ? y_sign(o) > 0 : x_sign(o) > 0;
    if (forward)
      view.orientation.emplace_back(g.tail(d), g.head(d));
    else
      view.orientation.emplace_back(g.head(d), g.tail(d));
  }
  return view;
}

std::optional<std::vector<VertexId>> topological_order(const PlaneGraph& g,
                                                       const DirectedView& view) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<std::vector<VertexId>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : view.orientation) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<VertexId>(order.size()) != n) return std::nullopt;
  return order;
}

bool is_bi_acyclic(const PlaneGraph& g, const QConstraints& q) {
  return topological_order(g, directed_view(g, q, Axis::vertical)).has_value() &&
         topological_order(g, directed_view(g, q, Axis::horizontal)).has_value();
}

bool is_ambiguous(const PlaneGraph& g, const QConstraints& q, VertexId v) {
  if (g.degree(v) < 2) return false;
  DartId f = g.first_dart(v);
  for (DartId d = g.cw_next(f); d != f; d = g.cw_next(d))
    if (q.at(d) != q.at(f)) return false;
  return true;
}

std::vector<DartId> quadrant_run(const PlaneGraph& g, const QConstraints& q, VertexId v,
                                 Quadrant quad) {
  std::vector<DartId> run;
  if (g.degree(v) == 0) return run;
  auto rot = g.rotation(v);
  // Start right after a dart of another quadrant so the run is contiguous.
  std::size_t start = 0;
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (q.at(rot[i]) != quad) {
      start = (i + 1) % rot.size();
      break;
    }
  for (std::size_t k = 0; k < rot.size(); ++k) {
    DartId d = rot[(start + k) % rot.size()];
    if (q.at(d) == quad) run.push_back(d);
  }
  return run;
}

std::optional<VertexId> extreme_neighbor(const PlaneGraph& g, const QConstraints& q, VertexId v,
                                         Quadrant quad, Side side) {
  auto run = quadrant_run(g, q, v, quad);
  if (run.empty()) return std::nullopt;
  return g.head(side == Side::leftmost ? run.front() : run.back());
}

}  // namespace windrose
