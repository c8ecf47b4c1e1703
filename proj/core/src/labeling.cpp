#include "windrose/labeling.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>
#include <deque>
#include <stdexcept>

#include "windrose/error.hpp"

namespace windrose {

AngleCategory category_from_degrees(int deg) {
  if (deg < 0 || deg > 360 || deg % 90 != 0)
    throw std::invalid_argument("not an angle category: " + std::to_string(deg));
  return static_cast<AngleCategory>(deg);
}

Angle angle_of(const PlaneGraph& g, const FaceIndex& faces, DartId first_dart) {
  return {g.tail(first_dart), first_dart, g.cw_next(first_dart),
          faces.face_of_dart[g.twin(first_dart)]};
}

std::vector<DartId> face_angles(const PlaneGraph& g, const std::vector<DartId>& walk) {
  std::vector<DartId> out(walk.size());
  for (std::size_t i = 0; i < walk.size(); ++i)
    out[i] = g.twin(walk[(i + walk.size() - 1) % walk.size()]);
  return out;
}

std::optional<AngleCategory> angle_category_between(const PlaneGraph& g, const QConstraints& q,
                                                    DartId first_dart) {
  DartId second = g.cw_next(first_dart);
  if (second == first_dart) return AngleCategory::deg360;
  int steps = cw_steps(q.at(first_dart), q.at(second));
  if (steps == 0) return std::nullopt;
  return static_cast<AngleCategory>(90 * steps);
}

int cycle_target(const FaceIndex& faces, FaceId f) {
  const int k = static_cast<int>(faces.walks[f].size());
  return f == faces.outer ? k * 180 + 360 : k * 180 - 360;
}

std::vector<AngularViolation> check_angular(const PlaneGraph& g, const AngleLabeling& a) {
  return check_angular(g, extract_faces(g), a);
}

std::vector<AngularViolation> check_angular(const PlaneGraph& g, const FaceIndex& faces,
                                            const AngleLabeling& a) {
  std::vector<AngularViolation> out;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    if (g.degree(v) == 0) continue;
    int sum = 0;
    for (DartId d : g.rotation(v)) sum += a.deg(d);
    if (sum != 360) out.push_back({AngularViolationKind::vertex_condition, v, no_id, sum, 360});
  }
  for (FaceId f = 0; f < static_cast<FaceId>(faces.walks.size()); ++f) {
    int sum = 0;
    for (DartId e : face_angles(g, faces.walks[f])) sum += a.deg(e);
    int target = cycle_target(faces, f);
    if (sum != target)
      out.push_back({AngularViolationKind::cycle_condition, no_id, f, sum, target});
  }
  return out;
}

std::string_view to_string(CertificateKind k) noexcept {
  switch (k) {
    case CertificateKind::rotation_order: return "rotation_order";
    case CertificateKind::negative_demand: return "negative_demand";
    case CertificateKind::fractional_demand: return "fractional_demand";
    case CertificateKind::infeasible_flow: return "infeasible_flow";
    case CertificateKind::internal_ambiguous_vertex: return "internal_ambiguous_vertex";
    case CertificateKind::not_angular: return "not_angular";
  }
  return "unknown";
}

std::string_view Certificate::reason() const noexcept {
  return kind == CertificateKind::rotation_order ? "rotation order" : "infeasible assignment";
}

namespace {

// Categories fixed by q: ambiguous angles read as 0, degree-1 angles as 360.
AngleLabeling determined_labeling(const PlaneGraph& g, const QConstraints& q) {
  AngleLabeling a(g.dart_count());
  for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d)
    a[d] = angle_category_between(g, q, d).value_or(AngleCategory::deg0);
  return a;
}

std::optional<Certificate> rotation_order_certificate(const PlaneGraph& g, const QConstraints& q) {
  std::vector<VertexId> bad;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (!cyclic_order_ok(g, q, v)) bad.push_back(v);
  if (bad.empty()) return std::nullopt;
  std::string detail = "vertex condition fails at";
  for (VertexId v : bad) detail += " " + g.name(v);
  return Certificate{CertificateKind::rotation_order, detail, bad, {}};
}

}  // namespace

DemandResult face_demands(const PlaneGraph& g, const QConstraints& q) {
  const FaceIndex faces = extract_faces(g);
  const AngleLabeling a = determined_labeling(g, q);
  FaceDemand fd;
  fd.demand.assign(faces.walks.size(), 0);
  for (FaceId f = 0; f < static_cast<FaceId>(faces.walks.size()); ++f) {
    int sum = 0;
    for (DartId e : face_angles(g, faces.walks[f])) sum += a.deg(e);
    int gap = cycle_target(faces, f) - sum;
    auto where = [&] {
      std::string s = "face of " + g.name(g.tail(faces.walks[f][0])) + "->" +
                      g.name(g.head(faces.walks[f][0])) + ": target " +
                      std::to_string(cycle_target(faces, f)) + ", determined sum " +
                      std::to_string(sum);
      return s;
    };
    if (gap % 360 != 0)
      return {std::nullopt, Certificate{CertificateKind::fractional_demand, where(), {}, {f}}};
    if (gap < 0)
      return {std::nullopt, Certificate{CertificateKind::negative_demand, where(), {}, {f}}};
    fd.demand[f] = gap / 360;
  }
  return {fd, std::nullopt};
}

AngleLabeling labeling_with_assignment(const PlaneGraph& g, const QConstraints& q,
                                       const LargeAngleAssignment& l) {
  AngleLabeling a = determined_labeling(g, q);
  for (VertexId v = 0; v < static_cast<VertexId>(l.choice.size()); ++v)
    if (l.choice[v] != no_id) a[l.choice[v]] = AngleCategory::deg360;
  return a;
}

AssignmentResult find_large_angle_assignment(const PlaneGraph& g, const QConstraints& q) {
  AssignmentResult res;
  if (auto cert = rotation_order_certificate(g, q)) {
    res.certificate = std::move(cert);
    return res;
  }
  DemandResult dr = face_demands(g, q);
  if (!dr.demand) {
    res.certificate = std::move(dr.certificate);
    return res;
  }
  const FaceIndex faces = extract_faces(g);
  const auto& demand = dr.demand->demand;

  std::vector<VertexId> ambiguous;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (is_ambiguous(g, q, v)) ambiguous.push_back(v);

  long total_demand = 0;
  for (int d : demand) total_demand += d;

  LargeAngleAssignment assignment;
  assignment.choice.assign(g.vertex_count(), no_id);

  if (total_demand != static_cast<long>(ambiguous.size())) {
    res.certificate = Certificate{
        CertificateKind::infeasible_flow,
        "total face demand " + std::to_string(total_demand) + " differs from " +
            std::to_string(ambiguous.size()) + " ambiguous vertices",
        ambiguous,
        {}};
    return res;
  }

  if (!ambiguous.empty()) {
    using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
    using Network = boost::adjacency_list<
        boost::vecS, boost::vecS, boost::directedS, boost::no_property,
        boost::property<boost::edge_capacity_t, long,
                        boost::property<boost::edge_residual_capacity_t, long,
                                        boost::property<boost::edge_reverse_t,
                                                        Traits::edge_descriptor>>>>;
    const auto nb = ambiguous.size();
    const auto nf = faces.walks.size();
    Network net(2 + nb + nf);
    auto cap = boost::get(boost::edge_capacity, net);
    auto rev = boost::get(boost::edge_reverse, net);
    auto add_arc = [&](std::size_t from, std::size_t to, long c) {
      auto e = boost::add_edge(from, to, net).first;
      auto r = boost::add_edge(to, from, net).first;
      cap[e] = c;
      cap[r] = 0;
      rev[e] = r;
      rev[r] = e;
      return e;
    };
    const std::size_t source = 0, sink = 1;
    std::vector<std::pair<Traits::edge_descriptor, DartId>> angle_arcs;
    for (std::size_t i = 0; i < nb; ++i) {
      add_arc(source, 2 + i, 1);
      for (DartId e : g.rotation(ambiguous[i]))
        angle_arcs.emplace_back(
            add_arc(2 + i, 2 + nb + faces.face_of_dart[g.twin(e)], 1), e);
    }
    for (std::size_t f = 0; f < nf; ++f)
      if (demand[f] > 0) add_arc(2 + nb + f, sink, demand[f]);

    long flow = boost::edmonds_karp_max_flow(net, source, sink);
    if (flow != static_cast<long>(nb)) {
      res.certificate = Certificate{CertificateKind::infeasible_flow,
                                    "maximum flow " + std::to_string(flow) + " of " +
                                        std::to_string(nb) + " required",
                                    ambiguous,
                                    {}};
      return res;
    }
    auto residual = boost::get(boost::edge_residual_capacity, net);
    for (auto& [arc, dart] : angle_arcs)
      if (cap[arc] - residual[arc] == 1) assignment.choice[g.tail(dart)] = dart;
  }

  AngleLabeling a = labeling_with_assignment(g, q, assignment);
  if (!check_angular(g, faces, a).empty())
    throw std::logic_error("flow produced a labeling that is not angular");
  res.labeling = std::move(a);
  res.assignment = std::move(assignment);
  return res;
}

namespace {

AngleLabeling triangulated_candidate(const PlaneGraph& g, const QConstraints& q,
                                     bool require_outer_triangle) {
  const FaceIndex faces = extract_faces(g);
  for (FaceId f = 0; f < static_cast<FaceId>(faces.walks.size()); ++f) {
    if (f == faces.outer && !require_outer_triangle) continue;
    if (faces.walks[f].size() != 3)
      throw error(errc::not_triangulated,
                  "face of length " + std::to_string(faces.walks[f].size()));
  }
  AngleLabeling a = determined_labeling(g, q);
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    if (!is_ambiguous(g, q, v)) continue;
    DartId outer_angle = no_id;
    for (DartId e : g.rotation(v))
      if (faces.face_of_dart[g.twin(e)] == faces.outer) {
        outer_angle = e;
        break;
      }
    if (outer_angle == no_id)
      throw error(errc::internal_ambiguous_vertex, "vertex " + g.name(v));
    a[outer_angle] = AngleCategory::deg360;
  }
  return a;
}

}  // namespace

AngleLabeling labeling_from_triangulated(const PlaneGraph& g, const QConstraints& q) {
  return triangulated_candidate(g, q, true);
}

AngleLabeling labeling_from_internally_triangulated(const PlaneGraph& g, const QConstraints& q) {
  return triangulated_candidate(g, q, false);
}

QConstraints constraints_from_labeling(const PlaneGraph& g, const AngleLabeling& a,
                                       DartId anchor, Quadrant anchor_quadrant) {
  QConstraints q(g.dart_count());
  auto steps = [&](DartId e) { return (a.deg(e) / 90) % 4; };
  std::deque<DartId> todo;
  auto assign = [&](DartId d, Quadrant o) {
    if (q.has(d)) {
      if (q.at(d) != o)
        throw error(errc::inconsistent_propagation,
                    "dart " + g.name(g.tail(d)) + "->" + g.name(g.head(d)) + " gets both " +
                        std::string(to_string(q.at(d))) + " and " + std::string(to_string(o)));
      return;
    }
    q.set(d, o);
    todo.push_back(d);
  };
  assign(anchor, anchor_quadrant);
  while (!todo.empty()) {
    DartId d = todo.front();
    todo.pop_front();
    Quadrant o = q.at(d);
    assign(g.twin(d), opposite(o));
    assign(g.cw_next(d), rotate_cw(o, steps(d)));
    DartId prev = g.ccw_next(d);
    assign(prev, rotate_cw(o, -steps(prev)));
  }
  return q;
}

}  // namespace windrose
