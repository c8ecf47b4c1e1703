#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "windrose/constraints.hpp"
#include "windrose/plane_graph.hpp"

namespace windrose {

enum class AngleCategory : int { deg0 = 0, deg90 = 90, deg180 = 180, deg270 = 270, deg360 = 360 };

constexpr int degrees(AngleCategory c) noexcept { return static_cast<int>(c); }
/// Throws std::invalid_argument unless deg is a multiple of 90 in [0, 360].
AngleCategory category_from_degrees(int deg);

/// An angle is named by its first dart e; the second dart is cw_next(e) and
/// the angle lies in the face that contains twin(e).
struct Angle {
  VertexId vertex;
  DartId first_dart;
  DartId second_dart;
  FaceId face;
};

Angle angle_of(const PlaneGraph& g, const FaceIndex& faces, DartId first_dart);

/// Angles of a face walk in walk order: the angle at tail(walk[i]) is
/// twin(walk[i-1]).
std::vector<DartId> face_angles(const PlaneGraph& g, const std::vector<DartId>& walk);

/// Category per angle, indexed by first dart.
class AngleLabeling {
public:
  AngleLabeling() = default;
  explicit AngleLabeling(std::size_t darts, AngleCategory fill = AngleCategory::deg0)
      : cat_(darts, fill) {}

  std::size_t size() const noexcept { return cat_.size(); }
  void resize(std::size_t darts) { cat_.resize(darts, AngleCategory::deg0); }
  AngleCategory operator[](DartId first_dart) const { return cat_.at(first_dart); }
  AngleCategory& operator[](DartId first_dart) { return cat_.at(first_dart); }
  int deg(DartId first_dart) const { return degrees(cat_.at(first_dart)); }

  bool operator==(const AngleLabeling&) const = default;

private:
  std::vector<AngleCategory> cat_;
};

/// nullopt when the two darts share a quadrant (0 or 360 undecided). A
/// degree-1 angle is 360.
std::optional<AngleCategory> angle_category_between(const PlaneGraph& g, const QConstraints& q,
                                                    DartId first_dart);

enum class AngularViolationKind { vertex_condition, cycle_condition };

struct AngularViolation {
  AngularViolationKind kind;
  VertexId vertex = no_id;
  FaceId face = no_id;
  int sum = 0;
  int expected = 0;
};

std::vector<AngularViolation> check_angular(const PlaneGraph& g, const AngleLabeling& a);
std::vector<AngularViolation> check_angular(const PlaneGraph& g, const FaceIndex& faces,
                                            const AngleLabeling& a);

/// Target sum of a face: k*180 - 360 for bounded faces, k*180 + 360 for the outer one.
int cycle_target(const FaceIndex& faces, FaceId f);

/// Why an instance is not windrose-planar.
enum class CertificateKind {
  rotation_order,
  negative_demand,
  fractional_demand,
  infeasible_flow,
  internal_ambiguous_vertex,
  not_angular,
};

std::string_view to_string(CertificateKind k) noexcept;

struct Certificate {
  CertificateKind kind;
  std::string detail;
  std::vector<VertexId> vertices;
  std::vector<FaceId> faces;

  /// Coarse reason: "rotation order" or "infeasible assignment".
  std::string_view reason() const noexcept;
};

struct FaceDemand {
  std::vector<int> demand;  // per face id
};

struct DemandResult {
  std::optional<FaceDemand> demand;
  std::optional<Certificate> certificate;
};

DemandResult face_demands(const PlaneGraph& g, const QConstraints& q);

/// Per vertex: the first dart of the angle receiving 360, or no_id for
/// non-ambiguous vertices.
struct LargeAngleAssignment {
  std::vector<DartId> choice;
};

/// A_{Q,L}: determined categories plus 360 at the chosen angles.
AngleLabeling labeling_with_assignment(const PlaneGraph& g, const QConstraints& q,
                                       const LargeAngleAssignment& l);

struct AssignmentResult {
  std::optional<AngleLabeling> labeling;
  std::optional<LargeAngleAssignment> assignment;
  std::optional<Certificate> certificate;

  explicit operator bool() const noexcept { return labeling.has_value(); }
};

/// Flow-based search for an angular labeling; q must be twin-consistent.
AssignmentResult find_large_angle_assignment(const PlaneGraph& g, const QConstraints& q);

/// Unique candidate labeling of a triangulated instance (not checked for the
/// Cycle condition). Throws NotTriangulated or InternalAmbiguousVertex.
AngleLabeling labeling_from_triangulated(const PlaneGraph& g, const QConstraints& q);

/// Candidate labeling when every bounded face is a triangle; the outer face
/// may be longer. Ambiguous external vertices take 360 on their outer angle.
AngleLabeling labeling_from_internally_triangulated(const PlaneGraph& g, const QConstraints& q);

/// Rebuilds q-constraints from an angular labeling, anchored at one dart.
QConstraints constraints_from_labeling(const PlaneGraph& g, const AngleLabeling& a,
                                       DartId anchor, Quadrant anchor_quadrant);

}  // namespace windrose
