#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "windrose/constraints.hpp"
#include "windrose/geometry.hpp"
#include "windrose/labeling.hpp"

namespace windrose {

enum class ViolationKind { crossing, monotonicity, quadrant, rotation, face_orientation };

struct Violation {
  ViolationKind kind;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  std::string detail;
};

struct VerificationReport {
  bool planarity_ok = true;
  bool monotonicity_ok = true;
  bool quadrants_ok = true;
  bool embedding_ok = true;
  std::vector<Violation> violations;

  bool ok() const noexcept {
    return planarity_ok && monotonicity_ok && quadrants_ok && embedding_ok && violations.empty();
  }
};

struct VerifyOptions {
  /// Prune segment pairs by x-extent; the brute-force scan is used otherwise.
  bool sweep = true;
  /// Stop collecting violations of one kind after this many.
  std::size_t max_violations_per_kind = 16;
};

template <class T>
VerificationReport verify_drawing(const PlaneGraph& g, const QConstraints& q,
                                  const Drawing<T>& d, const VerifyOptions& opts = {});

extern template VerificationReport verify_drawing(const PlaneGraph&, const QConstraints&,
                                                  const GridDrawing&, const VerifyOptions&);
extern template VerificationReport verify_drawing(const PlaneGraph&, const QConstraints&,
                                                  const RationalDrawing&, const VerifyOptions&);

std::string to_string(ViolationKind k);

/// Every angular labeling of the form A_{Q,L}. Throws CapExceeded when there
/// are more than `cap` ambiguous vertices.
std::vector<AngleLabeling> brute_force_assignment_oracle(const PlaneGraph& g,
                                                         const QConstraints& q,
                                                         std::size_t cap = 8);

}  // namespace windrose
