#include "windrose/error.hpp"
#include "windrose/quadrant.hpp"

namespace windrose {

std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::not_connected: return "NotConnected";
    case errc::self_loop: return "SelfLoop";
    case errc::parallel_edge: return "ParallelEdge";
    case errc::inconsistent_rotation: return "InconsistentRotation";
    case errc::bad_witness: return "BadWitness";
    case errc::missing_dart_label: return "MissingDartLabel";
    case errc::inconsistent_constraints: return "InconsistentConstraints";
    case errc::not_triangulated: return "NotTriangulated";
    case errc::internal_ambiguous_vertex: return "InternalAmbiguousVertex";
    case errc::inconsistent_propagation: return "InconsistentPropagation";
    case errc::parallel_edge_would_be_created: return "ParallelEdgeWouldBeCreated";
    case errc::stuck_at_internal_vertex: return "StuckAtInternalVertex";
    case errc::not_angular: return "NotAngular";
    case errc::not_quasi_triangulated: return "NotQuasiTriangulated";
    case errc::cyclic_view: return "CyclicView";
    case errc::block_structure_unsupported: return "BlockStructureUnsupported";
    case errc::missing_geometry: return "MissingGeometry";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::bad_params: return "BadParams";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Quadrant q) noexcept {
  switch (q) {
    case Quadrant::nw: return "NW";
    case Quadrant::ne: return "NE";
    case Quadrant::se: return "SE";
    case Quadrant::sw: return "SW";
  }
  return "??";
}

std::optional<Quadrant> parse_quadrant(std::string_view s) noexcept {
  if (s == "NW") return Quadrant::nw;
  if (s == "NE") return Quadrant::ne;
  if (s == "SE") return Quadrant::se;
  if (s == "SW") return Quadrant::sw;
  return std::nullopt;
}

}  // namespace windrose
