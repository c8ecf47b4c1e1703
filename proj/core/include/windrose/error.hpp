#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace windrose {

enum class errc {
  not_connected,
  self_loop,
  parallel_edge,
  inconsistent_rotation,
  bad_witness,
  missing_dart_label,
  inconsistent_constraints,
  not_triangulated,
  internal_ambiguous_vertex,
  inconsistent_propagation,
  parallel_edge_would_be_created,
  stuck_at_internal_vertex,
  not_angular,
  not_quasi_triangulated,
  cyclic_view,
  block_structure_unsupported,
  missing_geometry,
  cap_exceeded,
  bad_params,
  parse_error,
};

std::string_view to_string(errc code) noexcept;

// Single exception type for the library; the code says which contract broke.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

}  // namespace windrose
