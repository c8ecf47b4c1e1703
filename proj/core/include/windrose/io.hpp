#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "windrose/constraints.hpp"
#include "windrose/geometry.hpp"
#include "windrose/plane_graph.hpp"

namespace windrose {

/// JSON instance document. `outer_faces` holds one facial walk per
/// connected component; a single walk is written as a flat list.
struct InstanceDocument {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::vector<std::string>>> rotations;
  std::vector<std::vector<std::string>> outer_faces;
  std::vector<std::pair<std::string, Quadrant>> quadrants;  // key "u->v"

  bool operator==(const InstanceDocument&) const = default;
};

/// Throws error(errc::parse_error) naming the offending field.
InstanceDocument parse_instance(std::string_view json_text);
std::string serialize_instance(const InstanceDocument& doc);

struct Instance {
  PlaneGraph graph;
  QConstraints q;
};

/// Builds and validates a connected instance. Rotation and embedding errors
/// keep their own codes; structural problems of the document are ParseError.
Instance to_instance(const InstanceDocument& doc);

/// One document per connected component, each with its own outer walk.
std::vector<InstanceDocument> split_components(const InstanceDocument& doc);

InstanceDocument to_document(const PlaneGraph& g, const QConstraints& q);

template <class T>
std::string drawing_to_json(const PlaneGraph& g, const Drawing<T>& d);

/// Accepts integer or rational coordinates; always returns rationals.
RationalDrawing drawing_from_json(const PlaneGraph& g, std::string_view json_text);

template <class T>
std::string drawing_to_svg(const PlaneGraph& g, const QConstraints& q, const Drawing<T>& d);

}  // namespace windrose
