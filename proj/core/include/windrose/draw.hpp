#pragma once

#include <cstdint>
#include <optional>

#include "windrose/augment.hpp"
#include "windrose/constraints.hpp"
#include "windrose/geometry.hpp"
#include "windrose/labeling.hpp"
#include "windrose/verify.hpp"

namespace windrose {

/// Straight-line grid drawing of a quasi-triangulated instance: x is the rank
/// in a topological order of the horizontal view, y in the vertical view.
/// Throws NotQuasiTriangulated or CyclicView.
GridDrawing quasi_triangulated_drawing(const PlaneGraph& g, const QConstraints& q);

/// Restricts a drawing of the augmented graph to the original graph; each
/// subdivided edge bends once at its subdivision vertex.
GridDrawing collapse_to_one_bend(const PlaneGraph& g, const GridDrawing& augmented,
                                 const SubdivisionMap& sub);

struct PipelineOptions {
  bool self_verify = true;
  SurgeryObserver observer;
};

struct PipelineStats {
  std::size_t vertices = 0;            // |V(g)|
  std::size_t augmented_vertices = 0;  // |V(g*)|
  bool wrapped = false;
  std::size_t ear_cuts = 0;
  EliminationStats elimination;
};

struct PipelineResult {
  bool windrose_planar = false;
  std::optional<GridDrawing> drawing;
  std::optional<Certificate> certificate;
  std::optional<AngleLabeling> labeling;
  PipelineStats stats;
};

/// Decides windrose planarity and, on success, returns a verified 1-bend
/// grid drawing. Throws InconsistentConstraints when q is not twin-consistent.
PipelineResult windrose_pipeline(const PlaneGraph& g, const QConstraints& q,
                                 const PipelineOptions& opts = {});

/// Every block is a single edge or a planar 3-tree (triangles included).
bool has_three_tree_blocks(const PlaneGraph& g);

/// An internally triangulated graph whose outer face is a 4-cycle of poles
/// in the prescribed quadrant ring, with all bounded angles at most 90.
bool is_quasi_triangulated(const PlaneGraph& g, const QConstraints& q);

struct ThreeTreeOptions {
  /// Upper bound on the distance of a leaf placement from its cut vertex.
  Rational radius = 1;
};

/// Straight-line drawing with exact rational coordinates for graphs whose
/// blocks are edges or planar 3-trees. (g,q) must be windrose-planar.
/// Throws BlockStructureUnsupported.
RationalDrawing three_tree_block_drawing(const PlaneGraph& g, const QConstraints& q,
                                         const ThreeTreeOptions& opts = {});

}  // namespace windrose
