#pragma once

// SVG 1.1 figures. Geometry stays exact until the final pixel coordinate,
// which is printed to 12 significant digits.

#include <string>

#include "especial/family.hpp"
#include "especial/hullgeom.hpp"
#include "especial/straighten.hpp"

namespace especial {

struct RenderOptions {
  long width = 800;
  long height = 800;
  long margin = 40;
  double hull_stroke = 2.0;
  double leaf_stroke = 2.5;
  double circle_stroke = 1.5;
  std::string plus_color = "#c0392b";
  std::string minus_color = "#1f5fbf";
  std::string cell_color = "#555555";
  bool hulls = true;
  bool cells = true;
  bool linked_region = true;
  bool straightened = true;
  bool leaves = true;
  bool labels = true;
};

/// Circle, hulls of both families and the linked region (cells shaded).
/// Ids: hull-plus-i, hull-minus-j, cell-i-j, mark-<point index>.
std::string render_input_svg(const FamilyPair& fp, const std::vector<LinkedCell>& cells,
                             const RenderOptions& options = {});

/// Z layout and leaf trees. Ids: z-i-j, boundary-i-j, virtual-plus-i,
/// leaf-plus-i (group) with edges leaf-plus-i-edge-k.
std::string render_straightened_svg(const StraightenedDisc& sd, const RenderOptions& options = {});

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace especial
