#pragma once

#include <string>

#include "demyanov/converter.hpp"

namespace demyanov {

/// Layout and styling of a rendered collection. Sizes are SVG user units.
struct RenderSpec {
  int panel_size = 200;
  int margin = 16;
  int columns = 4;
  /// Member i is drawn with palette entry (i + style_offset) mod palette size.
  int style_offset = 0;
};

/// One panel per member in canonical order, all panels sharing the bounding
/// box of the whole collection (plus the origin). Points are disks, segments
/// are strokes, polygons are filled paths. Coordinates are computed exactly
/// and rounded to 1/1000, so the output is byte-deterministic.
std::string render_svg(const Collection& omega, const RenderSpec& spec = {});

}  // namespace demyanov
