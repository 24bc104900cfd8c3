#pragma once

#include <string>

#include "arq/labeling.hpp"
#include "arq/parse.hpp"

namespace arq {

enum class RenderFormat { text, dot, json };
RenderFormat parse_render_format(const std::string& s);

std::string vertex_label(const ARQuiver& q, int position, LabelMode mode);

// Rows are residues, columns are levels with sinks on the right. Diagonals
// join neighbouring cells; the arrow list below the grid is complete.
std::string render_text(const ARQuiver& q, LabelMode mode = LabelMode::roots);
// Node ids are root coefficient lists; one rank=same group per residue.
std::string render_dot(const ARQuiver& q, LabelMode mode = LabelMode::roots);
std::string render_json(const ARQuiver& q);
std::string render(const ARQuiver& q, RenderFormat format, LabelMode mode);

ARQuiver quiver_from_json(const std::string& text);
// Same schema; null roots mark unknown labels.
ResidueSkeleton skeleton_from_json(const std::string& text);
std::string skeleton_to_json(const ResidueSkeleton& s);

}  // namespace arq
