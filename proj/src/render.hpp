#pragma once

#include <string>

#include "chord.hpp"

namespace mk {

// DOT export of the intersection graph: vertices labeled "<id><sign>", inner
// chords drawn filled.
std::string graph_dot(const ChordDiagram& d);

// Decorative SVG: the circle with numbered endpoint positions, inner chords as
// interior segments, outer chords as exterior arcs, signs as labels.
std::string render_svg(const ChordDiagram& d);

}  // namespace mk
