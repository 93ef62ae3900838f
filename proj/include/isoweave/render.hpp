#pragma once

#include <string>

#include "isoweave/cube.hpp"
#include "isoweave/symmetry.hpp"

namespace isoweave {

struct RenderSpec {
    int cell_size = 24;
    bool show_markers = true;
    bool show_lattice = false;
};

// Deterministic SVG of the design with symmetry markers: open squares for
// plain quarter centres, filled diamonds for tau quarter centres, open or
// filled circles for half-turn centres, translation vectors when asked.
std::string render_svg(const Design& d, const RenderSpec& spec);
std::string render_svg(const Design& d, const RenderSpec& spec, const SymmetrySurvey& s);

// The six net squares over the design plane, cells clipped to face outlines.
std::string render_net_svg(const CubeNet& net, int cell_size);

}  // namespace isoweave
