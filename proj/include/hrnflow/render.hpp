#pragma once

#include <string>

#include "hrnflow/hrn.hpp"
#include "hrnflow/persistence.hpp"

namespace hrnflow {

// Text plot: birth on the horizontal axis, death on the vertical axis, '.'
// on the diagonal, points drawn as their multiplicity (1-9, '+' above 9),
// and an "inf" row on top for points at infinity.
std::string render_diagram_ascii(const ErrorDiagram& diagram);

// Static SVG of the same plot; circle radius grows with multiplicity.
std::string render_diagram_svg(const ErrorDiagram& diagram);

std::string render_graph_ascii(const Hrn& h);
std::string render_graph_svg(const Hrn& h);

} // namespace hrnflow
