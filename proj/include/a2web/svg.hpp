#pragma once

#include <string>

#include "a2web/flow.hpp"
#include "a2web/m_diagram.hpp"
#include "a2web/rs_perm.hpp"
#include "a2web/web.hpp"

namespace a2web {

// Standalone SVG documents. Output is byte-deterministic for a given object
// and seed; the layout is cosmetic and never feeds back into canonical forms.
std::string svg_of_web(const Web& w, bool depths = false, unsigned seed = 0);
std::string svg_of_m_diagram(const MDiagram& m);
std::string svg_of_perm_diagram(const PermDiagram& d, bool depths = false);
std::string svg_of_flow(const LabeledTriangle& t);

}  // namespace a2web
