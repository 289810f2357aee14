#pragma once

#include <utility>
#include <vector>

#include "a2web/m_diagram.hpp"
#include "a2web/rs_perm.hpp"
#include "a2web/tableaux.hpp"
#include "a2web/web.hpp"

namespace a2web {

// Everything produced along the way from a tableau to its web.
struct PhiTrace {
  Tableau input;
  TableauPairPlusMinus pair;
  Tableau box_plus, dia_plus, box_minus, dia_minus;
  std::vector<int> alphas, betas;  // isolated vertex labels, ascending
  Permutation sigma;
  MDiagram m_plus, m_minus;
  std::vector<Curve> curves;  // geometric realization (rendering only)
  Web web;
};

PhiTrace phi_trace(const Tableau& t, int k);
Web phi(const Tableau& t, int k);

// Recover the tableau from boundary path-depth differences.
Tableau phi_inverse(const Web& w, int n, int k);

// The k=0 special case: the web of a standard tableau of shape (3^n), all
// boundary vertices on one bottom line.
Web tymoczko_web(const Tableau& t3n);

// Web and arcs of a 3-row standard tableau's m-diagram (bottom line).
std::pair<Web, MDiagram> m_diagram_web(const Tableau& three_row, int num_vertices = -1);

// Curves of the pre-diagram: bottom m-diagram, top m-diagram (reflected),
// and strands alpha -> beta between isolated vertices.
std::vector<Curve> assemble_prediagram(const MDiagram& bottom, const MDiagram& top,
                                       const std::vector<std::pair<int, int>>& strands);

}  // namespace a2web
