#pragma once

#include <string>
#include <utility>
#include <vector>

#include "a2web/tableaux.hpp"

namespace a2web {

// Arcs over a numbered boundary line, grouped into m-configurations
// (arc i-j and arc j-l sharing the middle vertex j).
struct MDiagram {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> arcs;  // (left, right), construction order
  struct Config {
    int i, j, ell;
    int left_arc, right_arc;  // indices into arcs
  };
  std::vector<Config> configs;
  std::vector<int> single_arcs;  // arcs not part of any configuration
  std::vector<int> isolated;     // vertices of arc-degree 0

  std::string to_string() const;  // "n=6; arcs=4-5,3-6,2-3,1-4"
  static MDiagram from_string(const std::string& s);
};

// Greedy arc drawing over the rows of a standard tableau with at most 3
// rows, bottom row first. num_vertices defaults to the largest entry.
MDiagram build_m_diagram(const Tableau& t, int num_vertices = -1);

// Number of semicircles above the point just left/right of a vertex.
int circle_depth(const MDiagram& m, int vertex, char side);

// Which of the five relative positions two vertex-disjoint m-configurations
// occupy (1..5 = I..V, ordered by the lexicographic order of their
// vertex-ownership patterns, so that disjoint side-by-side is I).
int relative_position(const MDiagram::Config& c1, const MDiagram::Config& c2);

}  // namespace a2web
