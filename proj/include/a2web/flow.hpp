#pragma once

#include <map>
#include <string>
#include <vector>

#include "a2web/tableaux.hpp"

namespace a2web {

// One column of the section-7 decomposition of a standard tableau.
struct OneColumn {
  int height = 0;              // 1, 2 or 3
  int index = 0;               // 1-based, ascending bottom entries
  std::vector<int> entries;    // ascending = by row
};

// Matching rules (I)-(II): third-row entries take second-row partners,
// then every second-row entry takes a first-row partner.
std::vector<OneColumn> columns(const Tableau& t);

// Word over {+-1,+-2,+-3, blank}: negative (barred) symbols before the wall
// come from T-, positive ones after the wall from T+ at mirrored positions.
struct FlowWord {
  int length = 0;
  int wall = 0;
  std::vector<int> syms;  // 1-indexed via syms[i-1]; 0 = blank, -r barred

  std::string to_string() const;  // "-1,.,.|2,." with the wall marked
  static FlowWord from_string(const std::string& s);
  FlowWord merged_with(const FlowWord& o) const;  // superimpose blanks
};

FlowWord word_of_column(const OneColumn& c, char side, int n, int k);

// Edge flows on the triangular grid of side N (top side horizontal, apex
// down). Vertex (r,i) for r=0..N, i=0..N-r; edge families keyed by the upper
// vertex: h(r,i): (r,i)-(r,i+1); d(r,i) "\": (r,i)-(r+1,i); u(r,i) "/":
// (r,i)-(r+1,i-1). Raw flows are signed integers; positive means descending
// (h: crossed downward, d: south-west flow, u: south-east flow). The display
// label of a raw flow f is f mod 3 in {0,1,2}, except f = +-3 displays as 3;
// label -q is the same edge state as label 3-q with direction reversed.
struct LabeledTriangle {
  int N = 0;
  int wall = 0;
  std::vector<std::vector<int>> h, d, u;
  // strand display labels per painted edge, for the crossing-legality check
  // (not serialized)
  std::map<std::string, std::vector<int>> transits;

  static LabeledTriangle blank(int N, int wall);
  int& at(char family, int r, int i);
  int get(char family, int r, int i) const;
  static int display_label(int raw);

  FlowWord top_word() const;
  std::string to_string() const;
  static LabeledTriangle from_string(const std::string& s);
};

LabeledTriangle flow_from_pair(const TableauPairPlusMinus& pair);
TableauPairPlusMinus pair_from_flow(const LabeledTriangle& d, int n, int k);

// True iff the left and right boundary edges all carry zero flow.
bool is_admissible(const LabeledTriangle& d);

// Legal templates: every cell conserves flow mod 3, raw flows stay in the
// range produced by at most two transiting strands, and recorded transits
// never put two equal labels across one edge.
bool uses_legal_templates(const LabeledTriangle& d, std::string* why = nullptr);

}  // namespace a2web
