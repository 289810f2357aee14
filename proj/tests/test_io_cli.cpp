#include <random>

#include "a2web/bijection.hpp"
#include "a2web/error.hpp"
#include "a2web/flow.hpp"
#include "a2web/m_diagram.hpp"
#include "a2web/rs_perm.hpp"
#include "a2web/svg.hpp"
#include "doctest.h"

using namespace a2web;

TEST_CASE("tableau serialization fuzz") {
  std::mt19937 rng(99);
  for (const Tableau& t : enumerate_semistandard(Partition({3, 2, 1}),
                                                 {{1, 2}, {2, 2}, {3, 1}, {4, 1}})) {
    CHECK(Tableau::from_string(t.to_string()) == t);
  }
  for (int trial = 0; trial < 50; ++trial) {
    // random skew shapes with a random standard filling
    int rows = 1 + rng() % 3;
    std::vector<int> outer, inner;
    int prev_o = 4, prev_i = 2;
    for (int i = 0; i < rows; ++i) {
      int o = 1 + rng() % prev_o;
      int in = std::min<int>(rng() % (prev_i + 1), o);
      outer.push_back(o);
      inner.push_back(in);
      prev_o = o;
      prev_i = in;
    }
    std::vector<std::vector<int>> grid(rows);
    int v = 0;
    for (int i = 0; i < rows; ++i) {
      grid[i].assign(outer[i], 0);
      for (int j = inner[i]; j < outer[i]; ++j) grid[i][j] = 100 + 10 * j + ++v;
    }
    Tableau t(Partition(outer), Partition(inner), grid);
    CHECK(Tableau::from_string(t.to_string()) == t);
  }
}

TEST_CASE("permutation and matching serialization") {
  for (const char* s : {"[4,2,1,5,3]", "[1]", "[2,1]"}) {
    Permutation p = Permutation::from_string(s);
    CHECK(p.to_string() == s);
  }
  CHECK(Permutation::from_string("4,2,1,5,3").to_string() == "[4,2,1,5,3]");
  CHECK_THROWS_AS(Permutation::from_string("[1,1]"), ParseError);
  CHECK_THROWS_AS(Permutation::from_string("[1,3]"), ParseError);
  CHECK(temperley_lieb(Permutation::from_string("[1,2]")).to_string() ==
        "t1-b1,t2-b2");
}

TEST_CASE("m-diagram serialization fuzz") {
  for (const Tableau& t : enumerate_standard(Partition({4, 4, 4}))) {
    MDiagram m = build_m_diagram(t);
    MDiagram back = MDiagram::from_string(m.to_string());
    CHECK(back.num_vertices == m.num_vertices);
    CHECK(back.arcs == m.arcs);
    CHECK(back.configs.size() == m.configs.size());
  }
}

TEST_CASE("web serialization fuzz over phi images") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; 2 * k <= 3 * n; ++k)
      for (const Tableau& t : enumerate_phi_domain(n, k)) {
        Web w = phi(t, k);
        Web back = Web::from_text(w.to_text());
        CHECK(back.canonical_form() == w.canonical_form());
        CHECK(back.to_text() == w.to_text());
      }
}

TEST_CASE("flow serialization fuzz") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; 2 * k <= 3 * n; ++k)
      for (const Tableau& t : enumerate_phi_domain(n, k)) {
        LabeledTriangle d = flow_from_pair(decompose(t, k));
        LabeledTriangle back = LabeledTriangle::from_string(d.to_string());
        CHECK(back.to_string() == d.to_string());
      }
}

TEST_CASE("svg output is deterministic and structured") {
  auto [tripod, md] = m_diagram_web(Tableau::from_string("1/2/3"));
  std::string svg1 = svg_of_web(tripod, false, 0);
  std::string svg2 = svg_of_web(tripod, false, 0);
  CHECK(svg1 == svg2);
  // 3 boundary dots and 1 internal dot, arrows pointing at the sink
  size_t circles = 0, pos = 0;
  while ((pos = svg1.find("<circle", pos)) != std::string::npos) {
    ++circles;
    ++pos;
  }
  CHECK(circles == 4);
  CHECK(svg1.find("<path") != std::string::npos);
  CHECK(svg1.find("</svg>") != std::string::npos);

  // depth overlay annotates the two depth-1 pockets
  std::string with_depths = svg_of_web(tripod, true, 0);
  CHECK(with_depths.find(">1</text>") != std::string::npos);

  std::string m_svg = svg_of_m_diagram(md);
  CHECK(m_svg.find("A ") != std::string::npos);  // semicircle arcs

  PermDiagram pd = diagram(Permutation::from_string("[3,1,2,4]"));
  CHECK(svg_of_perm_diagram(pd, true) == svg_of_perm_diagram(pd, true));

  TableauPairPlusMinus pair = decompose(enumerate_phi_domain(2, 2)[0], 2);
  std::string flow_svg = svg_of_flow(flow_from_pair(pair));
  CHECK(flow_svg.find("</svg>") != std::string::npos);
}

TEST_CASE("phi web svg renders the running example") {
  TableauPairPlusMinus pair;
  pair.n = 8;
  pair.k = 7;
  pair.t_plus = Tableau::from_string("1,2,5,6/3,4/7");
  pair.t_minus = Tableau::from_string("1,2,3,5,9/4,6,7/8,10");
  Web w = phi(recompose(pair), 7);
  std::string svg = svg_of_web(w, true, 0);
  CHECK(svg.find("t7") != std::string::npos);
  CHECK(svg.find("b10") != std::string::npos);
  CHECK(svg == svg_of_web(w, true, 0));
  CHECK(svg != svg_of_web(w, true, 1));  // seed changes layout bytes only
  Web back = Web::from_text(w.to_text());
  CHECK(svg_of_web(back, true, 0).find("</svg>") != std::string::npos);
}
