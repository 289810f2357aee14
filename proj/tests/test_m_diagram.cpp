#include "a2web/m_diagram.hpp"

#include <set>

#include "a2web/error.hpp"
#include "doctest.h"

using namespace a2web;

namespace {
Tableau T(const std::string& s) { return Tableau::from_string(s); }
}

TEST_CASE("m-diagram of the introductory example") {
  // conjugate of the (3,3) example: rows (1,2 / 3,4 / 5,6)
  MDiagram m = build_m_diagram(T("1,2/3,4/5,6"));
  REQUIRE(m.arcs.size() == 4);
  CHECK(m.arcs[0] == std::make_pair(4, 5));
  CHECK(m.arcs[1] == std::make_pair(3, 6));
  CHECK(m.arcs[2] == std::make_pair(2, 3));
  CHECK(m.arcs[3] == std::make_pair(1, 4));
  REQUIRE(m.configs.size() == 2);
  CHECK(m.isolated.empty());
  CHECK(m.single_arcs.empty());
  CHECK(m.to_string() == "n=6; arcs=4-5,3-6,2-3,1-4");
  CHECK(MDiagram::from_string(m.to_string()).arcs == m.arcs);
}

TEST_CASE("m-diagram trivial cases") {
  MDiagram one_row = build_m_diagram(T("1,2,3"));
  CHECK(one_row.arcs.empty());
  CHECK(one_row.isolated == std::vector<int>{1, 2, 3});

  MDiagram col = build_m_diagram(T("1/2/3"));
  REQUIRE(col.configs.size() == 1);
  CHECK(col.configs[0].i == 1);
  CHECK(col.configs[0].j == 2);
  CHECK(col.configs[0].ell == 3);

  CHECK_THROWS_AS(build_m_diagram(T("1/2/3/4")), DomainError);
}

TEST_CASE("circle depth at boundary points") {
  // f_inf has depth 0 everywhere outside the arcs
  MDiagram m = build_m_diagram(T("1/2/3"));
  CHECK(circle_depth(m, 1, 'l') == 0);
  CHECK(circle_depth(m, 3, 'r') == 0);
  CHECK(circle_depth(m, 2, 'l') == 1);
  CHECK(circle_depth(m, 2, 'r') == 1);

  // nested arcs (1-4),(2-3): a point between 2 and 3 lies below both
  MDiagram nested = MDiagram::from_string("n=4; arcs=2-3,1-4");
  CHECK(circle_depth(nested, 2, 'r') == 2);
  CHECK(circle_depth(nested, 3, 'l') == 2);
  CHECK(circle_depth(nested, 2, 'l') == 1);
}

TEST_CASE("relative position classifier") {
  // side-by-side is case I
  MDiagram::Config a{1, 2, 3, -1, -1}, b{4, 5, 6, -1, -1};
  CHECK(relative_position(a, b) == 1);
  CHECK(relative_position(b, a) == 1);

  // a fully nested pair lands in one fixed class among II..V
  MDiagram::Config outer{1, 5, 6, -1, -1}, inner{2, 3, 4, -1, -1};
  int cls = relative_position(outer, inner);
  CHECK(cls >= 2);
  CHECK(cls <= 5);
  CHECK(relative_position(inner, outer) == cls);

  MDiagram::Config shares{1, 2, 3, -1, -1}, shares2{3, 4, 5, -1, -1};
  CHECK_THROWS_AS(relative_position(shares, shares2), DomainError);
}

TEST_CASE("exactly five classes over all SYT(2,2,2), closed over sweeps") {
  std::set<int> seen;
  for (const Tableau& u : enumerate_standard(Partition({2, 2, 2}))) {
    MDiagram m = build_m_diagram(u);
    REQUIRE(m.configs.size() == 2);
    seen.insert(relative_position(m.configs[0], m.configs[1]));
  }
  CHECK(seen == std::set<int>{1, 2, 3, 4, 5});

  // all pairs in m-diagrams of SYT((n,n,n)), n <= 5, classify into the 5
  for (int n = 2; n <= 5; ++n) {
    for (const Tableau& t : enumerate_standard(Partition({n, n, n}))) {
      MDiagram m = build_m_diagram(t);
      for (size_t i = 0; i < m.configs.size(); ++i)
        for (size_t j = i + 1; j < m.configs.size(); ++j) {
          int cls = relative_position(m.configs[i], m.configs[j]);
          CHECK(cls >= 1);
          CHECK(cls <= 5);
        }
    }
  }
}
