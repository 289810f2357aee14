#include "a2web/flow.hpp"

#include <set>

#include "a2web/error.hpp"
#include "doctest.h"

using namespace a2web;

namespace {

Tableau T(const std::string& s) { return Tableau::from_string(s); }

TableauPairPlusMinus running_pair() {
  TableauPairPlusMinus pair;
  pair.n = 8;
  pair.k = 7;
  pair.t_plus = T("1,2,5,6/3,4/7");
  pair.t_minus = T("1,2,3,5,9/4,6,7/8,10");
  return pair;
}

std::vector<TableauPairPlusMinus> all_pairs(int n, int k) {
  std::vector<TableauPairPlusMinus> out;
  for (const Tableau& t : enumerate_phi_domain(n, k)) out.push_back(decompose(t, k));
  return out;
}

}  // namespace

TEST_CASE("columns of the running example") {
  auto cm = columns(running_pair().t_minus);
  REQUIRE(cm.size() == 5);
  CHECK(cm[0].entries == std::vector<int>{2, 7, 8});
  CHECK(cm[1].entries == std::vector<int>{5, 6, 10});
  CHECK(cm[2].entries == std::vector<int>{3, 4});
  CHECK(cm[3].entries == std::vector<int>{1});
  CHECK(cm[4].entries == std::vector<int>{9});
  CHECK(cm[0].height == 3);
  CHECK(cm[0].index == 1);
  CHECK(cm[1].index == 2);

  auto cp = columns(running_pair().t_plus);
  REQUIRE(cp.size() == 4);
  CHECK(cp[0].entries == std::vector<int>{1, 4, 7});
  CHECK(cp[1].entries == std::vector<int>{2, 3});
  CHECK(cp[2].entries == std::vector<int>{5});
  CHECK(cp[3].entries == std::vector<int>{6});
}

TEST_CASE("columns partition the entries and single columns map to themselves") {
  CHECK(columns(T("1/2/3"))[0].entries == std::vector<int>{1, 2, 3});
  for (int d = 0; d <= 7; ++d) {
    // all standard tableaux with at most 3 rows
    for (int r3 = 0; 3 * r3 <= d; ++r3)
      for (int r2 = r3; r2 + r3 <= d; ++r2) {
        int r1 = d - r2 - r3;
        if (r1 < r2) continue;
        std::vector<int> parts;
        for (int x : {r1, r2, r3})
          if (x > 0) parts.push_back(x);
        for (const Tableau& t : enumerate_standard(Partition(parts))) {
          auto cs = columns(t);
          std::multiset<int> all;
          for (const auto& c : cs) {
            CHECK(static_cast<int>(c.entries.size()) == c.height);
            for (int e : c.entries) all.insert(e);
          }
          auto ent = t.entries();
          CHECK(all == std::multiset<int>(ent.begin(), ent.end()));
        }
      }
  }
}

TEST_CASE("word_of_column matches the printed words") {
  int n = 8, k = 7;
  auto cm = columns(running_pair().t_minus);
  // T-_{3,1}: bar-1 at position 2, bar-2 at 7, bar-3 at 8
  FlowWord w = word_of_column(cm[0], '-', n, k);
  CHECK(w.length == 17);
  CHECK(w.wall == 10);
  CHECK(w.syms[1] == -1);
  CHECK(w.syms[6] == -2);
  CHECK(w.syms[7] == -3);
  CHECK(w.to_string() == ".,-1,.,.,.,.,-2,-3,.,.,|,.,.,.,.,.,.,.");

  // T+_{3,1}: 3 at position 11, 2 at 14, 1 at 17
  auto cp = columns(running_pair().t_plus);
  FlowWord wp = word_of_column(cp[0], '+', n, k);
  CHECK(wp.syms[10] == 3);
  CHECK(wp.syms[13] == 2);
  CHECK(wp.syms[16] == 1);

  // the height-2 pair words
  FlowWord w21 = word_of_column(cm[2], '-', n, k).merged_with(
      word_of_column(cp[1], '+', n, k));
  CHECK(w21.syms[2] == -1);
  CHECK(w21.syms[3] == -2);
  CHECK(w21.syms[14] == 2);
  CHECK(w21.syms[15] == 1);

  // empty column gives the all-blank word
  OneColumn empty{0, 1, {}};
  FlowWord we = word_of_column(empty, '-', n, k);
  for (int s : we.syms) CHECK(s == 0);
}

TEST_CASE("flow_from_pair on the running example") {
  LabeledTriangle d = flow_from_pair(running_pair());
  CHECK(d.N == 17);
  CHECK(is_admissible(d));
  std::string why;
  CHECK_MESSAGE(uses_legal_templates(d, &why), why);
  CHECK(pair_from_flow(d, 8, 7) == running_pair());
}

TEST_CASE("single column flow is trivially admissible") {
  auto pairs = all_pairs(1, 0);
  REQUIRE(pairs.size() == 1);
  LabeledTriangle d = flow_from_pair(pairs[0]);
  CHECK(d.N == 3);
  CHECK(is_admissible(d));
  CHECK(uses_legal_templates(d));
  CHECK(pair_from_flow(d, 1, 0) == pairs[0]);
}

TEST_CASE("exhaustive pairs n<=3: admissible, legal, round trip, injective") {
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; 2 * k <= 3 * n; ++k) {
      std::set<std::string> images;
      auto pairs = all_pairs(n, k);
      for (const auto& pair : pairs) {
        LabeledTriangle d = flow_from_pair(pair);
        CHECK(is_admissible(d));
        std::string why;
        CHECK_MESSAGE(uses_legal_templates(d, &why), why);
        CHECK(pair_from_flow(d, n, k) == pair);
        images.insert(d.to_string());
      }
      CHECK(images.size() == pairs.size());
    }
}

TEST_CASE("inadmissible word: bar-1 2 2 bar-3 1") {
  // route every top symbol south-west until it leaves through the left side;
  // every cell is a legal pass-through, but the side boundary carries flow
  FlowWord w = FlowWord::from_string("-1,2,2,-3,1");
  LabeledTriangle d = LabeledTriangle::blank(5, 5);
  for (int p = 1; p <= 5; ++p) {
    int s = w.syms[p - 1];
    if (s == 0) continue;
    int raw = -s;
    d.at('h', 0, p - 1) = raw;
    for (int r = 1; r < p; ++r) {
      d.at('d', r - 1, p - r) = raw;
      d.at('h', r, p - r - 1) = raw;
    }
    d.at('d', p - 1, 0) = raw;
  }
  CHECK(d.top_word().to_string() == w.to_string());
  std::string why;
  CHECK_MESSAGE(uses_legal_templates(d, &why), why);
  CHECK(!is_admissible(d));

  // blank word is admissible
  CHECK(is_admissible(LabeledTriangle::blank(4, 2)));
}

TEST_CASE("flow serialization round trip") {
  LabeledTriangle d = flow_from_pair(running_pair());
  std::string s = d.to_string();
  LabeledTriangle back = LabeledTriangle::from_string(s);
  CHECK(back.to_string() == s);
  CHECK(back.top_word().to_string() == d.top_word().to_string());
  CHECK(pair_from_flow(back, 8, 7) == running_pair());
  CHECK_THROWS_AS(LabeledTriangle::from_string("junk"), ParseError);
}
