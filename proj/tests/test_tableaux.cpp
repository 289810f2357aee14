#include "a2web/tableaux.hpp"

#include <algorithm>
#include <set>

#include "a2web/error.hpp"
#include "doctest.h"

using namespace a2web;

namespace {

Tableau T(const std::string& s) { return Tableau::from_string(s); }

// Brute-force oracle: standard tableaux counted by direct enumeration.
long long count_standard_brute(const Partition& shape) {
  return static_cast<long long>(enumerate_standard(shape).size());
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p({3, 3, 1});
  CHECK(p.size() == 7);
  CHECK(p.conjugate() == Partition({3, 2, 2}));
  CHECK(p.conjugate().conjugate() == p);
  CHECK(Partition().conjugate() == Partition());
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK(!Partition({3, 2}).contains(Partition({1, 1, 1})));
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(T("1,2,4/3,5,6")) == T("1,3/2,5/4,6"));
  CHECK(conjugate(Tableau()) == Tableau());
  // involution on a spread of semistandard tableaux
  for (const auto& t :
       enumerate_semistandard(Partition({3, 2}), {{1, 2}, {2, 2}, {3, 1}}))
    CHECK(conjugate(conjugate(t)) == t);
  Tableau skew(Partition({2, 2}), Partition({1}), {{0, 2}, {1, 3}});
  CHECK_THROWS_AS(conjugate(skew), DomainError);
}

TEST_CASE("serialization round trip") {
  for (const char* s : {"1,2,4/3,5,6", "", ".,.,3/1,2", "1"}) {
    Tableau t = T(s);
    CHECK(t.to_string() == s);
    CHECK(Tableau::from_string(t.to_string()) == t);
  }
  CHECK_THROWS_AS(T("1,x"), ParseError);
  CHECK_THROWS_AS(T("1/2,2"), ParseError);  // row lengths must weakly decrease
}

TEST_CASE("enumerate_semistandard") {
  auto got = enumerate_semistandard(Partition({3, 3}),
                                    {{1, 2}, {2, 2}, {3, 1}, {4, 1}});
  REQUIRE(got.size() == 2);
  CHECK(got[0] == T("1,1,2/2,3,4"));
  CHECK(got[1] == T("1,1,3/2,2,4"));

  CHECK(enumerate_semistandard(Partition({3}), {{1, 1}, {2, 1}, {3, 1}}).size() == 1);
  CHECK(enumerate_semistandard(Partition({1, 1}), {{1, 2}}).empty());
}

TEST_CASE("count_standard_hook vs brute force") {
  CHECK(count_standard_hook(Partition({2, 1})) == 2);
  CHECK(count_standard_hook(Partition({5})) == 1);
  CHECK(count_standard_hook(Partition({2, 2})) == 2);
  for (int d = 0; d <= 8; ++d)
    for (const auto& p : partitions_of(d))
      CHECK(count_standard_hook(p) == count_standard_brute(p));
}

TEST_CASE("complement_phi on the paper's running tableau") {
  // T1 recovered from the paper's T+ = (1,2,5,6/3,4/7) of shape (4,2,1).
  Tableau t1 = T("1,1,3/2,2,4/3,5,7/4,6/5,7/6");
  REQUIRE(t1.is_semistandard());
  REQUIRE(t1.shape == Partition({3, 3, 3, 2, 2, 1}));
  Tableau plus = complement_phi(t1, 3, 7);
  CHECK(plus.shape == Partition({4, 2, 1}));
  CHECK(plus == T("1,2,5,6/3,4/7"));
  CHECK(complement_phi_inverse(plus, 3, 7) == t1);
}

TEST_CASE("complement_phi trivial cases") {
  CHECK(complement_phi(Tableau(), 3, 0) == Tableau());
  CHECK(complement_phi_inverse(Tableau(), 3, 0) == Tableau());
  // n=1 forces an empty input; output is the single row 1..k.
  Tableau row = complement_phi(Tableau(), 1, 4);
  CHECK(row == T("1,2,3,4"));
  CHECK(complement_phi_inverse(row, 1, 4) == Tableau());
  CHECK_THROWS_AS(complement_phi(T("1,2/3,4"), 3, 2), DomainError);
}

TEST_CASE("complement_phi bijection, exhaustive n=3") {
  // All SSYT of shape inside (3^k) with type {1^2..k^2}, k <= 4.
  for (int k = 0; k <= 4; ++k) {
    std::set<Tableau> images;
    int domain = 0;
    for (int d = 0; d <= 3 * k; ++d) {
      for (const auto& nu : partitions_of(d)) {
        if (d != 2 * k) continue;
        if (nu.rows() > k || nu.part(0) > 3) continue;
        TypeMultiset type;
        for (int v = 1; v <= k; ++v) type[v] = 2;
        for (const auto& t : enumerate_semistandard(nu, type)) {
          ++domain;
          Tableau s = complement_phi(t, 3, k);
          CHECK(s.is_standard());
          CHECK(complement_phi_inverse(s, 3, k) == t);
          images.insert(s);
        }
      }
    }
    CHECK(static_cast<int>(images.size()) == domain);  // injective
  }
}

TEST_CASE("decompose on the running example") {
  TableauPairPlusMinus pair;
  pair.n = 8;
  pair.k = 7;
  pair.t_plus = T("1,2,5,6/3,4/7");
  pair.t_minus = T("1,2,3,5,9/4,6,7/8,10");
  Tableau t = recompose(pair);
  CHECK(t.shape == Partition(std::vector<int>(8, 3)));
  CHECK(t.is_semistandard());
  auto again = decompose(t, 7);
  CHECK(again.t_plus.shape == Partition({4, 2, 1}));
  CHECK(again.t_minus.shape == Partition({5, 3, 2}));
  CHECK(again == pair);
}

TEST_CASE("decompose k=0") {
  // k=0: T+ empty, T- is the relabeled rotated conjugate of all of T.
  auto inputs = enumerate_phi_domain(2, 0);
  for (const auto& t : inputs) {
    auto pair = decompose(t, 0);
    CHECK(pair.t_plus.empty());
    CHECK(pair.t_minus.num_entries() == 6);
    CHECK(recompose(pair) == t);
  }
}

TEST_CASE("decompose/recompose round trip, exhaustive n<=4") {
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; 2 * k <= 3 * n; ++k) {
      for (const auto& t : enumerate_phi_domain(n, k)) {
        auto pair = decompose(t, k);
        CHECK(static_cast<int>(pair.t_plus.entries().size()) == k);
        CHECK(static_cast<int>(pair.t_minus.entries().size()) == 3 * n - 2 * k);
        CHECK(recompose(pair) == t);
      }
    }
  }
}

TEST_CASE("decompose n=k=2 sizes") {
  auto inputs = enumerate_phi_domain(2, 2);
  REQUIRE(inputs.size() == 2);
  for (const auto& t : inputs) {
    auto pair = decompose(t, 2);
    CHECK(pair.t_plus.num_entries() == 2);
    CHECK(pair.t_minus.num_entries() == 2);
  }
}

TEST_CASE("split_box_diamond") {
  // Running example T+ = (1,2,5,6/3,4/7): box column (2/4/7), diamond {1,3,5,6}.
  auto [box, dia] = split_box_diamond(T("1,2,5,6/3,4/7"));
  CHECK(box == T("2/4/7"));
  CHECK(dia == T("1,5,6/3"));

  auto [b1, d1] = split_box_diamond(T("1,2,3"));
  CHECK(b1.empty());
  CHECK(d1 == T("1,2,3"));

  auto [b2, d2] = split_box_diamond(T("1/2/3"));
  CHECK(b2 == T("1/2/3"));
  CHECK(d2.empty());

  CHECK_THROWS_AS(split_box_diamond(T("1/2/3/4")), DomainError);
}

TEST_CASE("split_box_diamond properties over SYT(lambda), |lambda| <= 7") {
  for (int d = 0; d <= 7; ++d) {
    for (const auto& lam : partitions_of(d)) {
      if (lam.rows() > 3) continue;
      for (const auto& t : enumerate_standard(lam)) {
        auto [box, dia] = split_box_diamond(t);
        CHECK(box.num_entries() + dia.num_entries() == d);
        CHECK(dia.shape.rows() <= 2);
        CHECK(dia.shape ==
              Partition({lam.part(0) - lam.part(2), lam.part(1) - lam.part(2)}));
      }
    }
  }
}

TEST_CASE("T+_diamond and T-_diamond have equal shapes (n<=3)") {
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; 2 * k <= 3 * n; ++k)
      for (const auto& t : enumerate_phi_domain(n, k)) {
        auto pair = decompose(t, k);
        auto dp = split_box_diamond(pair.t_plus).second;
        auto dm = split_box_diamond(pair.t_minus).second;
        CHECK(dp.shape == dm.shape);
      }
}
