#include "a2web/algebra.hpp"

#include <random>
#include <set>

#include "a2web/error.hpp"
#include "a2web/tableaux.hpp"
#include "doctest.h"

using namespace a2web;

namespace {

WebSum fsum(int i, int k) { return word_product({i}, k); }

}  // namespace

TEST_CASE("generators") {
  Web f1 = generator_f(1, 2);
  CHECK(f1.num_internal() == 2);
  CHECK(f1.is_nonelliptic());
  CHECK(f1.canonical_form() != identity_web(2).canonical_form());
  CHECK_THROWS_AS(generator_f(2, 2), DomainError);
  CHECK_THROWS_AS(generator_f(0, 3), DomainError);
}

TEST_CASE("stacking produces reducible faces") {
  // f1 * f1 contains a bigon before reduction
  Web prod = stack(generator_f(1, 2), generator_f(1, 2));
  FaceStructure fs = prod.faces();
  bool bigon = false;
  for (int f = 0; f < fs.n_faces; ++f)
    if (!fs.touches_frame[f] && f != fs.f_inf && fs.web_size[f] == 2) bigon = true;
  CHECK(bigon);
  CHECK(!prod.is_nonelliptic());

  // stacking with the identity is a no-op
  Web w = generator_f(1, 3);
  CHECK(stack(identity_web(3), w).canonical_form() == w.canonical_form());
  CHECK(stack(w, identity_web(3)).canonical_form() == w.canonical_form());
  CHECK_THROWS_AS(stack(generator_f(1, 2), generator_f(1, 3)), DomainError);
}

TEST_CASE("R1: f1*f1 = 2*f1 in Z2") {
  WebSum prod = multiply(fsum(1, 2), fsum(1, 2));
  CHECK(prod == fsum(1, 2) * 2);
}

TEST_CASE("g1*g1 = 6*g1 in Z3 via M2 then M1") {
  WebSum g1 = generator_g(1, 3);
  CHECK(g1.is_single_web(1));
  // the g web is the determinant projector: a sink tripod under a source
  // tripod, two internal vertices
  CHECK(g1.terms.begin()->second.first.num_internal() == 2);
  CHECK(multiply(g1, g1) == g1 * 6);
}

TEST_CASE("f1 f2 f1 = g1 + f1 in Z3") {
  WebSum lhs = word_product({1, 2, 1}, 3);
  WebSum rhs = generator_g(1, 3) + fsum(1, 3);
  CHECK(lhs == rhs);
  CHECK(lhs.terms.size() == 2);
}

TEST_CASE("verify_relations reports the printed relations") {
  // R1-R4 and Rb hold as printed. The printed Ra fails exactly for
  // i = j-1 and i = j+2, Rc fails, and Rd holds with +2 instead of -2; all
  // checked against the operator action on the tensor power (see the R
  // pattern tests below). The reporter must flag exactly those instances.
  for (int k = 2; k <= 4; ++k) {
    auto checks = verify_relations(k);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      INFO(c.name, " ", c.instance);
      if (c.name == "Rc" || c.name == "Rd") {
        CHECK(!c.pass);
      } else if (c.name == "Ra") {
        // instance names are "fi*gj == gj*fi"
        int i = std::stoi(c.instance.substr(1));
        int j = std::stoi(c.instance.substr(c.instance.find("*g") + 2));
        CHECK(c.pass == !(i == j - 1 || i == j + 2));
      } else {
        CHECK(c.pass);
      }
    }
  }
  // k=2 has only R1 instances
  auto k2 = verify_relations(2);
  for (const auto& c : k2) CHECK(c.name == "R1");
  CHECK(k2.size() == 1);
}

TEST_CASE("corrected relation pattern (operator-verified forms)") {
  for (int k = 3; k <= 5; ++k) {
    for (int j = 1; j <= k - 2; ++j) {
      WebSum g = generator_g(j, k);
      // f_i g_i = +2 g_i = f_{i+1} g_i
      CHECK(multiply(fsum(j, k), g) == g * 2);
      CHECK(multiply(fsum(j + 1, k), g) == g * 2);
      // commutation holds except one-strand overlap
      for (int i = 1; i <= k - 1; ++i) {
        bool commutes = multiply(fsum(i, k), g) == multiply(g, fsum(i, k));
        CHECK(commutes == !(i == j - 1 || i == j + 2));
      }
    }
  }
  // g1 g3 g1 is not proportional to g1 in Z_5
  WebSum g1 = generator_g(1, 5), g3 = generator_g(3, 5);
  WebSum prod = multiply(multiply(g1, g3), g1);
  CHECK(prod != g1 * Coeff(-2));
  CHECK(prod != g1 * Coeff(2));
  // it reduces to 2 * (a single basis web distinct from the g1 web)
  REQUIRE(prod.terms.size() == 1);
  CHECK(prod.terms.begin()->second.second == 2);
  CHECK(prod.terms.begin()->first != g1.terms.begin()->first);
}

TEST_CASE("confluence under randomized rule orders") {
  std::mt19937 rng(12345);
  std::vector<std::vector<int>> words = {
      {1, 2, 1}, {1, 2, 1, 2}, {1, 1, 2, 2, 1}, {2, 1, 2, 1, 2, 1}};
  for (const auto& word : words) {
    for (int k = 3; k <= 4; ++k) {
      WebSum base = word_product(word, k);
      for (int trial = 0; trial < 20; ++trial) {
        WebSum r = word_product(word, k, &rng);
        CHECK(r == base);
      }
    }
  }
}

TEST_CASE("associativity on basis webs") {
  std::mt19937 rng(7);
  for (int k = 2; k <= 4; ++k) {
    auto basis = generator_closure(k);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      WebSum a, b, c;
      a.n_top = b.n_top = c.n_top = k;
      a.n_bot = b.n_bot = c.n_bot = k;
      a.add(basis[pick(rng)], 1);
      b.add(basis[pick(rng)], 1);
      c.add(basis[pick(rng)], 1);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("dimension counts match the tableau enumeration") {
  for (int k = 1; k <= 3; ++k) {
    auto basis = generator_closure(k);
    auto ssyt = enumerate_phi_domain(k, k);
    CHECK(basis.size() == ssyt.size());
    for (const auto& w : basis) CHECK(w.is_nonelliptic());
  }
  CHECK(generator_closure(2).size() == 2);
}
