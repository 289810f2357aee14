#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "a2web/web.hpp"

namespace a2web {

using Coeff = boost::multiprecision::cpp_int;

// Integer combination of nonelliptic webs over a common boundary.
struct WebSum {
  int n_top = 0, n_bot = 0;
  std::map<std::string, std::pair<Web, Coeff>> terms;  // canonical form -> term

  void add(const Web& w, const Coeff& c);
  bool operator==(const WebSum& o) const;
  bool is_single_web(Coeff expected = 1) const;
  WebSum operator+(const WebSum& o) const;
  WebSum operator-(const WebSum& o) const;
  WebSum operator*(const Coeff& c) const;
  std::string to_string() const;  // "1*<web#hash> + ..." with web bodies
};

// The k-strand identity web of Z_k (k pluses up, k minuses down).
Web identity_web(int k);

// Generator f_i: k-2 vertical strands plus the cap-cup web on i, i+1.
Web generator_f(int i, int k);

// g_i = f_i f_{i+1} f_i - f_i; also checked against the other expression and
// that it reduces to a single nonelliptic web with coefficient 1.
WebSum generator_g(int i, int k);

// Place `top` above `bottom` and concatenate; interface vertices are erased.
// The result may contain elliptic faces and free circles.
Web stack(const Web& top, const Web& bottom);

// Apply M1 (circle = 3), M2 (bigon = 2), M3 (square = two smoothings) until
// every term is nonelliptic. With an RNG, rule sites are picked at random;
// otherwise deterministically.
WebSum reduce(const Web& w, std::mt19937* rng = nullptr);

WebSum multiply(const WebSum& a, const WebSum& b, std::mt19937* rng = nullptr);

WebSum word_product(const std::vector<int>& f_indices, int k,
                    std::mt19937* rng = nullptr);

struct RelationCheck {
  std::string name;      // "R1", ..., "Rd"
  std::string instance;  // e.g. "f1*f1 == 2*f1"
  bool pass;
};

std::vector<RelationCheck> verify_relations(int k);

// All basis webs reachable from the identity by multiplying by generators.
std::vector<Web> generator_closure(int k);

}  // namespace a2web
