#pragma once

#include <string>
#include <utility>
#include <vector>

#include "a2web/tableaux.hpp"
#include "a2web/web.hpp"

namespace a2web {

struct Permutation {
  std::vector<int> images;  // one-line notation, values 1..size

  Permutation() = default;
  explicit Permutation(std::vector<int> im);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }  // 1-based
  Permutation inverse() const;
  bool operator==(const Permutation& o) const { return images == o.images; }

  std::string to_string() const;  // "[4,2,1,5,3]"
  static Permutation from_string(const std::string& s);
};

// RS correspondence in the recording-first convention: sigma -> (R, Q) with
// Q built by row insertion of sigma(1..l) and R recording new boxes.
std::pair<Tableau, Tableau> rs(const Permutation& sigma);
Permutation rs_inverse(const Tableau& r, const Tableau& q);

bool is_321_avoiding(const Permutation& sigma);

struct LFRPartition {
  std::vector<int> L, F, R;  // sigma(i) < i, = i, > i
};
LFRPartition lfr(const Permutation& sigma);

// Boundary endpoint of a permutation diagram: side 't' or 'b', 1-based index.
struct Endpoint {
  char side;
  int index;
  bool operator==(const Endpoint& o) const { return side == o.side && index == o.index; }
  bool operator<(const Endpoint& o) const {
    if (side != o.side) return side > o.side;  // 't' before 'b'
    return index < o.index;
  }
};

struct TripResult {
  Endpoint end;
  int turns;
};

// Travel from a boundary vertex, turning at every crossing (each crossing
// resolved as its Temperley-Lieb smoothing).
TripResult trip(const Permutation& sigma, Endpoint start);

struct Matching {
  int ell = 0;
  std::vector<std::pair<Endpoint, Endpoint>> pairs;
  bool is_noncrossing() const;
  std::string to_string() const;  // "t1-b4,t2-b1,..."
  bool operator<(const Matching& o) const;
  bool operator==(const Matching& o) const { return ell == o.ell && pairs == o.pairs; }
};

Matching temperley_lieb(const Permutation& sigma);

// Flat wiring diagram of a 321-avoiding permutation with face path depths
// and boundary depth differences.
struct PermDiagram {
  Permutation sigma;
  Web flat;  // 4-valent crossings, not trivalized
  FaceStructure fs;
  std::vector<int> delta_top, delta_bot;
};

PermDiagram diagram(const Permutation& sigma);

// (S+, S-) built from the depth differences; equals rs(sigma) by the theory.
std::pair<Tableau, Tableau> psi(const Permutation& sigma);

}  // namespace a2web
