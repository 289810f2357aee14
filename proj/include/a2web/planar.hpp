#pragma once

#include <string>
#include <vector>

#include "a2web/error.hpp"

namespace a2web {

// Exact rational arithmetic on small values. All arrangement predicates are
// computed exactly; overflow of the int64 representation is a hard error.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n);  // NOLINT(google-explicit-constructor)
  Rat(long long n, long long d);

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const;
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this == o || *this < o; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }
  double to_double() const { return static_cast<double>(num) / den; }
};

struct Pt {
  Rat x, y;
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

Rat cross(const Pt& o, const Pt& a, const Pt& b);  // (a-o) x (b-o)

// A directed open curve. The web-flow travel direction is points[0] -> back()
// unless travel_reversed is set.
struct Curve {
  std::vector<Pt> points;
  int arc_id = -1;           // m-diagram semicircle id (circle-depth tag), or -1
  bool travel_reversed = false;
};

// Planar subdivision induced by a set of curves. Curves may share endpoints
// (those become common vertices); any other contact except pairwise
// transversal interior crossings is a hard error.
struct PlanarMap {
  struct Vertex {
    Pt pos;
    bool is_crossing = false;
    std::vector<int> darts;  // CCW
  };
  // Edge i has darts 2i (at v[0]) and 2i+1 (at v[1]); geometry runs v[0]->v[1].
  struct Edge {
    int v0, v1;
    int curve;
    int arc_id;    // from the source curve
    bool forward;  // geometry agrees with the curve's travel direction
    std::vector<Pt> geom;
  };

  std::vector<Vertex> verts;
  std::vector<Edge> edges;

  int dart_vertex(int d) const {
    return d % 2 == 0 ? edges[d / 2].v0 : edges[d / 2].v1;
  }
  // Dart direction away from its vertex (first geometry step).
  Pt dart_dir(int d) const;
  // True if dart d points backward along its edge's travel direction, i.e.
  // the travel flow comes *into* the dart's vertex through this edge.
  bool dart_is_inflow(int d) const;
};

PlanarMap build_planar_map(const std::vector<Curve>& curves);

// CCW comparator for direction vectors (shared by map building and surgery).
bool ccw_less(const Pt& a, const Pt& b);

}  // namespace a2web
