#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "a2web/planar.hpp"

namespace a2web {

struct FaceStructure {
  int n_faces = 0;
  int f_inf = -1;
  std::vector<int> face_of_dart;   // indexed by dart id (web + frame darts)
  std::vector<int> depth;          // per face; -1 where unreachable
  std::vector<int> web_size;       // web-dart incidences per face
  std::vector<bool> touches_frame; // face has a frame dart
  std::vector<std::vector<int>> face_darts;  // web darts per face, orbit order
  std::vector<int> delta_top, delta_bot;     // path depth differences per vertex
  std::vector<uint64_t> arc_mask;  // arcs containing each face (parity oracle)
};

// Directed planar web as a combinatorial map. Vertices carry counterclockwise
// rotation systems; boundary vertices sit on the top (+, sinks) or bottom
// (-, sources) line and have degree one. Edge directions are derived from the
// sink/source bipartition, not stored.
struct Web {
  struct Vert {
    char kind = 'i';  // 't', 'b', 'i'
    int idx = 0;      // 1-based boundary position for 't'/'b'
    bool alive = true;
    std::vector<int> rot;  // CCW darts; dart d = 2*edge + end
  };
  struct Edge {
    std::array<int, 2> v{-1, -1};
    bool alive = true;
    std::vector<int> tags;  // arc ids whose half-disk membership the edge toggles
  };

  int n_top = 0, n_bot = 0;
  std::vector<Vert> verts;
  std::vector<Edge> edges;
  int loops = 0;  // vertex-free closed circles (mid-reduction only)

  int dart_vertex(int d) const { return edges[d / 2].v[d % 2]; }
  int degree(int v) const { return static_cast<int>(verts[v].rot.size()); }
  int add_vert(char kind, int idx = 0);
  int add_edge(int u, int v);  // appends darts to both rotation lists
  int boundary_vertex(char kind, int idx) const;

  // Remove a degree-2 vertex, joining its two edges (or producing a free
  // loop). The surviving edge keeps the union of both tag sets.
  void smooth_out(int v);
  void delete_edge(int e);  // detaches darts from rotations
  void compact();           // drop dead verts/edges, renumber

  int num_internal() const;
  // Sink/source bipartition: 'o' = source, 'k' = sink. Hard error on
  // conflict; components not reaching the boundary are an error unless
  // allow_free (their colouring is not determined).
  std::vector<char> polarity(bool allow_free = false) const;

  FaceStructure faces(bool crossing_jumps = false) const;
  bool is_nonelliptic() const;

  std::string canonical_form() const;
  std::string to_text() const;
  static Web from_text(const std::string& s);
};

// Translate an arrangement into a web. Curve endpoints must lie on y=0
// (bottom, x = 1..n_bot) or y=1 (top, x = 1..n_top). With do_trivalize,
// crossings become pairs of trivalent vertices and degree-2 boundary
// vertices are lifted; otherwise crossings stay as degree-4 vertices.
Web web_from_planar(const PlanarMap& pm, int n_top, int n_bot, bool do_trivalize);

// Number of m-diagram arcs above each face, by Jordan-curve parity along the
// dual traversal; independent of the shortest-path depth computation.
std::vector<int> circle_depths_of_faces(const FaceStructure& fs);

}  // namespace a2web
