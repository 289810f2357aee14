#include "a2web/planar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace a2web {

namespace {

long long checked(__int128 v, const char* what) {
  check(v <= INT64_MAX && v >= INT64_MIN, std::string("rational overflow in ") + what);
  return static_cast<long long>(v);
}

}  // namespace

Rat::Rat(long long n) : num(n), den(1) {}

Rat::Rat(long long n, long long d) {
  check(d != 0, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

static Rat make(__int128 n, __int128 d) {
  check(d != 0, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return Rat(checked(n / a, "rat"), checked(d / a, "rat"));
}

Rat Rat::operator+(const Rat& o) const {
  return make(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
              static_cast<__int128>(den) * o.den);
}
Rat Rat::operator-(const Rat& o) const {
  return make(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
              static_cast<__int128>(den) * o.den);
}
Rat Rat::operator*(const Rat& o) const {
  return make(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
}
Rat Rat::operator/(const Rat& o) const {
  check(o.num != 0, "rational division by zero");
  return make(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
}
Rat Rat::operator-() const {
  Rat r;
  r.num = -num;
  r.den = den;
  return r;
}
bool Rat::operator<(const Rat& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

Rat cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Pt PlanarMap::dart_dir(int d) const {
  const Edge& e = edges[d / 2];
  check(e.geom.size() >= 2, "edge without geometry");
  Pt from, to;
  if (d % 2 == 0) {
    from = e.geom.front();
    to = e.geom[1];
  } else {
    from = e.geom.back();
    to = e.geom[e.geom.size() - 2];
  }
  return Pt{to.x - from.x, to.y - from.y};
}

bool PlanarMap::dart_is_inflow(int d) const {
  const Edge& e = edges[d / 2];
  bool at_geom_end = (d % 2 == 1);
  return e.forward ? at_geom_end : !at_geom_end;
}

bool ccw_less(const Pt& a, const Pt& b) {
  auto half = [](const Pt& p) {
    // 0 for angles in [0, pi), 1 for [pi, 2pi)
    Rat zero(0);
    if (p.y > zero) return 0;
    if (p.y < zero) return 1;
    return p.x > zero ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Rat c = a.x * b.y - a.y * b.x;
  check(c != Rat(0), "coincident dart directions");
  return c > Rat(0);
}

namespace {

struct Hit {
  int seg;     // segment index on this curve
  Rat t;       // parameter within the segment, in (0,1)
  int vertex;  // crossing vertex id
};

// Proper interior intersection of two segments, if any.
bool segment_cross(const Pt& p, const Pt& q, const Pt& r, const Pt& s, Rat* t_out,
                   Rat* u_out) {
  Pt d1{q.x - p.x, q.y - p.y};
  Pt d2{s.x - r.x, s.y - r.y};
  Rat denom = d1.x * d2.y - d1.y * d2.x;
  Rat zero(0);
  if (denom == zero) {
    // parallel; collinear overlap would be a construction bug
    if (cross(p, q, r) == zero) {
      auto inside = [&](const Pt& a) {
        Rat lo = std::min(p.x, q.x), hi = std::max(p.x, q.x);
        Rat lo2 = std::min(p.y, q.y), hi2 = std::max(p.y, q.y);
        bool in_x = lo < a.x && a.x < hi;
        bool in_y = lo2 < a.y && a.y < hi2;
        return (p.x == q.x) ? in_y : in_x;
      };
      check(!inside(r) && !inside(s) && !inside(p) && !inside(q) &&
                !(p == r && q == s) && !(p == s && q == r),
            "collinear overlapping segments");
    }
    return false;
  }
  Pt pr{r.x - p.x, r.y - p.y};
  Rat t = (pr.x * d2.y - pr.y * d2.x) / denom;
  Rat u = (pr.x * d1.y - pr.y * d1.x) / denom;
  Rat one(1);
  if (t < zero || t > one || u < zero || u > one) return false;
  bool t_interior = zero < t && t < one;
  bool u_interior = zero < u && u < one;
  if (t_interior && u_interior) {
    *t_out = t;
    *u_out = u;
    return true;
  }
  // Endpoint contact: allowed only where both segments end at the same point
  // (curves sharing a terminal vertex); interior T-contacts are bugs.
  check(!t_interior && !u_interior, "curve touches interior of another curve");
  return false;
}

}  // namespace

PlanarMap build_planar_map(const std::vector<Curve>& curves) {
  PlanarMap m;
  std::map<std::pair<std::pair<long long, long long>, std::pair<long long, long long>>, int>
      vertex_at;
  auto key = [](const Pt& p) {
    return std::make_pair(std::make_pair(p.x.num, p.x.den),
                          std::make_pair(p.y.num, p.y.den));
  };
  auto get_vertex = [&](const Pt& p, bool crossing) {
    auto it = vertex_at.find(key(p));
    if (it != vertex_at.end()) {
      check(!crossing && !m.verts[it->second].is_crossing,
            "crossing coincides with another vertex");
      return it->second;
    }
    m.verts.push_back({p, crossing, {}});
    vertex_at[key(p)] = static_cast<int>(m.verts.size()) - 1;
    return static_cast<int>(m.verts.size()) - 1;
  };

  for (const auto& c : curves) {
    check(c.points.size() >= 2, "curve with fewer than 2 points");
    get_vertex(c.points.front(), false);
    get_vertex(c.points.back(), false);
  }

  // All pairwise crossings.
  std::vector<std::vector<Hit>> hits(curves.size());
  for (size_t a = 0; a < curves.size(); ++a) {
    for (size_t b = a + 1; b < curves.size(); ++b) {
      for (size_t i = 0; i + 1 < curves[a].points.size(); ++i) {
        for (size_t j = 0; j + 1 < curves[b].points.size(); ++j) {
          Rat t, u;
          if (segment_cross(curves[a].points[i], curves[a].points[i + 1],
                            curves[b].points[j], curves[b].points[j + 1], &t, &u)) {
            const Pt& p = curves[a].points[i];
            const Pt& q = curves[a].points[i + 1];
            Pt x{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
            int v = get_vertex(x, true);
            hits[a].push_back({static_cast<int>(i), t, v});
            hits[b].push_back({static_cast<int>(j), u, v});
          }
        }
      }
    }
  }

  // Split curves at crossings.
  for (size_t ci = 0; ci < curves.size(); ++ci) {
    auto& hs = hits[ci];
    std::sort(hs.begin(), hs.end(), [](const Hit& a, const Hit& b) {
      if (a.seg != b.seg) return a.seg < b.seg;
      return a.t < b.t;
    });
    for (size_t i = 0; i + 1 < hs.size(); ++i)
      check(!(hs[i].seg == hs[i + 1].seg && hs[i].t == hs[i + 1].t),
            "two crossings at the same point on one curve");

    const auto& pts = curves[ci].points;
    int prev_vertex = vertex_at.at(key(pts.front()));
    Pt prev_pt = pts.front();
    int prev_seg = 0;
    auto emit = [&](int to_vertex, const Pt& to_pt, int to_seg) {
      std::vector<Pt> geom;
      geom.push_back(prev_pt);
      for (int s = prev_seg; s < to_seg; ++s) {
        const Pt& bend = pts[s + 1];
        if (!(geom.back() == bend)) geom.push_back(bend);
      }
      if (!(geom.back() == to_pt)) geom.push_back(to_pt);
      check(geom.size() >= 2, "degenerate edge");
      int e = static_cast<int>(m.edges.size());
      m.edges.push_back({prev_vertex, to_vertex, static_cast<int>(ci),
                         curves[ci].arc_id, !curves[ci].travel_reversed, geom});
      m.verts[prev_vertex].darts.push_back(2 * e);
      m.verts[to_vertex].darts.push_back(2 * e + 1);
      prev_vertex = to_vertex;
      prev_pt = to_pt;
      prev_seg = to_seg;
    };
    for (const Hit& h : hs) {
      const Pt& a = pts[h.seg];
      const Pt& b = pts[h.seg + 1];
      Pt x{a.x + h.t * (b.x - a.x), a.y + h.t * (b.y - a.y)};
      emit(h.vertex, x, h.seg);
    }
    emit(vertex_at.at(key(pts.back())), pts.back(),
         static_cast<int>(pts.size()) - 2);
  }

  // Rotation systems.
  for (auto& v : m.verts) {
    std::sort(v.darts.begin(), v.darts.end(), [&](int a, int b) {
      return ccw_less(m.dart_dir(a), m.dart_dir(b));
    });
    check(!v.is_crossing || v.darts.size() == 4, "crossing must have degree 4");
  }
  return m;
}

}  // namespace a2web
