#include "a2web/web.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <sstream>

namespace a2web {

int Web::add_vert(char kind, int idx) {
  verts.push_back({kind, idx, true, {}});
  return static_cast<int>(verts.size()) - 1;
}

int Web::add_edge(int u, int v) {
  int e = static_cast<int>(edges.size());
  edges.push_back({{u, v}, true, {}});
  verts[u].rot.push_back(2 * e);
  verts[v].rot.push_back(2 * e + 1);
  return e;
}

int Web::boundary_vertex(char kind, int idx) const {
  for (size_t v = 0; v < verts.size(); ++v)
    if (verts[v].alive && verts[v].kind == kind && verts[v].idx == idx)
      return static_cast<int>(v);
  throw InternalError("boundary vertex not found");
}

void Web::delete_edge(int e) {
  check(edges[e].alive, "deleting dead edge");
  for (int side = 0; side < 2; ++side) {
    auto& rot = verts[edges[e].v[side]].rot;
    auto it = std::find(rot.begin(), rot.end(), 2 * e + side);
    check(it != rot.end(), "dart missing from rotation");
    rot.erase(it);
  }
  edges[e].alive = false;
}

void Web::smooth_out(int v) {
  check(verts[v].alive && degree(v) == 2, "smooth_out needs a degree-2 vertex");
  int p = verts[v].rot[0], q = verts[v].rot[1];
  int ep = p / 2, eq = q / 2;
  if (ep == eq) {
    // both ends of one edge meet here: a closed circle
    edges[ep].alive = false;
    verts[v].alive = false;
    verts[v].rot.clear();
    ++loops;
    return;
  }
  int b = q ^ 1;  // far dart of eq
  int far = dart_vertex(b);
  for (int t : edges[eq].tags) edges[ep].tags.push_back(t);
  std::sort(edges[ep].tags.begin(), edges[ep].tags.end());
  edges[ep].tags.erase(std::unique(edges[ep].tags.begin(), edges[ep].tags.end()),
                       edges[ep].tags.end());
  // extend ep's v-end to far, taking over b's slot in far's rotation
  edges[ep].v[p % 2] = far;
  auto& rot = verts[far].rot;
  auto it = std::find(rot.begin(), rot.end(), b);
  check(it != rot.end(), "dart missing from rotation");
  *it = p;
  edges[eq].alive = false;
  verts[v].alive = false;
  verts[v].rot.clear();
}

void Web::compact() {
  std::vector<int> vmap(verts.size(), -1), emap(edges.size(), -1);
  std::vector<Vert> nv;
  std::vector<Edge> ne;
  for (size_t i = 0; i < verts.size(); ++i)
    if (verts[i].alive) {
      vmap[i] = static_cast<int>(nv.size());
      nv.push_back(verts[i]);
    }
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].alive) {
      emap[e] = static_cast<int>(ne.size());
      ne.push_back(edges[e]);
      ne.back().v = {vmap[edges[e].v[0]], vmap[edges[e].v[1]]};
      check(ne.back().v[0] >= 0 && ne.back().v[1] >= 0, "edge on dead vertex");
    }
  for (auto& v : nv)
    for (auto& d : v.rot) {
      check(emap[d / 2] >= 0, "rotation holds dead edge");
      d = 2 * emap[d / 2] + d % 2;
    }
  verts = std::move(nv);
  edges = std::move(ne);
}

int Web::num_internal() const {
  int c = 0;
  for (const auto& v : verts)
    if (v.alive && v.kind == 'i') ++c;
  return c;
}

std::vector<char> Web::polarity(bool allow_free) const {
  std::vector<char> col(verts.size(), '?');
  std::deque<int> queue;
  for (size_t v = 0; v < verts.size(); ++v) {
    if (!verts[v].alive) continue;
    if (verts[v].kind == 'b') {
      col[v] = 'o';
      queue.push_back(static_cast<int>(v));
    } else if (verts[v].kind == 't') {
      col[v] = 'k';
      queue.push_back(static_cast<int>(v));
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int d : verts[v].rot) {
      int w = dart_vertex(d ^ 1);
      char want = col[v] == 'o' ? 'k' : 'o';
      if (col[w] == '?') {
        col[w] = want;
        queue.push_back(w);
      } else {
        check(col[w] == want, "sink/source constraints unsatisfiable");
      }
    }
  }
  for (size_t v = 0; v < verts.size(); ++v)
    if (verts[v].alive && col[v] == '?')
      check(allow_free, "component does not reach the boundary");
  return col;
}

FaceStructure Web::faces(bool crossing_jumps) const {
  FaceStructure fs;
  int E = static_cast<int>(edges.size());
  int n_web_darts = 2 * E;

  std::vector<int> tops(n_top, -1), bots(n_bot, -1);
  for (size_t v = 0; v < verts.size(); ++v) {
    if (!verts[v].alive) continue;
    if (verts[v].kind == 't') {
      check(verts[v].idx >= 1 && verts[v].idx <= n_top && tops[verts[v].idx - 1] < 0,
            "bad top boundary indexing");
      tops[verts[v].idx - 1] = static_cast<int>(v);
      check(degree(static_cast<int>(v)) <= 1, "boundary vertex degree above 1");
    } else if (verts[v].kind == 'b') {
      check(verts[v].idx >= 1 && verts[v].idx <= n_bot && bots[verts[v].idx - 1] < 0,
            "bad bottom boundary indexing");
      bots[verts[v].idx - 1] = static_cast<int>(v);
      check(degree(static_cast<int>(v)) <= 1, "boundary vertex degree above 1");
    }
  }
  for (int v : tops) check(v >= 0, "missing top boundary vertex");
  for (int v : bots) check(v >= 0, "missing bottom boundary vertex");

  std::vector<std::vector<int>> rot(verts.size());
  for (size_t v = 0; v < verts.size(); ++v) rot[v] = verts[v].rot;
  std::vector<int> theta(n_web_darts);
  for (int d = 0; d < n_web_darts; ++d) theta[d] = d ^ 1;

  auto new_frame_edge = [&](int& du, int& dw) {
    du = static_cast<int>(theta.size());
    dw = du + 1;
    theta.push_back(dw);
    theta.push_back(du);
  };

  int f_inf_orbit_dart = -1;

  bool has_top = n_top > 0, has_bot = n_bot > 0;
  if (has_top || has_bot) {
    std::vector<int> te(n_top, -1), tw(n_top, -1), be(n_bot, -1), bw(n_bot, -1);
    for (int i = 0; i + 1 < n_top; ++i) new_frame_edge(te[i], tw[i + 1]);
    for (int i = 0; i + 1 < n_bot; ++i) new_frame_edge(be[i], bw[i + 1]);
    if (has_top && has_bot) {
      new_frame_edge(te[n_top - 1], be[n_bot - 1]);  // right connector
      new_frame_edge(bw[0], tw[0]);                  // left wall
    } else if (has_bot) {
      new_frame_edge(be[n_bot - 1], bw[0]);  // close under the line
    } else {
      new_frame_edge(te[n_top - 1], tw[0]);  // close above the line
    }
    for (int i = 0; i < n_bot; ++i) {
      int v = bots[i];
      int web_dart = rot[v].empty() ? -1 : rot[v][0];
      rot[v].clear();
      rot[v].push_back(be[i]);
      if (web_dart >= 0) rot[v].push_back(web_dart);
      rot[v].push_back(bw[i]);
    }
    for (int i = 0; i < n_top; ++i) {
      int v = tops[i];
      int web_dart = rot[v].empty() ? -1 : rot[v][0];
      rot[v].clear();
      rot[v].push_back(te[i]);
      rot[v].push_back(tw[i]);
      if (web_dart >= 0) rot[v].push_back(web_dart);
    }
    // f_inf: the face sweeping the corner left of the leftmost boundary
    // vertex, inside the strip: below the top line, above the bottom line
    if (has_bot)
      f_inf_orbit_dart = bw[0];
    else
      f_inf_orbit_dart = rot[tops[0]].size() == 3 ? rot[tops[0]][2] : te[0];
  }

  int total_darts = static_cast<int>(theta.size());
  std::vector<int> rot_next(total_darts, -1);
  for (size_t v = 0; v < verts.size(); ++v) {
    if (!verts[v].alive || rot[v].empty()) continue;
    int n = static_cast<int>(rot[v].size());
    for (int i = 0; i < n; ++i) rot_next[rot[v][i]] = rot[v][(i + 1) % n];
  }

  fs.face_of_dart.assign(total_darts, -1);
  std::vector<std::vector<int>> orbits;
  for (int d0 = 0; d0 < total_darts; ++d0) {
    if (fs.face_of_dart[d0] >= 0 || rot_next[d0] < 0) continue;
    if (d0 < n_web_darts && !edges[d0 / 2].alive) continue;
    int f = fs.n_faces++;
    std::vector<int> orbit;
    int d = d0;
    do {
      fs.face_of_dart[d] = f;
      orbit.push_back(d);
      d = rot_next[theta[d]];
      check(d >= 0, "face traversal hit a detached dart");
    } while (d != d0);
    orbits.push_back(std::move(orbit));
  }

  fs.web_size.assign(fs.n_faces, 0);
  fs.touches_frame.assign(fs.n_faces, false);
  fs.face_darts.assign(fs.n_faces, {});
  for (int f = 0; f < fs.n_faces; ++f)
    for (int d : orbits[f]) {
      if (d < n_web_darts) {
        fs.web_size[f]++;
        fs.face_darts[f].push_back(d);
      } else {
        fs.touches_frame[f] = true;
      }
    }

  if (f_inf_orbit_dart >= 0) fs.f_inf = fs.face_of_dart[f_inf_orbit_dart];

  fs.depth.assign(fs.n_faces, -1);
  fs.arc_mask.assign(fs.n_faces, 0);
  if (fs.f_inf >= 0) {
    std::vector<std::vector<std::pair<int, uint64_t>>> adj(fs.n_faces);
    for (int e = 0; e < E; ++e) {
      if (!edges[e].alive) continue;
      uint64_t mask = 0;
      for (int t : edges[e].tags) {
        check(t >= 0 && t < 64, "arc tag out of range");
        mask |= 1ull << t;
      }
      int fa = fs.face_of_dart[2 * e], fb = fs.face_of_dart[2 * e + 1];
      adj[fa].push_back({fb, mask});
      adj[fb].push_back({fa, mask});
    }
    if (crossing_jumps) {
      // passing a 4-valent point between opposite corners counts as a
      // single edge crossing
      for (size_t v = 0; v < verts.size(); ++v) {
        if (!verts[v].alive || verts[v].kind != 'i' || rot[v].size() != 4) continue;
        uint64_t mask = 0;
        for (int d : rot[v])
          for (int t : edges[d / 2].tags) mask |= 1ull << t;
        for (int i = 0; i < 2; ++i) {
          int fa = fs.face_of_dart[rot_next[rot[v][i]]];
          int fb = fs.face_of_dart[rot_next[rot[v][i + 2]]];
          adj[fa].push_back({fb, mask});
          adj[fb].push_back({fa, mask});
        }
      }
    }
    std::deque<int> queue;
    fs.depth[fs.f_inf] = 0;
    queue.push_back(fs.f_inf);
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (auto [g, mask] : adj[f]) {
        if (fs.depth[g] < 0) {
          fs.depth[g] = fs.depth[f] + 1;
          fs.arc_mask[g] = fs.arc_mask[f] ^ mask;
          queue.push_back(g);
        }
      }
    }
  }

  fs.delta_top.assign(n_top, 0);
  fs.delta_bot.assign(n_bot, 0);
  auto depth_after = [&](int dart) {
    int f = fs.face_of_dart[rot_next[dart]];
    check(f >= 0 && fs.depth[f] >= 0, "delta: face unreachable");
    return fs.depth[f];
  };
  for (int i = 0; i < n_bot; ++i) {
    int v = bots[i];
    if (rot[v].size() != 3) continue;  // bare vertex, no web edge
    int east = rot[v][0], web = rot[v][1];
    fs.delta_bot[i] = depth_after(east) - depth_after(web);
  }
  for (int i = 0; i < n_top; ++i) {
    int v = tops[i];
    if (rot[v].size() != 3) continue;
    int west = rot[v][1], web = rot[v][2];
    fs.delta_top[i] = depth_after(web) - depth_after(west);
  }
  return fs;
}

bool Web::is_nonelliptic() const {
  FaceStructure fs = faces();
  for (int f = 0; f < fs.n_faces; ++f)
    if (!fs.touches_frame[f] && f != fs.f_inf && fs.web_size[f] < 6) return false;
  return true;
}

std::vector<int> circle_depths_of_faces(const FaceStructure& fs) {
  std::vector<int> out(fs.n_faces, -1);
  for (int f = 0; f < fs.n_faces; ++f)
    if (fs.depth[f] >= 0) out[f] = std::popcount(fs.arc_mask[f]);
  return out;
}

namespace {

// Discovery order anchored at the boundary (t1..tk then b1..bm), breadth
// first, scanning each vertex's rotation from its entry dart. Isomorphic
// anchored maps get identical traversals.
void canonical_order(const Web& w, std::vector<int>& order, std::vector<int>& entry) {
  order.clear();
  entry.assign(w.verts.size(), -1);
  std::vector<int> newid(w.verts.size(), -1);
  std::vector<int> anchors;
  for (int i = 1; i <= w.n_top; ++i) anchors.push_back(w.boundary_vertex('t', i));
  for (int i = 1; i <= w.n_bot; ++i) anchors.push_back(w.boundary_vertex('b', i));
  std::deque<int> queue;
  auto visit = [&](int v, int in_dart) {
    if (newid[v] >= 0) return;
    newid[v] = static_cast<int>(order.size());
    order.push_back(v);
    entry[v] = in_dart;
    queue.push_back(v);
  };
  for (int a : anchors) {
    if (newid[a] >= 0) continue;
    visit(a, w.verts[a].rot.empty() ? -1 : w.verts[a].rot[0]);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      int n = static_cast<int>(w.verts[v].rot.size());
      int start = 0;
      if (entry[v] >= 0) {
        auto it = std::find(w.verts[v].rot.begin(), w.verts[v].rot.end(), entry[v]);
        start = static_cast<int>(it - w.verts[v].rot.begin());
      }
      for (int i = 0; i < n; ++i) {
        int d = w.verts[v].rot[(start + i) % n];
        visit(w.dart_vertex(d ^ 1), d ^ 1);
      }
    }
  }
  for (size_t v = 0; v < w.verts.size(); ++v)
    check(!w.verts[v].alive || newid[v] >= 0, "web has a component off the boundary");
}

}  // namespace

std::string Web::canonical_form() const {
  check(loops == 0, "canonical form on unreduced web");
  std::vector<char> pol = polarity();
  std::vector<int> order, entry;
  canonical_order(*this, order, entry);
  std::vector<int> newid(verts.size(), -1);
  for (size_t i = 0; i < order.size(); ++i) newid[order[i]] = static_cast<int>(i);
  auto start_of = [&](int v) {
    if (entry[v] < 0) return 0;
    auto it = std::find(verts[v].rot.begin(), verts[v].rot.end(), entry[v]);
    return static_cast<int>(it - verts[v].rot.begin());
  };

  std::ostringstream os;
  os << n_top << '|' << n_bot << '|';
  for (int v : order) {
    os << verts[v].kind;
    if (verts[v].kind != 'i')
      os << verts[v].idx;
    else
      os << pol[v];
    os << '[';
    int n = static_cast<int>(verts[v].rot.size());
    int start = start_of(v);
    for (int i = 0; i < n; ++i) {
      int d = verts[v].rot[(start + i) % n];
      int w = dart_vertex(d ^ 1);
      int wn = static_cast<int>(verts[w].rot.size());
      auto wit = std::find(verts[w].rot.begin(), verts[w].rot.end(), d ^ 1);
      int wslot = static_cast<int>(wit - verts[w].rot.begin());
      os << newid[w] << '.' << ((wslot - start_of(w) + wn) % wn) << ';';
    }
    os << ']';
  }
  return os.str();
}

std::string Web::to_text() const {
  Web w = *this;
  w.compact();
  std::vector<char> pol = w.polarity();
  std::vector<int> order, entry;
  canonical_order(w, order, entry);

  // number internal vertices and edges in traversal order
  std::vector<int> internal_no(w.verts.size(), 0);
  std::vector<int> eid(w.edges.size(), -1);
  std::vector<int> eorder;
  int next_no = 1;
  for (int v : order) {
    if (w.verts[v].kind == 'i') internal_no[v] = next_no++;
    int n = static_cast<int>(w.verts[v].rot.size());
    int start = 0;
    if (entry[v] >= 0) {
      auto it = std::find(w.verts[v].rot.begin(), w.verts[v].rot.end(), entry[v]);
      start = static_cast<int>(it - w.verts[v].rot.begin());
    }
    for (int i = 0; i < n; ++i) {
      int e = w.verts[v].rot[(start + i) % n] / 2;
      if (eid[e] < 0) {
        eid[e] = static_cast<int>(eorder.size());
        eorder.push_back(e);
      }
    }
  }

  auto name = [&](int v) {
    std::ostringstream n;
    n << w.verts[v].kind << (w.verts[v].kind == 'i' ? internal_no[v] : w.verts[v].idx);
    return n.str();
  };
  std::ostringstream os;
  os << "top=";
  for (int i = 0; i < w.n_top; ++i) os << '+';
  os << ";bot=";
  for (int i = 0; i < w.n_bot; ++i) os << '-';
  os << '\n';
  for (size_t i = 0; i < eorder.size(); ++i) {
    int e = eorder[i];
    int a = w.edges[e].v[0], b = w.edges[e].v[1];
    if (pol[a] != 'o') std::swap(a, b);
    check(pol[a] == 'o' && pol[b] == 'k', "edge not source->sink");
    os << 'e' << i << ": " << name(a) << '>' << name(b) << '\n';
  }
  for (int v : order) {
    if (w.verts[v].kind != 'i') continue;
    os << "rot " << name(v) << ':';
    for (size_t i = 0; i < w.verts[v].rot.size(); ++i)
      os << (i ? "," : " ") << 'e' << eid[w.verts[v].rot[i] / 2];
    os << '\n';
  }
  return os.str();
}

Web Web::from_text(const std::string& s) {
  Web w;
  std::istringstream in(s);
  std::string line;
  std::map<std::string, int> vid;
  struct PendingEdge {
    std::string a, b;
  };
  std::vector<PendingEdge> pend;
  std::vector<std::pair<std::string, std::vector<int>>> rots;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("top=", 0) == 0) {
      auto semi = line.find(";bot=");
      if (semi == std::string::npos) throw ParseError("web: missing bot=");
      for (char c : line.substr(4, semi - 4)) {
        if (c != '+') throw ParseError("web: top signs must be +");
        w.n_top++;
      }
      for (char c : line.substr(semi + 5)) {
        if (c != '-') throw ParseError("web: bottom signs must be -");
        w.n_bot++;
      }
      header = true;
    } else if (line[0] == 'e') {
      auto colon = line.find(": ");
      auto arrow = line.find('>');
      if (colon == std::string::npos || arrow == std::string::npos)
        throw ParseError("web: bad edge line: " + line);
      pend.push_back({line.substr(colon + 2, arrow - colon - 2), line.substr(arrow + 1)});
    } else if (line.rfind("rot ", 0) == 0) {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("web: bad rot line");
      std::string vname = line.substr(4, colon - 4);
      std::vector<int> es;
      std::stringstream ls(line.substr(colon + 1));
      std::string tok;
      while (std::getline(ls, tok, ',')) {
        size_t p = tok.find('e');
        if (p == std::string::npos) throw ParseError("web: bad rot entry");
        try {
          es.push_back(std::stoi(tok.substr(p + 1)));
        } catch (const std::logic_error&) {
          throw ParseError("web: bad rot entry");
        }
      }
      rots.push_back({vname, es});
    } else {
      throw ParseError("web: unrecognized line: " + line);
    }
  }
  if (!header) throw ParseError("web: missing boundary header");
  auto get = [&](const std::string& name) {
    auto it = vid.find(name);
    if (it != vid.end()) return it->second;
    if (name.size() < 2) throw ParseError("web: bad vertex name " + name);
    char kind = name[0];
    int idx = 0;
    try {
      idx = std::stoi(name.substr(1));
    } catch (const std::logic_error&) {
      throw ParseError("web: bad vertex name " + name);
    }
    if (kind != 't' && kind != 'b' && kind != 'i')
      throw ParseError("web: bad vertex name " + name);
    int v = w.add_vert(kind, kind == 'i' ? 0 : idx);
    vid[name] = v;
    return v;
  };
  for (const auto& pe : pend) w.add_edge(get(pe.a), get(pe.b));
  for (const auto& [vname, es] : rots) {
    auto it = vid.find(vname);
    if (it == vid.end()) throw ParseError("web: rot for unknown vertex " + vname);
    int v = it->second;
    std::vector<int> new_rot;
    std::vector<int> avail = w.verts[v].rot;
    for (int e : es) {
      if (e < 0 || e >= static_cast<int>(w.edges.size()))
        throw ParseError("web: rot names unknown edge");
      bool found = false;
      for (auto a = avail.begin(); a != avail.end(); ++a)
        if (*a / 2 == e) {
          new_rot.push_back(*a);
          avail.erase(a);
          found = true;
          break;
        }
      if (!found) throw ParseError("web: rotation edge not incident");
    }
    if (!avail.empty()) throw ParseError("web: rotation misses incident edges");
    w.verts[v].rot = new_rot;
  }
  try {
    w.polarity();
  } catch (const InternalError& e) {
    throw ParseError(std::string("web: ") + e.what());
  }
  return w;
}

namespace {

std::vector<int> merged_tags(const Web& w, const std::vector<int>& darts) {
  std::vector<int> tags;
  for (int d : darts)
    for (int t : w.edges[d / 2].tags) tags.push_back(t);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  return tags;
}

void split_crossing(Web& w, const PlanarMap& pm, int v) {
  auto rot = w.verts[v].rot;
  check(rot.size() == 4, "crossing degree");
  std::array<bool, 4> in{};
  int in_count = 0;
  for (int i = 0; i < 4; ++i) {
    in[i] = pm.dart_is_inflow(rot[i]);
    if (in[i]) ++in_count;
  }
  check(in_count == 2, "crossing needs two inflows");
  int s = -1;
  for (int i = 0; i < 4; ++i)
    if (in[i] && in[(i + 1) % 4]) s = i;
  check(s >= 0, "crossing inflows not adjacent in rotation");

  int vin = w.add_vert('i');
  int vout = w.add_vert('i');
  int a = rot[s], b = rot[(s + 1) % 4];
  int c = rot[(s + 2) % 4], d = rot[(s + 3) % 4];
  auto move_dart = [&](int dd, int to) { w.edges[dd / 2].v[dd % 2] = to; };
  move_dart(a, vin);
  move_dart(b, vin);
  move_dart(c, vout);
  move_dart(d, vout);
  std::vector<int> tags = merged_tags(w, {a, b, c, d});
  w.verts[v].alive = false;
  w.verts[v].rot.clear();
  int e = w.add_edge(vin, vout);
  w.edges[e].tags = tags;
  w.verts[vin].rot = {a, b, 2 * e};
  w.verts[vout].rot = {c, d, 2 * e + 1};
}

void lift_boundary(Web& w, const PlanarMap& pm, int v) {
  auto rot = w.verts[v].rot;
  check(rot.size() == 2, "lift needs degree 2");
  int x = rot[0], y = rot[1];
  Pt dx = pm.dart_dir(x), dy = pm.dart_dir(y);
  int lift = w.add_vert('i');
  w.edges[x / 2].v[x % 2] = lift;
  w.edges[y / 2].v[y % 2] = lift;
  std::vector<int> tags = merged_tags(w, {x, y});
  w.verts[v].rot.clear();
  int e = w.add_edge(v, lift);
  w.edges[e].tags = tags;
  // the lift edge points from the new vertex back at the boundary line
  Pt back{Rat(0), w.verts[v].kind == 'b' ? Rat(-1) : Rat(1)};
  std::vector<std::pair<Pt, int>> ds = {{dx, x}, {dy, y}, {back, 2 * e + 1}};
  std::sort(ds.begin(), ds.end(),
            [](const auto& a, const auto& b) { return ccw_less(a.first, b.first); });
  w.verts[lift].rot = {ds[0].second, ds[1].second, ds[2].second};
}

}  // namespace

Web web_from_planar(const PlanarMap& pm, int n_top, int n_bot, bool do_trivalize) {
  Web w;
  w.n_top = n_top;
  w.n_bot = n_bot;
  Rat one(1), zero(0);
  for (const auto& pv : pm.verts) {
    if (pv.is_crossing) {
      w.add_vert('i');
    } else {
      check(pv.pos.x.den == 1, "boundary vertex at non-integer position");
      int idx = static_cast<int>(pv.pos.x.num);
      if (pv.pos.y == one)
        w.add_vert('t', idx);
      else if (pv.pos.y == zero)
        w.add_vert('b', idx);
      else
        throw InternalError("curve endpoint off the boundary lines");
    }
  }
  for (const auto& pe : pm.edges) {
    Web::Edge e;
    e.v = {pe.v0, pe.v1};
    if (pe.arc_id >= 0) e.tags = {pe.arc_id};
    w.edges.push_back(e);
  }
  for (size_t v = 0; v < pm.verts.size(); ++v) w.verts[v].rot = pm.verts[v].darts;
  if (!do_trivalize) return w;

  for (size_t v = 0; v < pm.verts.size(); ++v)
    if (pm.verts[v].is_crossing) split_crossing(w, pm, static_cast<int>(v));
  for (size_t v = 0; v < pm.verts.size(); ++v)
    if (!pm.verts[v].is_crossing && w.verts[v].alive &&
        w.degree(static_cast<int>(v)) == 2)
      lift_boundary(w, pm, static_cast<int>(v));
  for (size_t v = 0; v < w.verts.size(); ++v) {
    if (!w.verts[v].alive) continue;
    if (w.verts[v].kind == 'i')
      check(w.degree(static_cast<int>(v)) == 3, "internal vertex not trivalent");
    else
      check(w.degree(static_cast<int>(v)) == 1, "boundary vertex not degree 1");
  }
  w.polarity();  // orientations must be satisfiable
  return w;
}

}  // namespace a2web
