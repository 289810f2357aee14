#include "a2web/algebra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "a2web/error.hpp"

namespace a2web {

void WebSum::add(const Web& w, const Coeff& c) {
  if (c == 0) return;
  std::string key = w.canonical_form();
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, std::make_pair(w, c));
  } else {
    it->second.second += c;
    if (it->second.second == 0) terms.erase(it);
  }
}

bool WebSum::operator==(const WebSum& o) const {
  if (n_top != o.n_top || n_bot != o.n_bot || terms.size() != o.terms.size())
    return false;
  for (const auto& [key, term] : terms) {
    auto it = o.terms.find(key);
    if (it == o.terms.end() || it->second.second != term.second) return false;
  }
  return true;
}

bool WebSum::is_single_web(Coeff expected) const {
  return terms.size() == 1 && terms.begin()->second.second == expected;
}

WebSum WebSum::operator+(const WebSum& o) const {
  require(n_top == o.n_top && n_bot == o.n_bot, "sum boundary mismatch");
  WebSum out = *this;
  for (const auto& [key, term] : o.terms) out.add(term.first, term.second);
  return out;
}

WebSum WebSum::operator-(const WebSum& o) const { return *this + o * Coeff(-1); }

WebSum WebSum::operator*(const Coeff& c) const {
  WebSum out;
  out.n_top = n_top;
  out.n_bot = n_bot;
  if (c == 0) return out;
  for (const auto& [key, term] : terms)
    out.terms.emplace(key, std::make_pair(term.first, term.second * c));
  return out;
}

std::string WebSum::to_string() const {
  std::ostringstream os;
  if (terms.empty()) {
    os << "0\n";
    return os.str();
  }
  std::vector<std::pair<std::string, const std::pair<Web, Coeff>*>> sorted;
  for (const auto& [key, term] : terms) sorted.push_back({key, &term});
  bool first = true;
  std::ostringstream bodies;
  int idx = 0;
  for (const auto& [key, term] : sorted) {
    std::ostringstream h;
    h << std::hex << (std::hash<std::string>{}(key) & 0xffffffffu);
    os << (first ? "" : " + ") << term->second << "*<web" << idx << "#" << h.str()
       << ">";
    bodies << "web" << idx << ":\n" << term->first.to_text();
    first = false;
    ++idx;
  }
  os << '\n' << bodies.str();
  return os.str();
}

Web identity_web(int k) {
  Web w;
  w.n_top = k;
  w.n_bot = k;
  for (int i = 1; i <= k; ++i) {
    int b = w.add_vert('b', i);
    int t = w.add_vert('t', i);
    w.add_edge(b, t);
  }
  return w;
}

Web generator_f(int i, int k) {
  require(1 <= i && i < k, "generator_f index out of range");
  Web w;
  w.n_top = k;
  w.n_bot = k;
  std::vector<int> bs(k + 1), ts(k + 1);
  for (int j = 1; j <= k; ++j) {
    bs[j] = w.add_vert('b', j);
    ts[j] = w.add_vert('t', j);
  }
  for (int j = 1; j <= k; ++j)
    if (j != i && j != i + 1) w.add_edge(bs[j], ts[j]);
  int src = w.add_vert('i');  // joins the two top sinks
  int snk = w.add_vert('i');  // absorbs the two bottom sources
  int e_ti1 = w.add_edge(src, ts[i + 1]);
  int e_ti = w.add_edge(src, ts[i]);
  int e_mid = w.add_edge(src, snk);
  int e_bi = w.add_edge(snk, bs[i]);
  int e_bi1 = w.add_edge(snk, bs[i + 1]);
  w.verts[src].rot = {2 * e_ti1, 2 * e_ti, 2 * e_mid};
  w.verts[snk].rot = {2 * e_mid + 1, 2 * e_bi, 2 * e_bi1};
  return w;
}

Web stack(const Web& top, const Web& bottom) {
  require(top.n_bot == bottom.n_top, "stack: boundary mismatch");
  Web out = top;
  out.compact();
  int voff = static_cast<int>(out.verts.size());
  int eoff = static_cast<int>(out.edges.size());
  Web bot = bottom;
  bot.compact();
  for (const auto& v : bot.verts) {
    out.verts.push_back(v);
    for (auto& d : out.verts.back().rot) d += 2 * eoff;
  }
  for (const auto& e : bot.edges) {
    out.edges.push_back(e);
    out.edges.back().v = {e.v[0] + voff, e.v[1] + voff};
  }
  out.loops += bot.loops;
  out.n_bot = bot.n_bot;

  // fuse top's bottom vertices with bottom's top vertices
  std::vector<int> pending;
  for (int i = 1; i <= bottom.n_top; ++i) {
    int a = -1, b = -1;
    for (int v = 0; v < voff; ++v)
      if (out.verts[v].alive && out.verts[v].kind == 'b' && out.verts[v].idx == i) a = v;
    for (size_t v = voff; v < out.verts.size(); ++v)
      if (out.verts[v].alive && out.verts[v].kind == 't' && out.verts[v].idx == i)
        b = static_cast<int>(v);
    check(a >= 0 && b >= 0, "stack: interface vertex missing");
    check(out.degree(a) == 1 && out.degree(b) == 1, "stack: interface degree");
    int dart_b = out.verts[b].rot[0];
    out.edges[dart_b / 2].v[dart_b % 2] = a;
    out.verts[a].rot.push_back(dart_b);
    out.verts[a].kind = 'i';
    out.verts[a].idx = 0;
    out.verts[b].alive = false;
    out.verts[b].rot.clear();
    pending.push_back(a);
  }
  for (int v : pending)
    if (out.verts[v].alive && out.degree(v) == 2) out.smooth_out(v);
  out.compact();
  return out;
}

namespace {

struct Site {
  int size;  // 2 or 4
  int face;
};

void apply_m2(Web& w, const std::vector<int>& darts) {
  check(darts.size() == 2, "M2 needs a bigon");
  int x = darts[0], y = darts[1];
  int ex = x / 2, ey = y / 2;
  check(ex != ey, "M2 on a degenerate face");
  int u = w.edges[ex].v[0], v = w.edges[ex].v[1];
  check((w.edges[ey].v[0] == u && w.edges[ey].v[1] == v) ||
            (w.edges[ey].v[0] == v && w.edges[ey].v[1] == u),
        "M2 edges are not parallel");
  check(u != v, "M2 on a self-loop");
  w.delete_edge(ey);
  if (w.verts[u].alive && w.degree(u) == 2) w.smooth_out(u);
  if (w.verts[v].alive && w.degree(v) == 2) w.smooth_out(v);
}

void fuse_degree_ones(Web& w, int a, int b) {
  check(w.degree(a) == 1 && w.degree(b) == 1, "fuse needs degree-1 vertices");
  w.verts[a].kind = 'i';
  w.verts[b].kind = 'i';
  w.add_edge(a, b);
  w.smooth_out(a);
  if (w.verts[b].alive && w.degree(b) == 2) w.smooth_out(b);
}

// Apply one of the two square smoothings (which = 0 or 1).
void apply_m3(Web& w, const std::vector<int>& darts, int which) {
  check(darts.size() == 4, "M3 needs a square");
  std::array<int, 4> vs{};
  for (int i = 0; i < 4; ++i) vs[i] = w.dart_vertex(darts[i]);
  std::set<int> distinct(vs.begin(), vs.end());
  check(distinct.size() == 4, "M3 square with repeated corner");
  for (int i = 0; i < 4; ++i) w.delete_edge(darts[i] / 2);
  for (int i = 0; i < 4; ++i) check(w.degree(vs[i]) == 1, "M3 corner degree");
  if (which == 0) {
    fuse_degree_ones(w, vs[0], vs[1]);
    fuse_degree_ones(w, vs[2], vs[3]);
  } else {
    fuse_degree_ones(w, vs[1], vs[2]);
    fuse_degree_ones(w, vs[3], vs[0]);
  }
}

}  // namespace

WebSum reduce(const Web& w0, std::mt19937* rng) {
  WebSum out;
  out.n_top = w0.n_top;
  out.n_bot = w0.n_bot;
  std::deque<std::pair<Web, Coeff>> work;
  work.push_back({w0, 1});
  while (!work.empty()) {
    auto [w, c] = work.front();
    work.pop_front();
    while (true) {
      if (w.loops > 0) {
        for (int i = 0; i < w.loops; ++i) c *= 3;
        w.loops = 0;
      }
      FaceStructure fs = w.faces();
      std::vector<Site> sites;
      for (int f = 0; f < fs.n_faces; ++f) {
        if (fs.touches_frame[f] || f == fs.f_inf) continue;
        if (fs.web_size[f] == 2 || fs.web_size[f] == 4)
          sites.push_back({fs.web_size[f], f});
      }
      if (sites.empty()) {
        check(w.is_nonelliptic(), "reduction finished on an elliptic web");
        out.add(w, c);
        break;
      }
      std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.face < b.face;
      });
      const Site& s = rng ? sites[(*rng)() % sites.size()] : sites.front();
      if (s.size == 2) {
        apply_m2(w, fs.face_darts[s.face]);
        c *= 2;
      } else {
        Web other = w;
        apply_m3(other, fs.face_darts[s.face], 1);
        work.push_back({other, c});
        apply_m3(w, fs.face_darts[s.face], 0);
      }
    }
  }
  return out;
}

WebSum multiply(const WebSum& a, const WebSum& b, std::mt19937* rng) {
  require(a.n_bot == b.n_top, "multiply: boundary mismatch");
  WebSum out;
  out.n_top = a.n_top;
  out.n_bot = b.n_bot;
  for (const auto& [ka, ta] : a.terms)
    for (const auto& [kb, tb] : b.terms) {
      WebSum prod = reduce(stack(ta.first, tb.first), rng);
      for (const auto& [kp, tp] : prod.terms)
        out.add(tp.first, tp.second * ta.second * tb.second);
    }
  return out;
}

namespace {

WebSum single(const Web& w) {
  WebSum s;
  s.n_top = w.n_top;
  s.n_bot = w.n_bot;
  s.add(w, 1);
  return s;
}

}  // namespace

WebSum word_product(const std::vector<int>& f_indices, int k, std::mt19937* rng) {
  WebSum acc = single(identity_web(k));
  for (int i : f_indices) acc = multiply(acc, single(generator_f(i, k)), rng);
  return acc;
}

WebSum generator_g(int i, int k) {
  require(1 <= i && i <= k - 2, "generator_g index out of range");
  WebSum a = word_product({i, i + 1, i}, k) - word_product({i}, k);
  WebSum b = word_product({i + 1, i, i + 1}, k) - word_product({i + 1}, k);
  check(a == b, "the two expressions for g_i disagree");
  check(a.is_single_web(1), "g_i must reduce to a single nonelliptic web");
  return a;
}

std::vector<RelationCheck> verify_relations(int k) {
  require(k >= 2, "verify_relations needs k >= 2");
  std::vector<RelationCheck> out;
  auto f = [&](int i) { return word_product({i}, k); };
  std::vector<WebSum> g(std::max(0, k - 1));
  for (int j = 1; j <= k - 2; ++j) g[j] = generator_g(j, k);
  auto note = [&](const std::string& name, const std::string& inst, bool pass) {
    out.push_back({name, inst, pass});
  };
  std::ostringstream inst;
  for (int i = 1; i <= k - 1; ++i) {
    inst.str("");
    inst << "f" << i << "^2 == 2*f" << i;
    note("R1", inst.str(), multiply(f(i), f(i)) == f(i) * 2);
  }
  for (int i = 1; i <= k - 1; ++i)
    for (int j = i + 2; j <= k - 1; ++j) {
      inst.str("");
      inst << "f" << i << "*f" << j << " == f" << j << "*f" << i;
      note("R2", inst.str(), multiply(f(i), f(j)) == multiply(f(j), f(i)));
    }
  for (int i = 1; i <= k - 2; ++i) {
    inst.str("");
    inst << "f" << i << "f" << i + 1 << "f" << i << "-f" << i << " == f" << i + 1
         << "f" << i << "f" << i + 1 << "-f" << i + 1;
    bool ok = (word_product({i, i + 1, i}, k) - f(i)) ==
              (word_product({i + 1, i, i + 1}, k) - f(i + 1));
    note("R3", inst.str(), ok);
  }
  for (int i = 1; i <= k - 3; ++i) {
    inst.str("");
    inst << "g" << i << "g" << i + 1 << "g" << i << " == 4*g" << i;
    bool ok = multiply(multiply(g[i], g[i + 1]), g[i]) == g[i] * 4;
    note("R4", inst.str(), ok);
  }
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= k - 2; ++j) {
      inst.str("");
      inst << "f" << i << "*g" << j << " == g" << j << "*f" << i;
      note("Ra", inst.str(), multiply(f(i), g[j]) == multiply(g[j], f(i)));
    }
  for (int j = 1; j <= k - 2; ++j) {
    inst.str("");
    inst << "g" << j << "^2 == 6*g" << j;
    note("Rb", inst.str(), multiply(g[j], g[j]) == g[j] * 6);
  }
  for (int j = 1; j + 2 <= k - 2; ++j) {
    inst.str("");
    inst << "g" << j << "g" << j + 2 << "g" << j << " == -2*g" << j;
    note("Rc", inst.str(),
         multiply(multiply(g[j], g[j + 2]), g[j]) == g[j] * Coeff(-2));
    inst.str("");
    inst << "g" << j + 2 << "g" << j << "g" << j + 2 << " == -2*g" << j + 2;
    note("Rc", inst.str(),
         multiply(multiply(g[j + 2], g[j]), g[j + 2]) == g[j + 2] * Coeff(-2));
  }
  for (int i = 1; i <= k - 2; ++i) {
    inst.str("");
    inst << "f" << i << "*g" << i << " == -2*g" << i << " == f" << i + 1 << "*g" << i;
    bool ok = multiply(f(i), g[i]) == g[i] * Coeff(-2) &&
              multiply(f(i + 1), g[i]) == g[i] * Coeff(-2);
    note("Rd", inst.str(), ok);
  }
  return out;
}

std::vector<Web> generator_closure(int k) {
  std::map<std::string, Web> seen;
  std::deque<std::string> queue;
  Web id = identity_web(k);
  seen.emplace(id.canonical_form(), id);
  queue.push_back(id.canonical_form());
  while (!queue.empty()) {
    Web w = seen.at(queue.front());
    queue.pop_front();
    for (int i = 1; i <= k - 1; ++i) {
      WebSum prod = reduce(stack(generator_f(i, k), w));
      for (const auto& [key, term] : prod.terms) {
        if (!seen.count(key)) {
          seen.emplace(key, term.first);
          queue.push_back(key);
        }
      }
    }
  }
  std::vector<Web> out;
  for (auto& [key, w] : seen) out.push_back(w);
  return out;
}

}  // namespace a2web
