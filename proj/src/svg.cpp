#include "a2web/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <random>
#include <sstream>

#include "a2web/error.hpp"

namespace a2web {

namespace {

constexpr double kUnit = 40.0;
constexpr double kMargin = 30.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct SvgDoc {
  std::ostringstream body;
  double width = 0, height = 0;

  void line(double x1, double y1, double x2, double y2, const char* stroke,
            double w = 1.5) {
    body << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
         << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(w) << "\"/>\n";
  }
  void arrow_mid(double x1, double y1, double x2, double y2) {
    double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
    double dx = x2 - x1, dy = y2 - y1;
    double len = std::sqrt(dx * dx + dy * dy);
    if (len < 1e-9) return;
    dx /= len;
    dy /= len;
    double s = 5.0;
    body << "<path d=\"M " << num(mx - s * dx + s * 0.6 * dy) << ' '
         << num(my - s * dy - s * 0.6 * dx) << " L " << num(mx) << ' ' << num(my)
         << " L " << num(mx - s * dx - s * 0.6 * dy) << ' '
         << num(my - s * dy + s * 0.6 * dx) << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  void dot(double x, double y, const char* fill) {
    body << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
         << "\" r=\"3.5\" fill=\"" << fill << "\"/>\n";
  }
  void text(double x, double y, const std::string& s, const char* fill = "black",
            int size = 12) {
    body << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << size
         << "\" fill=\"" << fill << "\" text-anchor=\"middle\">" << s << "</text>\n";
  }
  void arc(double x1, double y1, double x2, double y2, double r, bool upper) {
    body << "<path d=\"M " << num(x1) << ' ' << num(y1) << " A " << num(r) << ' '
         << num(r) << " 0 0 " << (upper ? 1 : 0) << ' ' << num(x2) << ' ' << num(y2)
         << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  std::string finish() const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
       << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
       << num(height) << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << body.str() << "</svg>\n";
    return os.str();
  }
};

}  // namespace

std::string svg_of_m_diagram(const MDiagram& m) {
  SvgDoc doc;
  double base = kMargin + kUnit * 2.5;
  doc.width = kMargin * 2 + kUnit * std::max(1, m.num_vertices - 1) + 2 * kMargin;
  doc.height = base + kMargin;
  auto X = [&](int v) { return kMargin + kUnit * (v - 1); };
  doc.line(X(1) - kMargin / 2, base, X(std::max(1, m.num_vertices)) + kMargin / 2, base,
           "gray", 1.0);
  for (auto [a, b] : m.arcs) {
    double r = kUnit * (b - a) / 2.0;
    doc.arc(X(a), base, X(b), base, r, true);
  }
  for (int v = 1; v <= m.num_vertices; ++v) {
    doc.dot(X(v), base, "black");
    doc.text(X(v), base + 16, std::to_string(v));
  }
  return doc.finish();
}

namespace {

// Pin boundary vertices to the two lines and relax internal vertices.
std::vector<std::pair<double, double>> web_layout(const Web& w, unsigned seed) {
  int V = static_cast<int>(w.verts.size());
  std::vector<std::pair<double, double>> pos(V, {0, 0});
  std::vector<bool> pinned(V, false);
  double width = std::max(w.n_top, w.n_bot) + 1;
  for (int v = 0; v < V; ++v) {
    if (!w.verts[v].alive) continue;
    if (w.verts[v].kind == 't') {
      pos[v] = {w.verts[v].idx, 0.0};
      pinned[v] = true;
    } else if (w.verts[v].kind == 'b') {
      pos[v] = {w.verts[v].idx, 4.0};
      pinned[v] = true;
    }
  }
  // seed internal vertices by distance layers from the boundary
  std::vector<int> dist(V, -1);
  std::deque<int> queue;
  for (int v = 0; v < V; ++v)
    if (pinned[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  int maxd = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int d : w.verts[v].rot) {
      int u = w.dart_vertex(d ^ 1);
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        maxd = std::max(maxd, dist[u]);
        queue.push_back(v);
        queue.push_back(u);
      }
    }
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  for (int v = 0; v < V; ++v) {
    if (!w.verts[v].alive || pinned[v]) continue;
    double frac = dist[v] < 0 ? 0.5 : static_cast<double>(dist[v]) / (maxd + 1);
    bool from_top = w.n_top > 0;
    double y = from_top && w.n_bot > 0 ? 4.0 * frac
               : w.n_bot > 0           ? 4.0 - 2.5 * frac
                                       : 2.5 * frac;
    pos[v] = {width / 2.0 + jitter(rng), y == 0 ? 2.0 : y};
  }
  for (int iter = 0; iter < 120; ++iter) {
    for (int v = 0; v < V; ++v) {
      if (!w.verts[v].alive || pinned[v] || w.verts[v].rot.empty()) continue;
      double sx = 0, sy = 0;
      for (int d : w.verts[v].rot) {
        int u = w.dart_vertex(d ^ 1);
        sx += pos[u].first;
        sy += pos[u].second;
      }
      double n = static_cast<double>(w.verts[v].rot.size());
      pos[v] = {0.8 * pos[v].first + 0.2 * sx / n, 0.8 * pos[v].second + 0.2 * sy / n};
    }
  }
  return pos;
}

}  // namespace

std::string svg_of_web(const Web& w, bool depths, unsigned seed) {
  auto pos = web_layout(w, seed);
  SvgDoc doc;
  double width_units = std::max({w.n_top, w.n_bot, 2});
  doc.width = 2 * kMargin + kUnit * width_units;
  doc.height = 2 * kMargin + kUnit * 4.0;
  auto PX = [&](double x) { return kMargin + kUnit * (x - 0.5); };
  auto PY = [&](double y) { return kMargin + kUnit * y * 0.95; };
  std::vector<char> pol;
  bool have_pol = true;
  try {
    pol = w.polarity();
  } catch (const InternalError&) {
    have_pol = false;
  }
  for (size_t e = 0; e < w.edges.size(); ++e) {
    if (!w.edges[e].alive) continue;
    int a = w.edges[e].v[0], b = w.edges[e].v[1];
    if (have_pol && pol[a] != 'o') std::swap(a, b);
    doc.line(PX(pos[a].first), PY(pos[a].second), PX(pos[b].first), PY(pos[b].second),
             "black");
    if (have_pol)
      doc.arrow_mid(PX(pos[a].first), PY(pos[a].second), PX(pos[b].first),
                    PY(pos[b].second));
  }
  for (size_t v = 0; v < w.verts.size(); ++v) {
    if (!w.verts[v].alive) continue;
    const auto& vert = w.verts[v];
    double x = PX(pos[v].first), y = PY(pos[v].second);
    if (vert.kind == 't') {
      doc.dot(x, y, "black");
      doc.text(x, y - 8, "t" + std::to_string(vert.idx) + "+");
    } else if (vert.kind == 'b') {
      doc.dot(x, y, "black");
      doc.text(x, y + 16, "b" + std::to_string(vert.idx) + "&#8722;");
    } else {
      doc.dot(x, y, have_pol && pol[v] == 'o' ? "white" : "black");
      if (have_pol && pol[v] == 'o')
        doc.body << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
                 << "\" r=\"3.5\" fill=\"none\" stroke=\"black\"/>\n";
    }
  }
  if (depths) {
    FaceStructure fs = w.faces();
    // place each face label at the centroid of its incident vertices
    std::vector<double> cx(fs.n_faces, 0), cy(fs.n_faces, 0);
    std::vector<int> cnt(fs.n_faces, 0);
    for (size_t e = 0; e < w.edges.size(); ++e) {
      if (!w.edges[e].alive) continue;
      for (int side = 0; side < 2; ++side) {
        int f = fs.face_of_dart[2 * static_cast<int>(e) + side];
        int v = w.edges[e].v[side];
        cx[f] += pos[v].first;
        cy[f] += pos[v].second;
        cnt[f]++;
      }
    }
    for (int f = 0; f < fs.n_faces; ++f) {
      if (cnt[f] == 0 || fs.depth[f] < 0 || f == fs.f_inf) continue;
      doc.text(PX(cx[f] / cnt[f]), PY(cy[f] / cnt[f]) + 4,
               std::to_string(fs.depth[f]), "crimson", 11);
    }
  }
  return doc.finish();
}

std::string svg_of_perm_diagram(const PermDiagram& d, bool depths) {
  int l = d.sigma.size();
  SvgDoc doc;
  doc.width = 2 * kMargin + kUnit * std::max(1, l - 1);
  doc.height = 2 * kMargin + kUnit * 3;
  auto X = [&](double v) { return kMargin + kUnit * (v - 1); };
  double ytop = kMargin, ybot = kMargin + kUnit * 3;
  for (int i = 1; i <= l; ++i) {
    doc.line(X(i), ytop, X(d.sigma(i)), ybot, "black");
    doc.dot(X(i), ytop, "black");
    doc.dot(X(i), ybot, "black");
    doc.text(X(i), ytop - 8, "t" + std::to_string(i));
    doc.text(X(i), ybot + 16, "b" + std::to_string(i));
    if (depths) {
      doc.text(X(i), ytop + 14,
               "&#948;=" + std::to_string(d.delta_top[i - 1]), "crimson", 10);
      doc.text(X(i), ybot - 8, "&#948;=" + std::to_string(d.delta_bot[i - 1]),
               "crimson", 10);
    }
  }
  return doc.finish();
}

std::string svg_of_flow(const LabeledTriangle& t) {
  SvgDoc doc;
  int N = t.N;
  doc.width = 2 * kMargin + kUnit * std::max(1, N);
  doc.height = 2 * kMargin + kUnit * std::max(1, N) * 0.87;
  auto PX = [&](int r, int i) { return kMargin + kUnit * (i + r * 0.5); };
  auto PY = [&](int r) { return kMargin + kUnit * 0.87 * r; };
  auto draw = [&](char fam, int r, int i, int x2r, int x2i) {
    int raw = t.get(fam, r, i);
    double x1 = PX(r, i), y1 = PY(r), x2 = PX(x2r, x2i), y2 = PY(x2r);
    if (raw == 0) {
      doc.line(x1, y1, x2, y2, "lightgray", 0.6);
      return;
    }
    doc.line(x1, y1, x2, y2, "black", 2.0);
    // positive raw flow descends (and runs left-to-right on horizontals)
    if (raw > 0)
      doc.arrow_mid(x1, y1, x2, y2);
    else
      doc.arrow_mid(x2, y2, x1, y1);
    doc.text((x1 + x2) / 2 + 7, (y1 + y2) / 2 - 3,
             std::to_string(LabeledTriangle::display_label(raw)), "navy", 11);
  };
  for (int r = 0; r < N; ++r) {
    for (int i = 0; i <= N - r - 1; ++i) draw('h', r, i, r, i + 1);
    for (int i = 0; i <= N - r - 1; ++i) draw('d', r, i, r + 1, i);
    for (int i = 1; i <= N - r; ++i) draw('u', r, i, r + 1, i - 1);
  }
  FlowWord w = t.top_word();
  for (int i = 1; i <= N; ++i) {
    int s = w.syms[i - 1];
    if (s == 0) continue;
    std::string label = std::to_string(std::abs(s));
    if (s < 0) label = "&#773;" + label;  // overbar for barred symbols
    doc.text(PX(0, i - 1) + kUnit / 2, PY(0) - 8, label);
  }
  if (t.wall > 0 && t.wall < N)
    doc.line(PX(0, t.wall), PY(0) - 20, PX(0, t.wall), PY(0) + 4, "crimson", 1.0);
  return doc.finish();
}

}  // namespace a2web
