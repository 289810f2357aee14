#include "a2web/bijection.hpp"

#include <algorithm>
#include <map>

#include "a2web/error.hpp"

namespace a2web {

namespace {

// Heights keep nested arcs below their enclosing arcs; nesting implies a
// strictly shorter span, so ranking by (span, left endpoint) works.
std::vector<Rat> arc_heights(const MDiagram& m) {
  std::vector<int> order(m.arcs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int la = m.arcs[a].second - m.arcs[a].first;
    int lb = m.arcs[b].second - m.arcs[b].first;
    if (la != lb) return la < lb;
    return m.arcs[a].first < m.arcs[b].first;
  });
  std::vector<Rat> h(m.arcs.size());
  long long denom = 4 * (static_cast<long long>(m.arcs.size()) + 1);
  for (size_t r = 0; r < order.size(); ++r)
    h[order[r]] = Rat(static_cast<long long>(r) + 1, denom);
  return h;
}

void append_arcs(std::vector<Curve>& curves, const MDiagram& m, bool top,
                 int& next_arc_id) {
  require(m.single_arcs.empty(), "m-diagram with unmatched single arcs cannot be a web");
  std::vector<Rat> h = arc_heights(m);
  std::vector<bool> reversed(m.arcs.size(), false);
  for (const auto& cfg : m.configs) {
    // flow runs from the degree-1 boundary end toward the middle vertex;
    // on the top line directions mirror
    reversed[cfg.left_arc] = top;
    reversed[cfg.right_arc] = !top;
  }
  Rat slant(1, 8);
  for (size_t a = 0; a < m.arcs.size(); ++a) {
    auto [l, r] = m.arcs[a];
    Curve c;
    Rat base = top ? Rat(1) : Rat(0);
    Rat peak = top ? Rat(1) - h[a] : h[a];
    c.points = {Pt{Rat(l), base}, Pt{Rat(l), peak}, Pt{Rat(r) - slant, peak},
                Pt{Rat(r), base}};
    c.arc_id = next_arc_id++;
    c.travel_reversed = reversed[a];
    curves.push_back(c);
  }
}

Tableau relabel_to_standard(const Tableau& t) {
  auto e = t.entries();
  std::map<int, int> rank;
  for (size_t i = 0; i < e.size(); ++i) rank[e[i]] = static_cast<int>(i) + 1;
  Tableau out = t;
  for (auto& row : out.rows)
    for (auto& v : row)
      if (v > 0) v = rank[v];
  return out;
}

}  // namespace

std::vector<Curve> assemble_prediagram(const MDiagram& bottom, const MDiagram& top,
                                       const std::vector<std::pair<int, int>>& strands) {
  std::vector<Curve> curves;
  int arc_id = 0;
  append_arcs(curves, bottom, false, arc_id);
  append_arcs(curves, top, true, arc_id);
  Rat upper(5, 8), lower(3, 8);
  for (auto [alpha, beta] : strands) {
    Curve c;
    c.points = {Pt{Rat(alpha), Rat(1)}, Pt{Rat(alpha), upper}, Pt{Rat(beta), lower},
                Pt{Rat(beta), Rat(0)}};
    c.travel_reversed = true;  // from the bottom source up to the top sink
    curves.push_back(c);
  }
  return curves;
}

PhiTrace phi_trace(const Tableau& t, int k) {
  PhiTrace tr;
  tr.input = t;
  tr.pair = decompose(t, k);
  int n = tr.pair.n;
  std::tie(tr.box_plus, tr.dia_plus) = split_box_diamond(tr.pair.t_plus);
  std::tie(tr.box_minus, tr.dia_minus) = split_box_diamond(tr.pair.t_minus);
  tr.alphas = tr.dia_plus.entries();
  tr.betas = tr.dia_minus.entries();
  check(tr.alphas.size() == tr.betas.size(),
        "top and bottom isolated vertex counts differ");

  tr.m_plus = build_m_diagram(tr.box_plus.empty() ? Tableau() : tr.box_plus, k);
  tr.m_minus = build_m_diagram(tr.box_minus.empty() ? Tableau() : tr.box_minus,
                               3 * n - 2 * k);
  check(tr.m_plus.isolated == tr.alphas, "diamond entries must be isolated on top");
  check(tr.m_minus.isolated == tr.betas, "diamond entries must be isolated below");

  tr.sigma = rs_inverse(relabel_to_standard(tr.dia_plus),
                        relabel_to_standard(tr.dia_minus));
  check(is_321_avoiding(tr.sigma), "step 9 must produce a 321-avoiding permutation");

  std::vector<std::pair<int, int>> strands;
  for (int i = 1; i <= tr.sigma.size(); ++i)
    strands.push_back({tr.alphas[i - 1], tr.betas[tr.sigma(i) - 1]});
  tr.curves = assemble_prediagram(tr.m_minus, tr.m_plus, strands);
  PlanarMap pm = build_planar_map(tr.curves);
  tr.web = web_from_planar(pm, k, 3 * n - 2 * k, /*do_trivalize=*/true);
  check(tr.web.is_nonelliptic(), "phi output must be nonelliptic");
  return tr;
}

Web phi(const Tableau& t, int k) { return phi_trace(t, k).web; }

Tableau phi_inverse(const Web& w, int n, int k) {
  require(w.n_top == k && w.n_bot == 3 * n - 2 * k, "web boundary does not match (n,k)");
  FaceStructure fs = w.faces();
  auto build = [&](const std::vector<int>& delta) {
    std::vector<std::vector<int>> rows(3);
    for (size_t i = 0; i < delta.size(); ++i) {
      int d = delta[i];
      require(d >= -1 && d <= 1, "boundary depth difference outside {-1,0,1}");
      rows[1 - d].push_back(static_cast<int>(i) + 1);
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    for (const auto& r : rows)
      require(!r.empty(), "empty row between filled rows; web not in the image");
    Tableau t(rows);
    require(t.is_standard(), "recovered tableau is not standard");
    return t;
  };
  TableauPairPlusMinus pair;
  pair.t_plus = build(fs.delta_top);
  pair.t_minus = build(fs.delta_bot);
  pair.n = n;
  pair.k = k;
  return recompose(pair);
}

std::pair<Web, MDiagram> m_diagram_web(const Tableau& three_row, int num_vertices) {
  MDiagram md = build_m_diagram(three_row, num_vertices);
  std::vector<Curve> curves = assemble_prediagram(md, MDiagram{}, {});
  PlanarMap pm = build_planar_map(curves);
  Web w = web_from_planar(pm, 0, md.num_vertices, /*do_trivalize=*/true);
  return {w, md};
}

Web tymoczko_web(const Tableau& t3n) {
  require(!t3n.is_skew() && t3n.is_standard(), "need a standard tableau");
  for (int i = 0; i < t3n.shape.rows(); ++i)
    require(t3n.shape.part(i) == 3, "shape must be (3^n)");
  if (t3n.empty()) {
    Web w;
    return w;
  }
  return m_diagram_web(conjugate(t3n)).first;
}

}  // namespace a2web
