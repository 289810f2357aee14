#include "a2web/m_diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "a2web/error.hpp"

namespace a2web {

std::string MDiagram::to_string() const {
  std::ostringstream os;
  os << "n=" << num_vertices << "; arcs=";
  for (size_t i = 0; i < arcs.size(); ++i)
    os << (i ? "," : "") << arcs[i].first << '-' << arcs[i].second;
  return os.str();
}

namespace {

// Recover configurations, singles and isolated vertices from a raw arc list.
void index_structure(MDiagram& m) {
  std::vector<std::vector<int>> at(m.num_vertices + 1);
  for (size_t a = 0; a < m.arcs.size(); ++a) {
    auto [l, r] = m.arcs[a];
    require(1 <= l && l < r && r <= m.num_vertices, "arc endpoints out of range");
    at[l].push_back(static_cast<int>(a));
    at[r].push_back(static_cast<int>(a));
  }
  std::vector<bool> in_config(m.arcs.size(), false);
  for (int v = 1; v <= m.num_vertices; ++v) {
    require(at[v].size() <= 2, "vertex with arc-degree above 2");
    if (at[v].size() == 2) {
      int a = at[v][0], b = at[v][1];
      // middle vertex: one arc ends here, the other starts here
      int left = m.arcs[a].second == v ? a : b;
      int right = m.arcs[a].second == v ? b : a;
      require(m.arcs[left].second == v && m.arcs[right].first == v,
              "degree-2 vertex is not an m-configuration middle");
      m.configs.push_back({m.arcs[left].first, v, m.arcs[right].second, left, right});
      in_config[left] = in_config[right] = true;
    }
    if (at[v].empty()) m.isolated.push_back(v);
  }
  for (size_t a = 0; a < m.arcs.size(); ++a)
    if (!in_config[a]) m.single_arcs.push_back(static_cast<int>(a));
}

}  // namespace

MDiagram MDiagram::from_string(const std::string& s) {
  MDiagram m;
  auto npos = s.find("n=");
  auto apos = s.find("arcs=");
  if (npos == std::string::npos || apos == std::string::npos)
    throw ParseError("m-diagram: expected n=...; arcs=...");
  try {
    m.num_vertices = std::stoi(s.substr(npos + 2));
    std::stringstream as(s.substr(apos + 5));
    std::string tok;
    while (std::getline(as, tok, ',')) {
      if (tok.empty()) continue;
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw ParseError("m-diagram: bad arc " + tok);
      m.arcs.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
    }
  } catch (const std::logic_error&) {
    throw ParseError("m-diagram: bad numbers");
  }
  try {
    index_structure(m);
  } catch (const DomainError& e) {
    throw ParseError(std::string("m-diagram: ") + e.what());
  }
  return m;
}

MDiagram build_m_diagram(const Tableau& t, int num_vertices) {
  require(t.is_standard() && !t.is_skew(), "m-diagram needs a standard tableau");
  require(t.shape.rows() <= 3, "m-diagram input has more than 3 rows");
  auto ents = t.entries();
  int max_entry = ents.empty() ? 0 : ents.back();
  MDiagram m;
  m.num_vertices = num_vertices < 0 ? max_entry : num_vertices;
  require(m.num_vertices >= max_entry, "num_vertices below largest entry");

  int R = t.shape.rows();
  // bottom row first, then the row above it
  for (int pass = 0; pass < 2 && R - 1 - pass >= 1; ++pass) {
    int lower = R - 1 - pass;       // 0-based row being connected upward
    const auto& low = t.rows[lower];
    const auto& up = t.rows[lower - 1];
    std::vector<bool> used(up.size(), false);
    for (int ell : low) {
      int pick = -1;
      for (int j = static_cast<int>(up.size()) - 1; j >= 0; --j)
        if (!used[j] && up[j] < ell) {
          pick = j;
          break;
        }
      check(pick >= 0, "m-diagram: no partner above; input not standard?");
      used[pick] = true;
      m.arcs.push_back({up[pick], ell});
    }
  }
  index_structure(m);
  return m;
}

int circle_depth(const MDiagram& m, int vertex, char side) {
  require(1 <= vertex && vertex <= m.num_vertices, "vertex out of range");
  require(side == 'l' || side == 'r', "side must be 'l' or 'r'");
  int depth = 0;
  for (auto [a, b] : m.arcs) {
    bool above = side == 'l' ? (a < vertex && b >= vertex) : (a <= vertex && b > vertex);
    if (above) ++depth;
  }
  return depth;
}

namespace {

// Vertex-ownership pattern of two disjoint configs, 'A' for the config
// holding the smallest vertex.
std::string pattern_of(std::array<int, 3> c1, std::array<int, 3> c2) {
  std::vector<std::pair<int, char>> all;
  for (int v : c1) all.push_back({v, 'A'});
  for (int v : c2) all.push_back({v, 'B'});
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i + 1 < all.size(); ++i)
    require(all[i].first != all[i + 1].first, "configurations share a vertex");
  std::string word;
  for (auto& [v, c] : all) word.push_back(c);
  if (word[0] == 'B')
    for (char& c : word) c = (c == 'A') ? 'B' : 'A';
  return word;
}

const std::vector<std::string>& class_patterns() {
  // the five patterns realized by the five standard tableaux of shape (2^3),
  // ordered lexicographically
  static const std::vector<std::string> patterns = [] {
    std::vector<std::string> out;
    for (const Tableau& u : enumerate_standard(Partition({2, 2, 2}))) {
      MDiagram m = build_m_diagram(u);
      check(m.configs.size() == 2, "(2^3) tableau must give two configs");
      out.push_back(pattern_of({m.configs[0].i, m.configs[0].j, m.configs[0].ell},
                               {m.configs[1].i, m.configs[1].j, m.configs[1].ell}));
    }
    std::sort(out.begin(), out.end());
    check(std::unique(out.begin(), out.end()) == out.end(),
          "five relative-position classes expected");
    return out;
  }();
  return patterns;
}

}  // namespace

int relative_position(const MDiagram::Config& c1, const MDiagram::Config& c2) {
  std::string w = pattern_of({c1.i, c1.j, c1.ell}, {c2.i, c2.j, c2.ell});
  const auto& classes = class_patterns();
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == w) return static_cast<int>(i) + 1;
  throw DomainError("configuration pair not realizable in one m-diagram: " + w);
}

}  // namespace a2web
