#include "a2web/flow.hpp"

#include <algorithm>
#include <sstream>

#include "a2web/error.hpp"

namespace a2web {

std::vector<OneColumn> columns(const Tableau& t) {
  require(t.is_standard() && !t.is_skew(), "columns: need a standard tableau");
  require(t.shape.rows() <= 3, "columns: more than 3 rows");
  std::vector<int> row1(t.rows.size() > 0 ? t.rows[0] : std::vector<int>{});
  std::vector<int> row2(t.rows.size() > 1 ? t.rows[1] : std::vector<int>{});
  std::vector<int> row3(t.rows.size() > 2 ? t.rows[2] : std::vector<int>{});

  // (I): partner in row 2 for each third-row entry
  std::vector<int> partner2(row3.size(), -1);
  std::vector<bool> used2(row2.size(), false);
  for (size_t p = 0; p < row3.size(); ++p) {
    int pick = -1;
    for (int j = static_cast<int>(row2.size()) - 1; j >= 0; --j)
      if (!used2[j] && row2[j] < row3[p]) {
        pick = j;
        break;
      }
    check(pick >= 0, "columns: rule (I) found no partner");
    used2[pick] = true;
    partner2[p] = pick;
  }
  // (II): partner in row 1 for every second-row entry
  std::vector<int> partner1(row2.size(), -1);
  std::vector<bool> used1(row1.size(), false);
  for (size_t p = 0; p < row2.size(); ++p) {
    int pick = -1;
    for (int j = static_cast<int>(row1.size()) - 1; j >= 0; --j)
      if (!used1[j] && row1[j] < row2[p]) {
        pick = j;
        break;
      }
    check(pick >= 0, "columns: rule (II) found no partner");
    used1[pick] = true;
    partner1[p] = pick;
  }

  std::vector<OneColumn> out;
  std::vector<bool> row2_in_triple(row2.size(), false);
  for (size_t p = 0; p < row3.size(); ++p) {
    int j = partner2[p];
    row2_in_triple[j] = true;
    out.push_back({3, 0, {row1[partner1[j]], row2[j], row3[p]}});
  }
  for (size_t j = 0; j < row2.size(); ++j)
    if (!row2_in_triple[j])
      out.push_back({2, 0, {row1[partner1[j]], row2[j]}});
  for (size_t i = 0; i < row1.size(); ++i)
    if (!used1[i]) out.push_back({1, 0, {row1[i]}});

  std::sort(out.begin(), out.end(), [](const OneColumn& a, const OneColumn& b) {
    if (a.height != b.height) return a.height > b.height;
    return a.entries.back() < b.entries.back();
  });
  int idx = 0, prev_height = -1;
  for (auto& c : out) {
    if (c.height != prev_height) {
      idx = 0;
      prev_height = c.height;
    }
    c.index = ++idx;
  }
  return out;
}

std::string FlowWord::to_string() const {
  std::ostringstream os;
  if (wall == 0 && length > 0) os << "|,";
  for (int i = 1; i <= length; ++i) {
    if (i > 1) os << ',';
    int s = syms[i - 1];
    if (s == 0)
      os << '.';
    else
      os << s;
    if (i == wall && i < length) os << ",|";
  }
  return os.str();
}

FlowWord FlowWord::from_string(const std::string& s) {
  FlowWord w;
  std::stringstream ss(s);
  std::string tok;
  bool wall_seen = false;
  while (std::getline(ss, tok, ',')) {
    if (tok == "|") {
      w.wall = w.length;
      wall_seen = true;
      continue;
    }
    if (tok == ".")
      w.syms.push_back(0);
    else {
      try {
        int v = std::stoi(tok);
        if (v == 0 || v < -3 || v > 3) throw ParseError("word symbol out of range");
        w.syms.push_back(v);
      } catch (const std::logic_error&) {
        throw ParseError("bad word symbol: " + tok);
      }
    }
    ++w.length;
  }
  if (!wall_seen) w.wall = w.length;
  return w;
}

FlowWord FlowWord::merged_with(const FlowWord& o) const {
  require(length == o.length && wall == o.wall, "word merge: size mismatch");
  FlowWord out = *this;
  for (int i = 0; i < length; ++i) {
    if (o.syms[i] == 0) continue;
    require(out.syms[i] == 0, "word merge: position collision");
    out.syms[i] = o.syms[i];
  }
  return out;
}

FlowWord word_of_column(const OneColumn& c, char side, int n, int k) {
  require(side == '+' || side == '-', "side must be + or -");
  int N = 3 * n - k, wall = 3 * n - 2 * k;
  FlowWord w;
  w.length = N;
  w.wall = wall;
  w.syms.assign(N, 0);
  for (size_t r = 0; r < c.entries.size(); ++r) {
    int e = c.entries[r];
    int row = static_cast<int>(r) + 1;
    if (side == '-') {
      require(1 <= e && e <= wall, "minus entry out of range");
      w.syms[e - 1] = -row;
    } else {
      require(1 <= e && e <= k, "plus entry out of range");
      w.syms[N - e] = row;  // mirrored position N+1-e
    }
  }
  return w;
}

LabeledTriangle LabeledTriangle::blank(int N, int wall) {
  LabeledTriangle d;
  d.N = N;
  d.wall = wall;
  d.h.assign(N, {});
  d.d.assign(N, {});
  d.u.assign(N, {});
  for (int r = 0; r < N; ++r) {
    d.h[r].assign(N - r, 0);      // i in [0, N-r-1]
    d.d[r].assign(N - r, 0);      // i in [0, N-r-1]
    d.u[r].assign(N - r + 1, 0);  // i in [1, N-r]; slot 0 unused
  }
  return d;
}

int& LabeledTriangle::at(char family, int r, int i) {
  check(r >= 0 && r < N, "edge row out of range");
  switch (family) {
    case 'h':
      check(i >= 0 && i <= N - r - 1, "h edge out of range");
      return h[r][i];
    case 'd':
      check(i >= 0 && i <= N - r - 1, "d edge out of range");
      return d[r][i];
    case 'u':
      check(i >= 1 && i <= N - r, "u edge out of range");
      return u[r][i];
    default:
      throw InternalError("bad edge family");
  }
}

int LabeledTriangle::get(char family, int r, int i) const {
  return const_cast<LabeledTriangle*>(this)->at(family, r, i);
}

int LabeledTriangle::display_label(int raw) {
  int a = raw < 0 ? -raw : raw;
  if (a <= 3) return a;
  check(a <= 5, "flow beyond two strands");
  return a - 3;  // two-strand middle edge, reduced mod 3
}

FlowWord LabeledTriangle::top_word() const {
  FlowWord w;
  w.length = N;
  w.wall = wall;
  w.syms.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    int raw = h[0][i];
    if (raw == 0) continue;
    check(raw >= -3 && raw <= 3, "top edge carries more than one strand");
    w.syms[i] = -raw;  // descending flow = barred symbol
  }
  return w;
}

std::string LabeledTriangle::to_string() const {
  std::ostringstream os;
  os << "N=" << N << "; word=" << top_word().to_string() << "; edges=";
  bool first = true;
  for (int r = 0; r < N; ++r) {
    for (char fam : {'h', 'd', 'u'}) {
      int lo = fam == 'u' ? 1 : 0;
      int hi = fam == 'u' ? N - r : N - r - 1;
      for (int i = lo; i <= hi; ++i) {
        int v = get(fam, r, i);
        if (v == 0) continue;
        os << (first ? "" : ",") << fam << ':' << r << ':' << i << '=' << v;
        first = false;
      }
    }
  }
  return os.str();
}

LabeledTriangle LabeledTriangle::from_string(const std::string& s) {
  auto find_field = [&](const std::string& name) -> std::string {
    auto pos = s.find(name + "=");
    if (pos == std::string::npos) throw ParseError("flow: missing " + name + "=");
    auto end = s.find(';', pos);
    return s.substr(pos + name.size() + 1,
                    end == std::string::npos ? std::string::npos : end - pos - name.size() - 1);
  };
  LabeledTriangle d;
  try {
    int N = std::stoi(find_field("N"));
    FlowWord w = FlowWord::from_string(find_field("word"));
    if (w.length != N) throw ParseError("flow: word length differs from N");
    d = blank(N, w.wall);
    std::stringstream es(find_field("edges"));
    std::string tok;
    while (std::getline(es, tok, ',')) {
      if (tok.empty()) continue;
      char fam = tok[0];
      auto c1 = tok.find(':'), c2 = tok.find(':', c1 + 1), eq = tok.find('=');
      if (c1 == std::string::npos || c2 == std::string::npos || eq == std::string::npos)
        throw ParseError("flow: bad edge " + tok);
      int r = std::stoi(tok.substr(c1 + 1, c2 - c1 - 1));
      int i = std::stoi(tok.substr(c2 + 1, eq - c2 - 1));
      d.at(fam, r, i) = std::stoi(tok.substr(eq + 1));
    }
    // the word is redundant with the h(0,*) flows; verify consistency
    if (!(d.top_word().to_string() == w.to_string()))
      throw ParseError("flow: word does not match top edges");
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("flow: ") + e.what());
  }
  return d;
}

namespace {

std::string edge_key(char fam, int r, int i) {
  std::ostringstream os;
  os << fam << ':' << r << ':' << i;
  return os.str();
}

void paint(LabeledTriangle& d, char fam, int r, int i, int raw, int label) {
  d.at(fam, r, i) += raw;
  auto& t = d.transits[edge_key(fam, r, i)];
  for (int other : t)
    check(other != label, "two crossing strands with equal labels");
  t.push_back(label);
  check(t.size() <= 2, "more than two strands through one edge");
}

// South-east ray from top position p down to the cell entered at row m;
// paints h(0,p-1), then u/h alternately, ending with u(m-1, p).
void paint_se(LabeledTriangle& d, int p, int m, int label, int sign) {
  check(m >= 1, "se ray must descend");
  paint(d, 'h', 0, p - 1, sign * label, label);
  for (int r = 1; r < m; ++r) {
    paint(d, 'u', r - 1, p, sign * label, label);
    paint(d, 'h', r, p - 1, sign * label, label);
  }
  paint(d, 'u', m - 1, p, sign * label, label);
}

// South-west ray from top position b down to the cell entered at row m;
// ends with d(m-1, b-m).
void paint_sw(LabeledTriangle& d, int b, int m, int label, int sign) {
  check(m >= 1, "sw ray must descend");
  paint(d, 'h', 0, b - 1, sign * label, label);
  for (int r = 1; r < m; ++r) {
    paint(d, 'd', r - 1, b - r, sign * label, label);
    paint(d, 'h', r, b - r - 1, sign * label, label);
  }
  paint(d, 'd', m - 1, b - m, sign * label, label);
}

}  // namespace

LabeledTriangle flow_from_pair(const TableauPairPlusMinus& pair) {
  int n = pair.n, k = pair.k;
  int N = 3 * n - k, wall = 3 * n - 2 * k;
  require(N >= 0, "bad dimensions");
  LabeledTriangle d = LabeledTriangle::blank(N, wall);

  auto cols_minus = columns(pair.t_minus);
  auto cols_plus = columns(pair.t_plus);
  auto count = [](const std::vector<OneColumn>& cs, int h) {
    int c = 0;
    for (const auto& col : cs)
      if (col.height == h) ++c;
    return c;
  };
  // the pairing of section 7 requires equal counts for heights 1 and 2
  for (int hgt : {1, 2})
    check(count(cols_minus, hgt) == count(cols_plus, hgt),
          "height-" + std::to_string(hgt) + " column counts differ");

  FlowWord expected;
  expected.length = N;
  expected.wall = wall;
  expected.syms.assign(N, 0);
  for (const auto& c : cols_minus)
    expected = expected.merged_with(word_of_column(c, '-', n, k));
  for (const auto& c : cols_plus)
    expected = expected.merged_with(word_of_column(c, '+', n, k));

  // closed systems: height-3 and height-2 columns terminate inside the
  // triangle (1+2 merge to 3 = 0 mod 3; a 3-flow starts or ends at a cell)
  for (const auto& c : cols_minus) {
    if (c.height == 1) continue;
    int p1 = c.entries[0], p2 = c.entries[1];
    paint_se(d, p1, p2 - p1, 1, +1);
    paint_sw(d, p2, p2 - p1, 2, +1);
    if (c.height == 3) paint(d, 'h', 0, c.entries[2] - 1, +3, 3);
  }
  for (const auto& c : cols_plus) {
    if (c.height == 1) continue;
    int q1 = N + 1 - c.entries[0], q2 = N + 1 - c.entries[1];
    paint_sw(d, q1, q1 - q2, 1, -1);
    paint_se(d, q2, q1 - q2, 2, -1);
    if (c.height == 3) paint(d, 'h', 0, N - c.entries[2], -3, 3);
  }
  // height-1 columns pair across the wall: one label-1 strand each
  std::vector<int> minus1, plus1;
  for (const auto& c : cols_minus)
    if (c.height == 1) minus1.push_back(c.entries[0]);
  for (const auto& c : cols_plus)
    if (c.height == 1) plus1.push_back(c.entries[0]);
  for (size_t i = 0; i < minus1.size(); ++i) {
    int p = minus1[i], q = N + 1 - plus1[i];
    check(p <= wall && q > wall && p < q, "height-1 pairing order broken");
    paint_se(d, p, q - p, 1, +1);
    paint_sw(d, q, q - p, 1, -1);
  }

  check(d.top_word().to_string() == expected.to_string(),
        "top word must concatenate the column words");
  return d;
}

TableauPairPlusMinus pair_from_flow(const LabeledTriangle& d, int n, int k) {
  int N = 3 * n - k, wall = 3 * n - 2 * k;
  require(d.N == N && d.wall == wall, "flow dimensions do not match (n,k)");
  FlowWord w = d.top_word();
  std::vector<std::vector<int>> minus_rows(3), plus_rows(3);
  for (int i = 1; i <= N; ++i) {
    int s = w.syms[i - 1];
    if (s == 0) continue;
    if (s < 0) {
      require(i <= wall, "barred symbol after the wall");
      minus_rows[-s - 1].push_back(i);
    } else {
      require(i > wall, "plus symbol before the wall");
      plus_rows[s - 1].push_back(N + 1 - i);
    }
  }
  auto build = [](std::vector<std::vector<int>> rows, const char* what) {
    for (auto& r : rows) std::sort(r.begin(), r.end());
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    for (const auto& r : rows)
      require(!r.empty(), std::string(what) + ": empty row between filled rows");
    Tableau t(rows);
    require(t.is_standard(), std::string(what) + ": recovered rows not standard");
    return t;
  };
  TableauPairPlusMinus pair;
  pair.n = n;
  pair.k = k;
  pair.t_minus = build(minus_rows, "flow T-");
  pair.t_plus = build(plus_rows, "flow T+");
  require(pair.t_plus.num_entries() == k && pair.t_minus.num_entries() == 3 * n - 2 * k,
          "flow word has wrong entry counts");
  return pair;
}

bool is_admissible(const LabeledTriangle& d) {
  for (int r = 0; r < d.N; ++r) {
    if (d.get('d', r, 0) != 0) return false;          // left boundary
    if (d.get('u', r, d.N - r) != 0) return false;    // right boundary
  }
  return true;
}

bool uses_legal_templates(const LabeledTriangle& d, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  // raw flows stay in the range reachable by at most two distinct strands
  for (int r = 0; r < d.N; ++r)
    for (char fam : {'h', 'd', 'u'}) {
      int lo = fam == 'u' ? 1 : 0;
      int hi = fam == 'u' ? d.N - r : d.N - r - 1;
      for (int i = lo; i <= hi; ++i) {
        int v = d.get(fam, r, i);
        if (v < -5 || v > 5 || v == 6 || v == -6)
          return fail("edge flow out of range at " + edge_key(fam, r, i));
      }
    }
  // recorded transits: at most two strands per edge, distinct labels
  for (const auto& [key, labels] : d.transits) {
    if (labels.size() > 2) return fail("more than two strands at " + key);
    if (labels.size() == 2 && labels[0] == labels[1])
      return fail("equal labels cross at " + key);
  }
  // mod-3 conservation per cell: down triangle (r,c) has inward sum
  // h(r-1,c-1) - d(r-1,c-1) - u(r-1,c); up triangle (r,c): u(r-1,c) +
  // d(r-1,c) - h(r,c-1)
  for (int r = 1; r <= d.N; ++r) {
    for (int c = 1; c <= d.N - r + 1; ++c) {
      int sum = d.get('h', r - 1, c - 1) - d.get('d', r - 1, c - 1) - d.get('u', r - 1, c);
      if (sum % 3 != 0)
        return fail("down cell (" + std::to_string(r) + "," + std::to_string(c) +
                    ") violates conservation");
    }
    for (int c = 1; c <= d.N - r; ++c) {
      int sum = d.get('u', r - 1, c) + d.get('d', r - 1, c) - d.get('h', r, c - 1);
      if (sum % 3 != 0)
        return fail("up cell (" + std::to_string(r) + "," + std::to_string(c) +
                    ") violates conservation");
    }
  }
  return true;
}

}  // namespace a2web
