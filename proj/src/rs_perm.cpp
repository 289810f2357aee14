#include "a2web/rs_perm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "a2web/error.hpp"
#include "a2web/planar.hpp"

namespace a2web {

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    require(v >= 1 && v <= size() && !seen[v], "not a permutation of 1..l");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  return Permutation(im);
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 1; i <= size(); ++i) im[images[i - 1] - 1] = i;
  return Permutation(im);
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << images[i];
  os << ']';
  return os.str();
}

Permutation Permutation::from_string(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("permutation: unbalanced brackets");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> im;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      im.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      throw ParseError("permutation: bad entry " + tok);
    }
  }
  try {
    return Permutation(im);
  } catch (const DomainError& e) {
    throw ParseError(std::string("permutation: ") + e.what());
  }
}

std::pair<Tableau, Tableau> rs(const Permutation& sigma) {
  std::vector<std::vector<int>> q, r;
  for (int step = 1; step <= sigma.size(); ++step) {
    int x = sigma(step);
    size_t row = 0;
    while (true) {
      if (row == q.size()) {
        q.push_back({});
        r.push_back({});
      }
      auto it = std::upper_bound(q[row].begin(), q[row].end(), x);
      if (it == q[row].end()) {
        q[row].push_back(x);
        r[row].push_back(step);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  Tableau R(r), Q(q);
  check(R.is_standard() && Q.is_standard() && R.shape == Q.shape, "rs output broken");
  return {R, Q};
}

Permutation rs_inverse(const Tableau& r, const Tableau& q) {
  require(r.is_standard() && q.is_standard(), "rs_inverse needs standard tableaux");
  require(r.shape == q.shape, "rs_inverse: shape mismatch");
  int l = r.num_entries();
  auto re = r.entries();
  for (int i = 0; i < l; ++i)
    require(re[i] == i + 1, "rs_inverse: recording tableau must contain 1..l");
  std::vector<std::vector<int>> qq = q.rows;
  std::vector<std::vector<int>> rr = r.rows;
  std::vector<int> images(l);
  for (int step = l; step >= 1; --step) {
    int row = -1;
    for (size_t i = 0; i < rr.size(); ++i)
      if (!rr[i].empty() && rr[i].back() == step) {
        row = static_cast<int>(i);
        break;
      }
    require(row >= 0, "rs_inverse: entry not removable; not a recording tableau");
    rr[row].pop_back();
    int y = qq[row].back();
    qq[row].pop_back();
    for (int i = row - 1; i >= 0; --i) {
      auto it = std::lower_bound(qq[i].begin(), qq[i].end(), y);
      check(it != qq[i].begin(), "rs_inverse: reverse bump failed");
      --it;
      std::swap(y, *it);
    }
    images[step - 1] = y;
  }
  Permutation sigma(images);
  return sigma;
}

bool is_321_avoiding(const Permutation& sigma) {
  int l = sigma.size();
  // best[i]: the largest value of sigma(a) over a < i with sigma(a) > sigma(i)
  // gives a descent pair; track whether any pair extends to a triple.
  std::vector<int> prefix_max(l + 1, 0);
  std::vector<int> pair_top(l + 1, 0);  // max sigma(b) over descents (b, i)
  int best_pair_high = 0;               // max over seen pairs of their smaller value
  for (int i = 1; i <= l; ++i) {
    int v = sigma(i);
    if (best_pair_high > v) return false;
    if (prefix_max[i - 1] > v) best_pair_high = std::max(best_pair_high, v);
    prefix_max[i] = std::max(prefix_max[i - 1], v);
    (void)pair_top;
  }
  return true;
}

LFRPartition lfr(const Permutation& sigma) {
  LFRPartition out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma(i) < i)
      out.L.push_back(i);
    else if (sigma(i) == i)
      out.F.push_back(i);
    else
      out.R.push_back(i);
  }
  return out;
}

namespace {

struct Wiring {
  // crossings[s]: (t parameter, other strand), sorted from top to bottom
  std::vector<std::vector<std::pair<Rat, int>>> per_strand;
};

Wiring wiring_of(const Permutation& sigma) {
  int l = sigma.size();
  Wiring w;
  w.per_strand.resize(l + 1);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      if (sigma(i) > sigma(j)) {
        Rat t(j - i, (j - i) + (sigma(i) - sigma(j)));
        w.per_strand[i].push_back({t, j});
        w.per_strand[j].push_back({t, i});
      }
  for (auto& v : w.per_strand)
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      if (a.first < b.first) return true;
      if (b.first < a.first) return false;
      return a.second < b.second;
    });
  return w;
}

}  // namespace

TripResult trip(const Permutation& sigma, Endpoint start) {
  require(is_321_avoiding(sigma), "trip requires a 321-avoiding permutation");
  require(start.index >= 1 && start.index <= sigma.size(), "start out of range");
  require(start.side == 't' || start.side == 'b', "start side must be t or b");
  Wiring w = wiring_of(sigma);

  int strand;
  bool going_down;
  int pos;  // index into per_strand[strand] of the next crossing to hit
  if (start.side == 't') {
    strand = start.index;
    going_down = true;
    pos = 0;
  } else {
    strand = sigma.inverse()(start.index);
    going_down = false;
    pos = static_cast<int>(w.per_strand[strand].size()) - 1;
  }
  int turns = 0;
  while (true) {
    const auto& list = w.per_strand[strand];
    if (pos < 0 || pos >= static_cast<int>(list.size())) {
      Endpoint end = going_down ? Endpoint{'b', sigma(strand)} : Endpoint{'t', strand};
      return {end, turns};
    }
    auto [t, other] = list[pos];
    ++turns;
    // cup/cap smoothing: switch strand, reverse vertical direction
    const auto& olist = w.per_strand[other];
    int opos = -1;
    for (size_t i = 0; i < olist.size(); ++i)
      if (olist[i].first == t && olist[i].second == strand) {
        opos = static_cast<int>(i);
        break;
      }
    check(opos >= 0, "crossing missing from partner strand");
    strand = other;
    going_down = !going_down;
    pos = going_down ? opos + 1 : opos - 1;
  }
}

bool Matching::is_noncrossing() const {
  // circular order t_1..t_l, b_l..b_1
  auto circ = [&](Endpoint e) { return e.side == 't' ? e.index : 2 * ell - e.index + 1; };
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      int a1 = circ(pairs[a].first), a2 = circ(pairs[a].second);
      int b1 = circ(pairs[b].first), b2 = circ(pairs[b].second);
      if (a1 > a2) std::swap(a1, a2);
      if (b1 > b2) std::swap(b1, b2);
      bool b1_in = a1 < b1 && b1 < a2;
      bool b2_in = a1 < b2 && b2 < a2;
      if (b1_in != b2_in) return false;
    }
  return true;
}

std::string Matching::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < pairs.size(); ++i) {
    os << (i ? "," : "") << pairs[i].first.side << pairs[i].first.index << '-'
       << pairs[i].second.side << pairs[i].second.index;
  }
  return os.str();
}

bool Matching::operator<(const Matching& o) const {
  auto key = [](const Matching& m) {
    std::vector<std::tuple<char, int, char, int>> k;
    for (auto& p : m.pairs)
      k.push_back({p.first.side, p.first.index, p.second.side, p.second.index});
    return k;
  };
  if (ell != o.ell) return ell < o.ell;
  return key(*this) < key(o);
}

Matching temperley_lieb(const Permutation& sigma) {
  Matching m;
  m.ell = sigma.size();
  std::set<std::pair<Endpoint, Endpoint>> seen;
  for (int side = 0; side < 2; ++side)
    for (int i = 1; i <= sigma.size(); ++i) {
      Endpoint start{side == 0 ? 't' : 'b', i};
      TripResult r = trip(sigma, start);
      // parity law: odd turn count iff we end on the side we started
      check((r.turns % 2 == 1) == (r.end.side == start.side),
            "trip parity law violated");
      Endpoint a = start, b = r.end;
      if (b < a) std::swap(a, b);
      seen.insert({a, b});
    }
  check(static_cast<int>(seen.size()) == sigma.size(), "trips must pair endpoints");
  m.pairs.assign(seen.begin(), seen.end());
  return m;
}

PermDiagram diagram(const Permutation& sigma) {
  require(is_321_avoiding(sigma), "diagram requires a 321-avoiding permutation");
  int l = sigma.size();
  std::vector<Curve> curves;
  Rat upper(5, 8), lower(3, 8);
  for (int i = 1; i <= l; ++i) {
    Curve c;
    c.points = {Pt{Rat(i), Rat(1)}, Pt{Rat(i), upper}, Pt{Rat(sigma(i)), lower},
                Pt{Rat(sigma(i)), Rat(0)}};
    if (i == sigma(i)) c.points = {Pt{Rat(i), Rat(1)}, Pt{Rat(i), Rat(0)}};
    c.travel_reversed = true;  // flows run bottom to top
    curves.push_back(c);
  }
  PermDiagram d;
  d.sigma = sigma;
  PlanarMap pm = build_planar_map(curves);
  d.flat = web_from_planar(pm, l, l, false);
  d.fs = d.flat.faces(/*crossing_jumps=*/true);
  d.delta_top = d.fs.delta_top;
  d.delta_bot = d.fs.delta_bot;
  for (int v : d.delta_top) check(v == 0 || v == 1, "delta_top outside {0,1}");
  for (int v : d.delta_bot) check(v == 0 || v == 1, "delta_bot outside {0,1}");
  return d;
}

std::pair<Tableau, Tableau> psi(const Permutation& sigma) {
  PermDiagram d = diagram(sigma);
  auto build = [&](const std::vector<int>& delta) {
    std::vector<std::vector<int>> rows(2);
    for (int i = 1; i <= sigma.size(); ++i) {
      check(delta[i - 1] == 0 || delta[i - 1] == 1, "delta outside {0,1}");
      rows[delta[i - 1] == 1 ? 0 : 1].push_back(i);
    }
    if (rows[1].empty()) rows.pop_back();
    if (!rows.empty() && rows[0].empty()) rows.erase(rows.begin());
    Tableau t(rows);
    check(t.is_standard(), "psi produced a non-standard tableau");
    return t;
  };
  return {build(d.delta_top), build(d.delta_bot)};
}

}  // namespace a2web
