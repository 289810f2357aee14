#include "a2web/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "a2web/error.hpp"

namespace a2web {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] > 0, "partition parts must be positive");
    if (i + 1 < parts.size())
      require(parts[i] >= parts[i + 1], "partition parts must weakly decrease");
  }
}

int Partition::rows() const { return static_cast<int>(parts.size()); }

int Partition::part(int i) const {
  return (i >= 0 && i < rows()) ? parts[i] : 0;
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 0; j < part(0); ++j) {
    int cnt = 0;
    for (int p : parts)
      if (p > j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(c);
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

bool Partition::operator==(const Partition& o) const { return parts == o.parts; }
bool Partition::operator<(const Partition& o) const { return parts < o.parts; }

std::string Partition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  return os.str();
}

Tableau::Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
  std::vector<int> outer;
  for (auto& row : rows) outer.push_back(static_cast<int>(row.size()));
  shape = Partition(outer);
  rows.resize(shape.rows());
}

Tableau::Tableau(Partition outer, Partition in, std::vector<std::vector<int>> r)
    : shape(std::move(outer)), inner(std::move(in)), rows(std::move(r)) {
  require(shape.contains(inner), "inner shape must fit inside outer shape");
  rows.resize(shape.rows());
  for (int i = 0; i < shape.rows(); ++i) {
    rows[i].resize(shape.part(i), 0);
    for (int j = 0; j < inner.part(i); ++j)
      require(rows[i][j] == 0, "inner cells must be empty");
    for (int j = inner.part(i); j < shape.part(i); ++j)
      require(rows[i][j] > 0, "outer cells must be filled");
  }
}

int Tableau::cell(int i, int j) const {
  if (i < 0 || i >= shape.rows()) return 0;
  if (j < 0 || j >= shape.part(i)) return 0;
  return rows[i][j];
}

int Tableau::num_entries() const { return shape.size() - inner.size(); }

std::vector<int> Tableau::entries() const {
  std::vector<int> out;
  for (const auto& row : rows)
    for (int v : row)
      if (v > 0) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

TypeMultiset Tableau::type() const {
  TypeMultiset t;
  for (int v : entries()) t[v]++;
  return t;
}

bool Tableau::is_semistandard() const {
  for (int i = 0; i < shape.rows(); ++i) {
    for (int j = inner.part(i); j < shape.part(i); ++j) {
      int v = rows[i][j];
      if (v <= 0) return false;
      if (j + 1 < shape.part(i) && rows[i][j + 1] > 0 && rows[i][j + 1] < v)
        return false;
      int below = cell(i + 1, j);
      if (below > 0 && below <= v) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  auto e = entries();
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

bool Tableau::operator==(const Tableau& o) const {
  return shape == o.shape && inner == o.inner && rows == o.rows;
}

bool Tableau::operator<(const Tableau& o) const {
  if (!(shape == o.shape)) return shape < o.shape;
  if (!(inner == o.inner)) return inner < o.inner;
  return rows < o.rows;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < shape.rows(); ++i) {
    if (i) os << '/';
    for (int j = 0; j < shape.part(i); ++j) {
      if (j) os << ',';
      if (j < inner.part(i))
        os << '.';
      else
        os << rows[i][j];
    }
  }
  return os.str();
}

Tableau Tableau::from_string(const std::string& s) {
  std::vector<std::vector<int>> grid;
  std::vector<int> outer, in;
  std::stringstream ss(s);
  std::string rowstr;
  bool empty_input = s.empty();
  while (!empty_input && std::getline(ss, rowstr, '/')) {
    std::vector<int> row;
    int inner_len = 0;
    bool seen_entry = false;
    std::stringstream rs(rowstr);
    std::string tok;
    while (std::getline(rs, tok, ',')) {
      if (tok == ".") {
        if (seen_entry) throw ParseError("inner cell after entry in row");
        ++inner_len;
        row.push_back(0);
      } else {
        try {
          size_t pos = 0;
          int v = std::stoi(tok, &pos);
          if (pos != tok.size() || v <= 0) throw ParseError("bad entry: " + tok);
          row.push_back(v);
          seen_entry = true;
        } catch (const std::logic_error&) {
          throw ParseError("bad entry: " + tok);
        }
      }
    }
    grid.push_back(row);
    outer.push_back(static_cast<int>(row.size()));
    in.push_back(inner_len);
  }
  try {
    return Tableau(Partition(outer), Partition(in), grid);
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed tableau: ") + e.what());
  }
}

Tableau conjugate(const Tableau& t) {
  require(!t.is_skew(), "conjugate: skew input rejected");
  std::vector<std::vector<int>> grid(t.shape.part(0));
  for (int i = 0; i < t.shape.rows(); ++i)
    for (int j = 0; j < t.shape.part(i); ++j) grid[j].push_back(t.rows[i][j]);
  return Tableau(grid);
}

Tableau rotate180(const Tableau& t) {
  int R = t.shape.rows();
  if (R == 0) return Tableau();
  int C = t.shape.part(0);
  // (i,j) -> (R-1-i, C-1-j) on the bounding rectangle.
  std::vector<std::vector<int>> rect(R, std::vector<int>(C, 0));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) rect[R - 1 - i][C - 1 - j] = t.cell(i, j);
  std::vector<std::vector<int>> grid;
  std::vector<int> outer, in;
  for (int i = 0; i < R; ++i) {
    int lead = 0;
    while (lead < C && rect[i][lead] == 0) ++lead;
    int len = C;
    while (len > lead && rect[i][len - 1] == 0) --len;
    if (len == lead && i >= 0) {
      // fully empty row only allowed at the bottom of the rotated shape
      len = lead = 0;
    }
    std::vector<int> row(rect[i].begin(), rect[i].begin() + len);
    if (len > 0) {
      grid.push_back(row);
      outer.push_back(len);
      in.push_back(lead);
    }
  }
  return Tableau(Partition(outer), Partition(in), grid);
}

Tableau complement_phi(const Tableau& t, int n, int k) {
  require(!t.is_skew(), "complement_phi: skew input rejected");
  require(t.is_semistandard(), "complement_phi: input not semistandard");
  Partition rect(std::vector<int>(k, n));
  require(rect.contains(t.shape), "complement_phi: shape does not fit in (n^k)");
  TypeMultiset want;
  for (int v = 1; v <= k; ++v)
    if (n - 1 > 0) want[v] = n - 1;
  require(t.type() == want, "complement_phi: wrong type multiset");

  // Fill each column's missing values of {1..k} ascending bottom-to-top.
  std::vector<std::vector<int>> filler(k, std::vector<int>(n, 0));
  Partition nut = t.shape.conjugate();
  for (int j = 0; j < n; ++j) {
    std::vector<bool> present(k + 1, false);
    for (int i = 0; i < nut.part(j); ++i) {
      int v = t.cell(i, j);
      require(v >= 1 && v <= k, "complement_phi: entry out of range");
      require(!present[v], "complement_phi: repeated value in a column");
      present[v] = true;
    }
    std::vector<int> missing;
    for (int v = 1; v <= k; ++v)
      if (!present[v]) missing.push_back(v);
    check(static_cast<int>(missing.size()) == k - nut.part(j),
          "complement_phi: column fill count mismatch");
    for (size_t m = 0; m < missing.size(); ++m)
      filler[k - 1 - static_cast<int>(m)][j] = missing[m];
  }

  // Rotate the filler region 180 degrees; it becomes a straight tableau of
  // shape nu^c, then conjugate.
  std::vector<std::vector<int>> grid;
  for (int i = 0; i < k; ++i) {
    std::vector<int> row;
    for (int j = 0; j < n; ++j) {
      int v = filler[k - 1 - i][n - 1 - j];
      if (v != 0) row.push_back(v);
    }
    if (!row.empty()) grid.push_back(row);
  }
  Tableau rotated(grid);
  check(rotated.is_standard(), "complement_phi: rotated filler not standard");
  Tableau out = rotated.empty() ? Tableau() : conjugate(rotated);
  check(out.is_standard(), "complement_phi: output not standard");
  return out;
}

Tableau complement_phi_inverse(const Tableau& s, int n, int k) {
  require(s.is_standard(), "complement_phi_inverse: input not standard");
  if (k == 0) {
    require(s.empty(), "complement_phi_inverse: nonempty input with k=0");
    return Tableau();
  }
  auto e = s.entries();
  require(static_cast<int>(e.size()) == k, "complement_phi_inverse: need k entries");
  for (int i = 0; i < k; ++i)
    require(e[i] == i + 1, "complement_phi_inverse: entries must be 1..k");

  // Undo the conjugate and rotation to place values in the complement region.
  Tableau rotated = s.empty() ? Tableau() : conjugate(s);
  Partition nuc = rotated.shape;  // = nu^c
  std::vector<int> nu_parts;
  for (int i = 0; i < k; ++i) nu_parts.push_back(n - nuc.part(k - 1 - i));
  Partition nu(nu_parts);
  require(nu.part(0) <= n, "complement_phi_inverse: shape infeasible");

  std::vector<std::vector<int>> filler(k, std::vector<int>(n, 0));
  for (int i = 0; i < nuc.rows(); ++i)
    for (int j = 0; j < nuc.part(i); ++j)
      filler[k - 1 - i][n - 1 - j] = rotated.rows[i][j];

  std::vector<std::vector<int>> grid(nu.rows());
  for (int j = 0; j < n; ++j) {
    std::vector<bool> used(k + 1, false);
    for (int i = 0; i < k; ++i) {
      int v = filler[i][j];
      if (v != 0) {
        require(v >= 1 && v <= k && !used[v],
                "complement_phi_inverse: bad filler column");
        used[v] = true;
      }
    }
    Partition nut = nu.conjugate();
    std::vector<int> present;
    for (int v = 1; v <= k; ++v)
      if (!used[v]) present.push_back(v);
    check(static_cast<int>(present.size()) == nut.part(j),
          "complement_phi_inverse: column size mismatch");
    for (int i = 0; i < nut.part(j); ++i) grid[i].push_back(present[i]);
  }
  Tableau out(grid);
  require(out.is_semistandard(), "complement_phi_inverse: result not semistandard");
  return out;
}

namespace {

void enumerate_rec(const Partition& shape, TypeMultiset& remaining,
                   std::vector<std::vector<int>>& grid, int i, int j,
                   std::vector<Tableau>& out) {
  if (i == shape.rows()) {
    out.emplace_back(grid);
    return;
  }
  int ni = i, nj = j + 1;
  if (nj == shape.part(i)) {
    ni = i + 1;
    nj = 0;
  }
  int left = (j > 0) ? grid[i][j - 1] : 0;
  int above = (i > 0 && j < shape.part(i - 1)) ? grid[i - 1][j] : 0;
  for (auto& [v, cnt] : remaining) {
    if (cnt == 0 || v < left || v <= above) continue;
    --cnt;
    grid[i][j] = v;
    enumerate_rec(shape, remaining, grid, ni, nj, out);
    ++cnt;
  }
  grid[i][j] = 0;
}

}  // namespace

std::vector<Tableau> enumerate_semistandard(const Partition& shape,
                                            const TypeMultiset& type) {
  int total = 0;
  for (auto& [v, c] : type) {
    require(v > 0 && c >= 0, "type must have positive values");
    total += c;
  }
  require(total == shape.size(), "type size must equal shape size");
  std::vector<Tableau> out;
  if (shape.size() == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::vector<int>> grid(shape.rows());
  for (int i = 0; i < shape.rows(); ++i) grid[i].assign(shape.part(i), 0);
  TypeMultiset remaining = type;
  enumerate_rec(shape, remaining, grid, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> enumerate_standard(const Partition& shape) {
  TypeMultiset type;
  for (int v = 1; v <= shape.size(); ++v) type[v] = 1;
  return enumerate_semistandard(shape, type);
}

long long count_standard_hook(const Partition& shape) {
  int d = shape.size();
  if (d == 0) return 1;
  Partition conj = shape.conjugate();
  // k! / prod(hooks), computed by cancellation to stay in integers.
  std::vector<long long> hooks;
  for (int i = 0; i < shape.rows(); ++i)
    for (int j = 0; j < shape.part(i); ++j)
      hooks.push_back((shape.part(i) - j) + (conj.part(j) - i) - 1);
  long long num = 1;
  std::vector<long long> pending = hooks;
  for (int v = 2; v <= d; ++v) {
    num *= v;
    for (auto& h : pending) {
      if (h != 1 && num % h == 0) {
        num /= h;
        h = 1;
      }
    }
  }
  for (auto h : pending) {
    check(h == 1 || num % h == 0, "hook length division");
    if (h != 1) num /= h;
  }
  return num;
}

TypeMultiset phi_domain_type(int n, int k) {
  require(n >= 0 && k >= 0 && 2 * k <= 3 * n, "need 2k <= 3n");
  TypeMultiset type;
  for (int v = 1; v <= k; ++v) type[v] = 2;
  for (int v = k + 1; v <= 3 * n - k; ++v) type[v] = 1;
  return type;
}

std::vector<Tableau> enumerate_phi_domain(int n, int k) {
  return enumerate_semistandard(Partition(std::vector<int>(n, 3)),
                                phi_domain_type(n, k));
}

TableauPairPlusMinus decompose(const Tableau& t, int k) {
  require(!t.is_skew() && t.is_semistandard(), "decompose: need semistandard input");
  int n = t.shape.rows();
  for (int i = 0; i < n; ++i)
    require(t.shape.part(i) == 3, "decompose: shape must be (3^n)");
  require(t.type() == phi_domain_type(n, k), "decompose: type mismatch with (n,k)");

  // Step 1: T1 = subtableau on entries {1..k}.
  std::vector<std::vector<int>> g1;
  for (int i = 0; i < n; ++i) {
    std::vector<int> row;
    for (int j = 0; j < 3; ++j)
      if (t.rows[i][j] <= k) row.push_back(t.rows[i][j]);
    if (!row.empty()) g1.push_back(row);
  }
  Tableau t1(g1);

  // Step 2.
  Tableau t_plus = complement_phi(t1, 3, k);

  // Step 3: skew subtableau on entries {k+1..3n-k}.
  Partition nu = t1.shape;
  std::vector<std::vector<int>> g2(n);
  std::vector<int> outer(n, 3);
  std::vector<int> in;
  for (int i = 0; i < n; ++i) {
    g2[i].assign(3, 0);
    in.push_back(nu.part(i));
    for (int j = nu.part(i); j < 3; ++j) g2[i][j] = t.rows[i][j];
  }
  Tableau t2(Partition(outer), Partition(in), g2);

  // Step 4: relabel i -> 3n-k+1-i, rotate, conjugate.
  Tableau relabeled = t2;
  for (auto& row : relabeled.rows)
    for (auto& v : row)
      if (v != 0) v = 3 * n - k + 1 - v;
  Tableau rot = rotate180(relabeled);
  check(!rot.is_skew(), "decompose: rotated T2 should be straight");
  Tableau t_minus = rot.empty() ? Tableau() : conjugate(rot);
  check(t_minus.is_standard(), "decompose: T- not standard");

  TableauPairPlusMinus pair{t_plus, t_minus, n, k};
  Partition nut = nu.conjugate();
  check(t_plus.shape ==
            Partition({k - nut.part(2), k - nut.part(1), k - nut.part(0)}),
        "decompose: lambda shape law");
  check(t_minus.shape ==
            Partition({n - nut.part(2), n - nut.part(1), n - nut.part(0)}),
        "decompose: mu shape law");
  return pair;
}

Tableau recompose(const TableauPairPlusMinus& pair) {
  int n = pair.n, k = pair.k;
  require(n >= 0 && 2 * k <= 3 * n, "recompose: bad (n,k)");
  Tableau t1 = complement_phi_inverse(pair.t_plus, 3, k);
  Partition nu = t1.shape;

  // Invert Step 4: conjugate, rotate into (3^n)/nu, relabel back.
  Tableau t2;
  if (!pair.t_minus.empty()) {
    Tableau conj = conjugate(pair.t_minus);
    // Embed conj (shape mu^t) into the n x 3 rectangle, rotate 180.
    std::vector<std::vector<int>> rect(n, std::vector<int>(3, 0));
    require(conj.shape.rows() <= n && conj.shape.part(0) <= 3,
            "recompose: T- too large for (3^n)");
    for (int i = 0; i < conj.shape.rows(); ++i)
      for (int j = 0; j < conj.shape.part(i); ++j)
        rect[n - 1 - i][2 - j] = 3 * n - k + 1 - conj.rows[i][j];
    std::vector<int> outer(n, 3), in;
    for (int i = 0; i < n; ++i) {
      int lead = 0;
      while (lead < 3 && rect[i][lead] == 0) ++lead;
      in.push_back(lead);
      for (int j = lead; j < 3; ++j)
        require(rect[i][j] != 0, "recompose: T- does not fill a skew shape");
    }
    t2 = Tableau(Partition(outer), Partition(in), rect);
    require(t2.inner == nu, "recompose: incompatible shapes");
  } else {
    require(nu == Partition(std::vector<int>(n, 3)) || n == 0,
            "recompose: incompatible shapes");
  }

  std::vector<std::vector<int>> grid(n, std::vector<int>(3, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 3; ++j)
      grid[i][j] = (j < nu.part(i)) ? t1.cell(i, j) : t2.cell(i, j);
  Tableau out(grid);
  require(out.is_semistandard(), "recompose: result not semistandard");
  return out;
}

std::pair<Tableau, Tableau> split_box_diamond(const Tableau& t) {
  require(t.is_standard() && !t.is_skew(), "split: need standard input");
  require(t.shape.rows() <= 3, "split: more than 3 rows");
  std::vector<int> row1(t.rows.size() > 0 ? t.rows[0] : std::vector<int>{});
  std::vector<int> row2(t.rows.size() > 1 ? t.rows[1] : std::vector<int>{});
  std::vector<int> row3(t.rows.size() > 2 ? t.rows[2] : std::vector<int>{});

  std::vector<bool> used2(row2.size(), false), used1(row1.size(), false);
  std::vector<int> js, is;
  for (int ell : row3) {
    int pick = -1;
    for (int j = static_cast<int>(row2.size()) - 1; j >= 0; --j)
      if (!used2[j] && row2[j] < ell) {
        pick = j;
        break;
      }
    check(pick >= 0, "split: no second-row match; input not standard?");
    used2[pick] = true;
    js.push_back(row2[pick]);
  }
  for (int jp : js) {
    int pick = -1;
    for (int j = static_cast<int>(row1.size()) - 1; j >= 0; --j)
      if (!used1[j] && row1[j] < jp) {
        pick = j;
        break;
      }
    check(pick >= 0, "split: no first-row match; input not standard?");
    used1[pick] = true;
    is.push_back(row1[pick]);
  }
  std::sort(is.begin(), is.end());
  std::sort(js.begin(), js.end());

  std::vector<std::vector<int>> box_grid;
  if (!row3.empty()) box_grid = {is, js, row3};
  Tableau box(box_grid);

  std::vector<std::vector<int>> dia_grid;
  std::vector<int> d1, d2;
  for (size_t j = 0; j < row1.size(); ++j)
    if (!used1[j]) d1.push_back(row1[j]);
  for (size_t j = 0; j < row2.size(); ++j)
    if (!used2[j]) d2.push_back(row2[j]);
  if (!d1.empty()) dia_grid.push_back(d1);
  if (!d2.empty()) dia_grid.push_back(d2);
  Tableau dia(dia_grid);

  check(box.is_standard(), "split: T_box not standard");
  check(dia.is_standard(), "split: T_diamond not standard");
  return {box, dia};
}

}  // namespace a2web
