#pragma once

#include <map>
#include <string>
#include <vector>

namespace a2web {

// Weakly decreasing parts, implicitly zero-padded.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int rows() const;                  // number of nonzero parts
  int part(int i) const;             // 0-based, 0 beyond the end
  int size() const;                  // sum of parts
  Partition conjugate() const;
  bool contains(const Partition& inner) const;
  bool operator==(const Partition& o) const;
  bool operator<(const Partition& o) const;
  std::string to_string() const;     // "3,3,1"
};

using TypeMultiset = std::map<int, int>;  // value -> multiplicity

// Row-major grid; 0 marks an inner (skew) cell. Non-skew tableaux have an
// all-zero inner shape.
struct Tableau {
  Partition shape;
  Partition inner;                   // inner shape for skew tableaux
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r);
  Tableau(Partition outer, Partition in, std::vector<std::vector<int>> r);

  bool empty() const { return shape.size() == 0; }
  int cell(int i, int j) const;      // 0-based; 0 if absent/inner
  bool is_skew() const { return inner.size() > 0; }
  int num_entries() const;
  std::vector<int> entries() const;  // all entries, sorted
  TypeMultiset type() const;

  bool is_semistandard() const;      // weak rows, strict columns (skew ok)
  bool is_standard() const;          // semistandard + distinct entries

  bool operator==(const Tableau& o) const;
  bool operator<(const Tableau& o) const;

  // "1,2,4/3,5,6" with "." for inner cells.
  std::string to_string() const;
  static Tableau from_string(const std::string& s);
};

// Transpose rows and columns. Rejects skew input.
Tableau conjugate(const Tableau& t);

// Rotate by 180 degrees inside the bounding rectangle of the outer shape.
// A skew tableau R/nu becomes a straight tableau whose entries are reversed;
// entries themselves are not relabeled.
Tableau rotate180(const Tableau& t);

// The bijection phi: semistandard of shape nu inside (n^k), type
// {1^(n-1),...,k^(n-1)}  ->  standard of shape (nu^c)^t with entries 1..k.
Tableau complement_phi(const Tableau& t, int n, int k);
Tableau complement_phi_inverse(const Tableau& s, int n, int k);

// All semistandard tableaux of the given shape and type, sorted row-major.
std::vector<Tableau> enumerate_semistandard(const Partition& shape,
                                            const TypeMultiset& type);
std::vector<Tableau> enumerate_standard(const Partition& shape);

// k!/h(shape) by the hook-length formula.
long long count_standard_hook(const Partition& shape);

// The type {1^2,...,k^2, k+1,...,3n-k} of the bijection's domain.
TypeMultiset phi_domain_type(int n, int k);

// Inputs to the main bijection for given (n,k): SSYT of shape (3^n).
std::vector<Tableau> enumerate_phi_domain(int n, int k);

struct TableauPairPlusMinus {
  Tableau t_plus;   // shape lambda |- k, at most 3 rows, entries 1..k
  Tableau t_minus;  // shape mu |- 3n-2k, at most 3 rows, entries 1..3n-2k
  int n = 0;
  int k = 0;

  bool operator==(const TableauPairPlusMinus& o) const {
    return n == o.n && k == o.k && t_plus == o.t_plus && t_minus == o.t_minus;
  }
};

// Steps 1-4: T -> (T+, T-).
TableauPairPlusMinus decompose(const Tableau& t, int k);

// Inverse of decompose.
Tableau recompose(const TableauPairPlusMinus& pair);

// Step 5: T -> (T_box, T_diamond). T_box has shape (r3,r3,r3) where r3 is the
// length of row 3; T_diamond is the rest, rows shifted left.
std::pair<Tableau, Tableau> split_box_diamond(const Tableau& t);

}  // namespace a2web
