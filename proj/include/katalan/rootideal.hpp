#pragma once

#include <optional>
#include <string>
#include <vector>

#include "katalan/partition.hpp"

namespace katalan {

struct Root {
  int i = 0;  // row, 1-based
  int j = 0;  // column, i < j
  friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(const Root& a, const Root& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
};

using RootSet = std::vector<Root>;  // sorted, no duplicates

// Upper order ideal of positive roots of type A_{ell-1}, stored by row counts:
// row i holds the roots (i, ell-r_i+1), ..., (i, ell).
class RootIdeal {
 public:
  RootIdeal() = default;
  // Throws InvalidIdeal unless r_i >= r_{i+1} and r_i <= ell - i.
  RootIdeal(int ell, std::vector<int> rows);

  static RootIdeal empty(int ell);
  static RootIdeal full(int ell);
  // Throws InvalidIdeal if the set is not an upper order ideal.
  static RootIdeal from_roots(int ell, const RootSet& roots);

  int ell() const noexcept { return ell_; }
  const std::vector<int>& rows() const noexcept { return rows_; }
  int row_count(int i) const noexcept { return (i >= 1 && i <= ell_) ? rows_[i - 1] : 0; }
  int col_count(int j) const noexcept;
  int size() const noexcept;
  bool contains(int i, int j) const noexcept;
  bool contains(const Root& a) const noexcept { return contains(a.i, a.j); }
  RootSet roots() const;

  RootSet removable_roots() const;
  RootSet addable_roots() const;
  bool is_removable(const Root& a) const;
  bool is_addable(const Root& a) const;
  RootIdeal without(const Root& a) const;  // requires removable
  RootIdeal with(const Root& a) const;     // requires addable
  RootIdeal without(const RootSet& roots) const;

  // Bounce structure. Undefined values are std::nullopt.
  std::optional<int> down(int x) const;
  std::optional<int> up(int x) const;
  int top(int x) const;
  // top(x), ..., x following down steps.
  std::vector<int> uppath(int x) const;
  // a, down(a), ..., b. Empty when a > b. Throws NotSamePath otherwise.
  std::vector<int> bpath(int a, int b) const;
  // Bounce paths as increasing index lists, ordered by their tops.
  std::vector<std::vector<int>> bounce_paths() const;
  bool same_path(int a, int b) const { return top(a) == top(b); }

  // Rows r..r+d have equal counts.
  bool has_wall(int r, int d = 1) const;
  // Columns c..c+d have equal counts.
  bool has_ceiling(int c, int d = 1) const;
  // Removable roots (r,c) and (r+1,c+1) with c > r+1.
  bool has_mirror(int r) const;

  // nr_i = #{j > i : (i,j) not in the ideal}.
  std::vector<int> nonroot_counts() const;

  // Drop the last column and row (trailing-zero truncation).
  RootIdeal truncated() const;
  RootIdeal prefix(int ell) const;

  std::string str() const;

  friend bool operator==(const RootIdeal& a, const RootIdeal& b) {
    return a.ell_ == b.ell_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const RootIdeal& a, const RootIdeal& b) { return !(a == b); }
  friend bool operator<(const RootIdeal& a, const RootIdeal& b) {
    return a.ell_ != b.ell_ ? a.ell_ < b.ell_ : a.rows_ < b.rows_;
  }

 private:
  int ell_ = 0;
  std::vector<int> rows_;
};

// Multiplicity function on [1..ell].
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(int ell) : ell_(ell), mult_(ell, 0) {}
  Multiset(int ell, std::vector<int> mult);

  static Multiset of_elements(int ell, const std::vector<int>& elements);

  int ell() const noexcept { return ell_; }
  const std::vector<int>& mult() const noexcept { return mult_; }
  int operator()(int j) const noexcept {
    return (j >= 1 && j <= ell_) ? mult_[j - 1] : 0;
  }
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  Multiset plus(int j, int times = 1) const;
  // Throws InvalidWeight if j is not present.
  Multiset minus(int j, int times = 1) const;
  Multiset disjoint_union(const Multiset& other) const;  // same ell
  Multiset extended(int ell) const;                      // pad with zeros
  Multiset prefix(int ell) const;
  bool contains(const Multiset& other) const;
  Multiset difference(const Multiset& other) const;  // requires contains

  std::string str() const;

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.ell_ == b.ell_ && a.mult_ == b.mult_;
  }
  friend bool operator!=(const Multiset& a, const Multiset& b) { return !(a == b); }

 private:
  int ell_ = 0;
  std::vector<int> mult_;
};

// Row i has max(0, ell - k + mu_i - i) roots.
// Requires mu_i <= k and mu_i >= mu_{i+1} - 1; throws InvalidWeight otherwise.
RootIdeal delta_k(int k, int ell, const Weight& mu);
inline RootIdeal delta_k(int k, const Weight& mu) {
  return delta_k(k, static_cast<int>(mu.size()), mu);
}

// m(j) = number of roots in column j.
Multiset multiset_of(const RootIdeal& ideal);
// Column j counted j-1 times (the full lowering multiset).
Multiset full_multiset(int ell);
Multiset multiset_of(int ell, const RootSet& roots);

RootIdeal rc(const RootIdeal& ideal);
RootIdeal rc_power(const RootIdeal& ideal, int a);

int maxband(const RootIdeal& ideal, const Weight& gamma);

// Complement is the disjoint union of the two complements, the second shifted.
RootIdeal concat(const RootIdeal& a, const RootIdeal& b);

// {(i,j) : j - i = y - x, y <= j <= z}.
RootSet diagonal(int x, int y, int z);
// Union of diagonals D^z_{x+t,y} for t = 0..h-1.
RootSet staircase(int x, int y, int z, int h);

// All ideals of Delta^+_ell, lexicographic in the row count sequence.
std::vector<RootIdeal> enumerate_ideals(int ell);

struct SiImage {
  RootSet roots;  // image of the root set (entries may leave Delta^+)
  bool in_positive_roots = true;
  bool is_ideal = false;
  std::optional<RootIdeal> ideal;
};
SiImage si_action(int i, const RootIdeal& ideal);
Multiset si_action(int i, const Multiset& m);
Weight si_action(int i, const Weight& w);

// Grid picture: weights on the diagonal, '#' for roots, '*' marks lowering
// multiplicities placed top-down in each column.
std::string render_grid(const RootIdeal& ideal, const Multiset& m, const Weight& gamma);

}  // namespace katalan
