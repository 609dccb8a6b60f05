#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "katalan/partition.hpp"

namespace katalan {

// Indices of simple reflections, taken mod n = k+1.
using Word = std::vector<int>;

// Affine permutation of Z with w(x + n) = w(x) + n, stored by its window w(1..n).
class AffinePerm {
 public:
  AffinePerm() = default;
  // Throws MismatchedRank if the window is not an affine permutation.
  AffinePerm(int n, std::vector<long> window);

  static AffinePerm identity(int n);
  static AffinePerm simple(int n, int i);

  int n() const noexcept { return n_; }
  int k() const noexcept { return n_ - 1; }
  const std::vector<long>& window() const noexcept { return window_; }
  long operator()(long x) const;

  int length() const;
  AffinePerm times_simple(int i) const;   // w s_i
  AffinePerm simple_times(int i) const;   // s_i w
  AffinePerm inverse() const;
  bool is_grassmannian() const;
  bool has_left_descent(int i) const;
  bool has_right_descent(int i) const;
  // Product of the letters, leftmost first, equal to w.
  Word reduced_word() const;

  std::string str() const;

  friend AffinePerm operator*(const AffinePerm& u, const AffinePerm& v);
  friend bool operator==(const AffinePerm& a, const AffinePerm& b) {
    return a.n_ == b.n_ && a.window_ == b.window_;
  }
  friend bool operator!=(const AffinePerm& a, const AffinePerm& b) { return !(a == b); }
  friend bool operator<(const AffinePerm& a, const AffinePerm& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.window_ < b.window_;
  }

 private:
  int n_ = 0;
  std::vector<long> window_;
};

int mod(long x, int n);

AffinePerm perm_of_word(int k, const Word& word);
// The word (s_{l_l - l} ... s_{1-l}) ... (s_{l_1 - 1} ... s_0) of w_lambda.
// Throws NotKBounded if lambda_1 > k.
Word word_of_partition(int k, const Partition& lambda);
AffinePerm perm_of_partition(int k, const Partition& lambda);

// Two-sided Bruhat order. Throws MismatchedRank for different n.
bool bruhat_leq(const AffinePerm& u, const AffinePerm& w);

// Memoized Bruhat comparisons, safe for concurrent use.
class BruhatOracle {
 public:
  bool leq(const AffinePerm& u, const AffinePerm& w);

 private:
  std::mutex mu_;
  std::map<std::pair<AffinePerm, AffinePerm>, bool> memo_;
};

// 0-Hecke value: Zero or sign * T_perm.
struct SignedHecke {
  int sign = 0;  // 0 means Zero
  AffinePerm perm;

  static SignedHecke zero() { return {}; }
  static SignedHecke basis(const AffinePerm& w, int sign = 1) { return {sign, w}; }
  bool is_zero() const noexcept { return sign == 0; }
  friend bool operator==(const SignedHecke& a, const SignedHecke& b) {
    return a.sign == b.sign && (a.sign == 0 || a.perm == b.perm);
  }
};

// T_i T_w = T_{s_i w} when longer, else -T_w.
SignedHecke hecke_times(int i, const SignedHecke& x);
// T_{word_1} ... T_{word_m} * start, letters applied right to left.
SignedHecke hecke_product(const Word& word, const SignedHecke& start);
// The action on g_v indexed by Grassmannian v: as hecke_times, but Zero when
// s_i v is longer and not Grassmannian.
SignedHecke hecke_act_grassmannian(int i, const SignedHecke& x);

class Core {
 public:
  Core() = default;
  // Throws NotACore if some cell has hook length kplus1.
  Core(int kplus1, Partition shape);

  int kplus1() const noexcept { return n_; }
  const Partition& shape() const noexcept { return shape_; }
  int residue_of_cell(int r, int c) const { return mod(c - r, n_); }
  // (kappa_a - a) mod n, for any a >= 1.
  int row_residue(int a) const { return mod(shape_[a] - a, n_); }
  std::vector<int> addable_rows(int i) const;
  std::vector<int> removable_rows(int i) const;
  // Adds every addable i-corner, or removes every removable one.
  Core add_corners(int i) const;
  Core remove_corners(int i) const;

  friend bool operator==(const Core& a, const Core& b) {
    return a.n_ == b.n_ && a.shape_ == b.shape_;
  }

 private:
  int n_ = 1;
  Partition shape_;
};

bool is_core(int kplus1, const Partition& shape);
std::vector<int> hook_lengths_row(const Partition& shape, int r);

Core core_of(int k, const Partition& lambda);
Partition partition_of(const Core& core);
// Applies the letters right to left to the empty core.
Core core_of_word(int k, const Word& word);
// Core and partition of a Grassmannian element; throws InvalidWeight otherwise.
Core core_of_perm(const AffinePerm& w);
Partition partition_of_perm(const AffinePerm& w);

// Cyclically increasing (or decreasing) word with letter set A, fixing the
// smallest gap. Throws FullSupport if A is all of Z/(k+1).
enum class Cyclic { Increasing, Decreasing };
Word cyclic_word(int k, std::vector<int> letters, Cyclic direction);
std::vector<Word> enumerate_cyclic(int k, int r, Cyclic direction);

// Preimage of R under S u S' -> {-s mod (k+1)}.
std::vector<int> rm_inverse(int ell, int k, const std::vector<int>& residues);
std::vector<int> rm(int k, const std::vector<int>& set);

Word tau(int k, const Word& word);
Partition k_conjugate(int k, const Partition& mu);

// Finite permutations in one-line notation, values 1..k+1.
using FinitePerm = std::vector<int>;
Partition zeta(int k, const FinitePerm& w);
Partition irreducible_reduce(int k, const Partition& mu);
Partition theta(int k, const FinitePerm& w);
std::vector<FinitePerm> all_finite_perms(int n);
// Right descents of a finite permutation w(i) > w(i+1).
std::vector<int> finite_descents(const FinitePerm& w);

}  // namespace katalan
