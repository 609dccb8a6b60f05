#pragma once

#include <climits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "katalan/integer.hpp"
#include "katalan/partition.hpp"

namespace katalan {

// Finite Z-combination of complete homogeneous monomials h_lambda.
// Terms are kept sorted by graded_revlex_less with no zero coefficients.
class SymFunc {
 public:
  struct Term {
    Partition mono;
    Integer coeff;
  };

  static constexpr int kMinusInfinity = INT_MIN;

  SymFunc() = default;

  static SymFunc one();
  static SymFunc constant(const Integer& c);
  // h_d; h_0 = 1 and h_d = 0 for d < 0.
  static SymFunc h(int d);
  static SymFunc monomial(const Partition& mono, const Integer& c = 1);
  static SymFunc from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept;
  Integer coeff(const Partition& mono) const;

  SymFunc homogeneous_component(int d) const;
  SymFunc top_component() const { return homogeneous_component(degree()); }
  // Largest h-part appearing; 0 for constants and zero.
  int max_part() const noexcept;
  bool in_k_bounded_subring(int k) const noexcept { return max_part() <= k; }

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Integer& c);

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Integer& c) { return a *= c; }
  friend SymFunc operator*(const Integer& c, SymFunc a) { return a *= c; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend bool operator==(const SymFunc& a, const SymFunc& b);
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  // Human-readable, e.g. "h(2,1) - 3*h(3) + 1".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

// Unsorted accumulator for building sums quickly.
class SymFuncBuilder {
 public:
  void add(const Partition& mono, const Integer& c);
  void add(Partition&& mono, const Integer& c);
  void add(const SymFunc& f, const Integer& scale = 1);
  // Adds scale * f * h_mono.
  void add_product(const SymFunc& f, const Partition& mono, const Integer& scale);
  SymFunc build() &&;
  std::size_t size() const noexcept { return acc_.size(); }

 private:
  std::unordered_map<Partition, Integer, PartitionHash> acc_;
};

SymFunc multiply(const SymFunc& f, const SymFunc& g);

// k_m^{(r)} = sum_{i=0}^{m} binom(r+i-1, i) h_{m-i}; zero for m < 0.
SymFunc k_hom(int m, int r);
// Per-thread memo of k_hom.
const SymFunc& cached_k_hom(int m, int r);
// k_{gamma_1}^{(0)} k_{gamma_2}^{(1)} ... k_{gamma_l}^{(l-1)}.
SymFunc kappa(const Weight& gamma);
// prod_j k_hom(gamma_j, shifts_j); kappa uses shifts_j = j-1.
SymFunc kappa_shifted(const Weight& gamma, const std::vector<int>& shifts);

SymFunc schur(const Weight& gamma);
SymFunc elementary(int d);
SymFunc dual_groth_det(const Weight& gamma);
inline SymFunc dual_groth_det(const Partition& lambda) {
  return dual_groth_det(lambda.as_weight());
}
// Expands prod_{i<j}(1 - R_ij) on the weight and applies kappa.
SymFunc dual_groth_raise(const Weight& gamma);

// Exact determinant by cofactor expansion over column subsets.
SymFunc determinant(const std::vector<std::vector<SymFunc>>& matrix);

SymFunc e_perp(int s, const SymFunc& f);
// G_{1^m}^perp = sum_i (-1)^i binom(m-1+i, m-1) e_{m+i}^perp.
SymFunc g_column_perp(int m, const SymFunc& f);
SymFunc one_minus_G1_perp(const SymFunc& f);
// Algebra map h_r -> g_{1^r}.
SymFunc omega(const SymFunc& f);
// Algebra map h_i -> h_0 + h_1 + ... + h_i.
SymFunc F_auto(const SymFunc& f);

// Sparse weight -> coefficient map used by raising/lowering expansions.
using WeightMap = std::unordered_map<Weight, Integer, WeightHash>;

// Multiplies by (1 - R_ij) with 1-based i < j: subtracts the map shifted by e_i - e_j.
void apply_raising(WeightMap& map, int i, int j);
// Multiplies by (1 - L_j)^times: L_j subtracts e_j.
void apply_lowering(WeightMap& map, int j, int times = 1);
SymFunc kappa_sum(const WeightMap& map);

// Coefficients of f in a linearly independent family, by exact rational
// elimination. Returns one coefficient per family member, in family order.
using LabeledSymFunc = std::pair<Partition, SymFunc>;
using Expansion = std::vector<std::pair<Partition, Integer>>;
Expansion expand_in_basis(const SymFunc& f, const std::vector<LabeledSymFunc>& family);

// Factors the family once so that many right-hand sides can be expanded.
class BasisExpander {
 public:
  explicit BasisExpander(std::vector<LabeledSymFunc> family);

  // Throws NotInSpan, NonUnique or NonIntegral.
  Expansion expand(const SymFunc& f) const;
  const std::vector<LabeledSymFunc>& family() const noexcept { return family_; }
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::vector<LabeledSymFunc> family_;
  std::unordered_map<Partition, std::size_t, PartitionHash> row_of_;
  // solve_[c] (for pivot column c) and null_[t] are rows of the left transform.
  std::vector<std::vector<Rational>> solve_;
  std::vector<std::vector<Rational>> null_;
  std::vector<std::size_t> pivot_col_;
  std::size_t rank_ = 0;
};

}  // namespace katalan
