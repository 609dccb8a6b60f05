#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "katalan/rootideal.hpp"
#include "katalan/symfunc.hpp"

namespace katalan {

struct KatalanIndex {
  RootIdeal psi;
  Multiset mult;
  Weight gamma;

  KatalanIndex() = default;
  // Throws MismatchedLength unless all three have the same length.
  KatalanIndex(RootIdeal psi, Multiset mult, Weight gamma);
  // Lowering multiset taken from the columns of a root ideal.
  KatalanIndex(RootIdeal psi, const RootIdeal& lowering, Weight gamma);

  int ell() const noexcept { return psi.ell(); }
  std::string str() const;

  friend bool operator==(const KatalanIndex& a, const KatalanIndex& b) {
    return a.psi == b.psi && a.mult == b.mult && a.gamma == b.gamma;
  }
};

struct EvalOptions {
  // Maximum number of simultaneously live partial weights.
  std::size_t support_cap = 5'000'000;
};

// Fast evaluation. Raising factors are expanded column by column from the
// right; lowering factors are folded in exactly through
// (1 - L_j)^m k_a^{(r)} = k_a^{(r-m)}. Throws LimitExceeded past the cap.
SymFunc eval(const KatalanIndex& idx, const EvalOptions& opts = {});

// Literal expansion on a sparse weight map: every (1 - R_ij), then every
// (1 - L_j), then kappa. A seed shuffles the factor order.
SymFunc eval_weight_map(const KatalanIndex& idx, std::optional<std::uint64_t> seed = std::nullopt,
                        const EvalOptions& opts = {});

// Runs eval_weight_map in two random factor orders and compares both with eval.
bool check_order_independence(const KatalanIndex& idx, std::uint64_t seed,
                              const EvalOptions& opts = {});

// prod_{(i,j) not in psi} (1 - R_ij) h_gamma.
SymFunc catalan_H(const RootIdeal& psi, const Weight& gamma, const EvalOptions& opts = {});

// Sum of catalan_H over lowered weights: K(psi; M; gamma) equals
// prod_j (1 - L_j)^{m(j) - (j-1)} H(psi; gamma). When M contains the full
// lowering multiset this is the alternating sum over sub-multisets of the excess.
SymFunc eval_via_H(const KatalanIndex& idx, const EvalOptions& opts = {});

// Repeatedly strips a trailing zero weight entry, restricting psi and mult.
KatalanIndex normalize(KatalanIndex idx);

// Shared engine: sum over the raising expansion beta of prod_j k_{beta_j}^{(shifts_j)}.
SymFunc raise_and_contract(const RootIdeal& psi, const Weight& gamma,
                           const std::vector<int>& shifts, const EvalOptions& opts = {});

}  // namespace katalan
