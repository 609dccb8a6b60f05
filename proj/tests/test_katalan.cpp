#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "katalan/errors.hpp"
#include "katalan/katalan.hpp"
#include "test_util.hpp"

using namespace katalan;
using katalan::oracle::H;

namespace {

SymFunc h_gamma(const Weight& g) {
  SymFunc out = SymFunc::one();
  for (int x : g) out = out * SymFunc::h(x);
  return out;
}

// Every multiset on [ell] with multiplicities at most cap.
std::vector<Multiset> all_multisets(int ell, int cap) {
  std::vector<Multiset> out;
  for (const Weight& w : oracle::all_weights(ell, 0, cap)) out.emplace_back(ell, w);
  return out;
}

}  // namespace

TEST(Katalan, Specializations) {
  for (int ell = 0; ell <= 4; ++ell) {
    RootIdeal none = RootIdeal::empty(ell), all = RootIdeal::full(ell);
    Multiset zero(ell), full = full_multiset(ell);
    for (const Weight& g : oracle::all_weights(ell, 0, 3)) {
      ASSERT_EQ(eval({none, zero, g}), dual_groth_raise(g)) << weight_str(g);
      ASSERT_EQ(eval({all, zero, g}), kappa(g)) << weight_str(g);
      ASSERT_EQ(eval({none, full, g}), schur(g)) << weight_str(g);
      ASSERT_EQ(eval({all, full, g}), h_gamma(g)) << weight_str(g);
    }
  }
}

TEST(Katalan, LengthMismatchThrows) {
  EXPECT_THROW(KatalanIndex(RootIdeal::empty(2), Multiset(3), Weight{1, 1}), MismatchedLength);
}

TEST(Katalan, MatchesLiteralWeightMap) {
  for (int ell = 1; ell <= 4; ++ell)
    for (const RootIdeal& psi : enumerate_ideals(ell))
      for (const Multiset& m : all_multisets(ell, ell <= 3 ? 2 : 1))
        for (const Weight& g : oracle::all_weights(ell, 0, ell <= 3 ? 3 : 2)) {
          KatalanIndex idx(psi, m, g);
          ASSERT_EQ(eval(idx), eval_weight_map(idx)) << idx.str();
        }
}

TEST(Katalan, FactorOrderDoesNotMatter) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int ell = 2 + trial % 4;
    auto ideals = enumerate_ideals(ell);
    RootIdeal psi = ideals[rng() % ideals.size()];
    Multiset m(ell, oracle::random_weight(rng, ell, 0, 2));
    Weight g = oracle::random_weight(rng, ell, -1, 3);
    ASSERT_TRUE(check_order_independence({psi, m, g}, rng())) << weight_str(g);
  }
}

TEST(Katalan, ConventionsExample) {
  KatalanIndex idx(RootIdeal(5, {3, 3, 1, 0, 0}), Multiset(5, {0, 1, 1, 2, 2}), {3, 4, 4, 2, 1});
  SymFunc v = eval(idx);
  EXPECT_EQ(v, eval_via_H(idx));
  EXPECT_EQ(v, eval_weight_map(idx));
  std::string grid = render_grid(idx.psi, idx.mult, idx.gamma);
  EXPECT_EQ(std::count(grid.begin(), grid.end(), '*'), 6);
}

TEST(Katalan, CatalanH) {
  for (int ell = 0; ell <= 4; ++ell)
    for (const Weight& g : oracle::all_weights(ell, 0, 3)) {
      EXPECT_EQ(catalan_H(RootIdeal::empty(ell), g), schur(g));
      EXPECT_EQ(catalan_H(RootIdeal::full(ell), g), h_gamma(g));
    }
  for (int ell = 1; ell <= 4; ++ell)
    for (const RootIdeal& psi : enumerate_ideals(ell))
      for (const Weight& g : oracle::all_weights(ell, 0, 2))
        ASSERT_EQ(catalan_H(psi, g), eval({psi, full_multiset(ell), g}));
}

TEST(Katalan, KSchurSmall) {
  // Delta^2((2,1)) is empty, so the 2-Schur function is s_21.
  RootIdeal psi = delta_k(2, 2, {2, 1});
  EXPECT_EQ(psi, RootIdeal::full(2));
  EXPECT_EQ(catalan_H(psi, {2, 1}), H({2, 1}));
  EXPECT_EQ(catalan_H(delta_k(3, 2, {2, 1}), {2, 1}), H({2, 1}) - H({3}));
  // s^{(1)}_{11} = h_1^2.
  EXPECT_EQ(catalan_H(delta_k(1, 2, {1, 1}), {1, 1}), H({1, 1}));
}

TEST(Katalan, EvalViaH) {
  for (int ell = 1; ell <= 3; ++ell)
    for (const RootIdeal& psi : enumerate_ideals(ell))
      for (const Multiset& m : all_multisets(ell, 2))
        for (const Weight& g : oracle::all_weights(ell, 0, 2)) {
          KatalanIndex idx(psi, m, g);
          ASSERT_EQ(eval_via_H(idx), eval(idx)) << idx.str();
        }
  KatalanIndex full_m(RootIdeal(3, {1, 0, 0}), full_multiset(3), {2, 1, 1});
  EXPECT_EQ(eval_via_H(full_m), catalan_H(full_m.psi, full_m.gamma));
  KatalanIndex negative(RootIdeal::empty(3), Multiset(3, {0, 1, 1}), {-9, -9, -9});
  EXPECT_TRUE(eval_via_H(negative).is_zero());
}

TEST(Katalan, AlternatingSumOverExcessLowering) {
  // Sum over sub-multisets A of an excess multiset E of (-1)^|A| H(psi; gamma - e_A)
  // equals K(psi; E + full lowering multiset; gamma).
  for (int ell = 1; ell <= 3; ++ell)
    for (const RootIdeal& psi : enumerate_ideals(ell))
      for (const Multiset& extra : all_multisets(ell, 1))
        for (const Weight& g : oracle::all_weights(ell, 0, 2)) {
          SymFunc sum;
          for (int mask = 0; mask < (1 << ell); ++mask) {
            Weight h = g;
            bool ok = true;
            for (int j = 0; j < ell; ++j)
              if (mask >> j & 1) {
                ok = ok && extra(j + 1) > 0;
                --h[j];
              }
            if (!ok) continue;
            SymFunc term = catalan_H(psi, h);
            if (__builtin_popcount(mask) % 2) term = -term;
            sum += term;
          }
          ASSERT_EQ(sum, eval({psi, full_multiset(ell).disjoint_union(extra), g}));
        }
}

TEST(Katalan, Normalize) {
  KatalanIndex idx(RootIdeal::full(3), Multiset(3), {2, 0, 0});
  KatalanIndex n = normalize(idx);
  EXPECT_EQ(n.ell(), 1);
  EXPECT_EQ(n.gamma, (Weight{2}));
  EXPECT_EQ(normalize(n), n);
  for (int ell = 1; ell <= 4; ++ell)
    for (const RootIdeal& psi : enumerate_ideals(ell))
      for (const Multiset& m : all_multisets(ell, 1)) {
        Weight g(ell, 0);
        g[0] = 2;
        if (ell > 1) g[1] = 1;
        KatalanIndex x(psi, m, g);
        ASSERT_EQ(eval(normalize(x)), eval(x)) << x.str();
      }
}

TEST(Katalan, SupportCap) {
  KatalanIndex idx(RootIdeal::empty(5), Multiset(5), {3, 3, 3, 3, 3});
  EvalOptions tiny;
  tiny.support_cap = 4;
  EXPECT_THROW(eval(idx, tiny), LimitExceeded);
  EXPECT_THROW(eval_weight_map(idx, std::nullopt, tiny), LimitExceeded);
}

TEST(Katalan, KBoundedWhenMaxbandSmall) {
  for (int ell = 1; ell <= 4; ++ell)
    for (const RootIdeal& psi : enumerate_ideals(ell))
      for (const Multiset& m : all_multisets(ell, 1))
        for (const Weight& g : oracle::all_weights(ell, 0, 3)) {
          const int band = maxband(psi, g);
          SymFunc f = eval({psi, m, g});
          if (band >= 0) ASSERT_TRUE(f.in_k_bounded_subring(std::max(band, 0))) << weight_str(g);
        }
}

TEST(Katalan, EPerpCommutes) {
  for (int ell = 1; ell <= 3; ++ell)
    for (const RootIdeal& psi : enumerate_ideals(ell))
      for (const Multiset& m : all_multisets(ell, 1))
        for (const Weight& g : oracle::all_weights(ell, 0, 2))
          for (int s = 0; s <= ell; ++s) {
            SymFunc rhs;
            for (int mask = 0; mask < (1 << ell); ++mask) {
              if (__builtin_popcount(mask) != s) continue;
              Weight h = g;
              for (int i = 0; i < ell; ++i)
                if (mask >> i & 1) --h[i];
              rhs += eval({psi, m, h});
            }
            ASSERT_EQ(e_perp(s, eval({psi, m, g})), rhs) << weight_str(g) << " s=" << s;
          }
}
