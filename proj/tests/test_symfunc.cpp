#include <gtest/gtest.h>

#include <random>

#include "katalan/errors.hpp"
#include "katalan/symfunc.hpp"
#include "test_util.hpp"

using namespace katalan;
using katalan::oracle::H;

namespace {

const SymFunc kOne = SymFunc::one();

}  // namespace

TEST(Binomial, Generalized) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(-1, 3), -1);
  EXPECT_EQ(binom(-2, 2), 3);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(4, -1), 0);
}

TEST(SymFunc, MultiplyExamples) {
  EXPECT_EQ(multiply(H({2}), H({1})), H({2, 1}));
  SymFunc f = H({1, 1}) + H({1}) - H({2});
  EXPECT_EQ(multiply(f, kOne), f);
  EXPECT_EQ(multiply(f, H({2})), H({2, 1, 1}) + H({2, 1}) - H({2, 2}));
  EXPECT_TRUE(multiply(f, SymFunc()).is_zero());
}

TEST(SymFunc, DegreeAndTermOrder) {
  EXPECT_EQ(SymFunc().degree(), SymFunc::kMinusInfinity);
  EXPECT_EQ(kOne.degree(), 0);
  SymFunc f = H({1, 1, 1}) + H({3}) + H({2, 1}) + 4 * kOne;
  ASSERT_EQ(f.num_terms(), 4u);
  EXPECT_EQ(f.terms()[0].mono, Partition());
  EXPECT_EQ(f.terms()[1].mono, Partition({3}));
  EXPECT_EQ(f.terms()[2].mono, Partition({2, 1}));
  EXPECT_EQ(f.terms()[3].mono, Partition({1, 1, 1}));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f.top_component(), H({1, 1, 1}) + H({3}) + H({2, 1}));
}

TEST(SymFunc, HOfNegativeDegreeVanishes) {
  EXPECT_TRUE(SymFunc::h(-1).is_zero());
  EXPECT_EQ(SymFunc::h(0), kOne);
}

TEST(SymFunc, MultiplyAssociativeCommutative) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> part(0, 3), coeff(-3, 3), len(0, 3);
  auto random_f = [&] {
    SymFunc f;
    for (int t = 0; t < 3; ++t) {
      std::vector<int> parts(len(rng));
      for (int& p : parts) p = part(rng);
      f += SymFunc::monomial(Partition::from_unsorted(parts), coeff(rng));
    }
    return f;
  };
  for (int trial = 0; trial < 100; ++trial) {
    SymFunc a = random_f(), b = random_f(), c = random_f();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(KHom, Examples) {
  EXPECT_EQ(k_hom(1, 1), H({1}) + kOne);
  EXPECT_EQ(k_hom(2, 2), H({2}) + 2 * H({1}) + 3 * kOne);
  EXPECT_TRUE(k_hom(-3, 5).is_zero());
  EXPECT_EQ(k_hom(4, 0), SymFunc::h(4));
}

TEST(KHom, PascalIdentity) {
  for (int m = -3; m <= 6; ++m)
    for (int r = 0; r <= 5; ++r)
      EXPECT_EQ(k_hom(m - 1, r) + k_hom(m, r - 1), k_hom(m, r)) << m << "," << r;
}

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa({1, 1}), H({1, 1}) + H({1}));
  EXPECT_TRUE(kappa({2, 0, -1, 3}).is_zero());
  EXPECT_EQ(kappa({}), kOne);
}

TEST(Schur, Examples) {
  EXPECT_EQ(schur({2, 1}), H({2, 1}) - H({3}));
  EXPECT_EQ(schur({1, 1}), H({1, 1}) - H({2}));
  EXPECT_EQ(schur({0, 0, 0}), kOne);
}

TEST(Schur, MatchesBialternantAtIntegerPoints) {
  const std::vector<Integer> x = {2, 3, 5, 7, 11};
  for (const Partition& lambda : partitions_up_to(7, -1, 5)) {
    EXPECT_EQ(oracle::evaluate(schur(lambda.as_weight()), x),
              oracle::schur_bialternant(lambda, x))
        << lambda.str();
  }
}

TEST(Elementary, Examples) {
  EXPECT_EQ(elementary(0), kOne);
  EXPECT_EQ(elementary(1), H({1}));
  EXPECT_EQ(elementary(2), H({1, 1}) - H({2}));
  // e_3(1,1,1,1) = 4
  EXPECT_EQ(oracle::evaluate(elementary(3), {1, 1, 1, 1}), 4);
}

TEST(DualGroth, Examples) {
  EXPECT_EQ(dual_groth_det(Weight{1, 1}), H({1, 1}) + H({1}) - H({2}));
  EXPECT_EQ(dual_groth_det(Weight{2, 1}), H({2, 1}) + H({2}) - H({3}));
  EXPECT_EQ(dual_groth_det(Weight{1}), H({1}));
  EXPECT_EQ(dual_groth_raise({2, 1}), kappa({2, 1}) - kappa({3, 0}));
  EXPECT_EQ(dual_groth_raise({1}), H({1}));
  EXPECT_EQ(dual_groth_raise({0, 3}), dual_groth_det(Weight{0, 3}));
}

TEST(DualGroth, DeterminantMatchesRaisingExhaustive) {
  for (int ell = 0; ell <= 3; ++ell)
    for (const Weight& g : oracle::all_weights(ell, -2, 4))
      ASSERT_EQ(dual_groth_det(g), dual_groth_raise(g)) << weight_str(g);
}

TEST(DualGroth, DeterminantMatchesRaisingRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    Weight g = oracle::random_weight(rng, len(rng), -1, 3);
    ASSERT_EQ(dual_groth_det(g), dual_groth_raise(g)) << weight_str(g);
  }
}

TEST(DualGroth, Straightening) {
  auto eps = [](Weight w, int i, int d) {
    w[i - 1] += d;
    return w;
  };
  for (int ell = 2; ell <= 4; ++ell)
    for (const Weight& g : oracle::all_weights(ell, -1, 3))
      for (int i = 1; i < ell; ++i) {
        Weight sg = g;
        std::swap(sg[i - 1], sg[i]);
        SymFunc lhs = dual_groth_det(g) - dual_groth_det(eps(g, i + 1, -1));
        SymFunc rhs = dual_groth_det(eps(sg, i, -1)) - dual_groth_det(eps(eps(sg, i + 1, 1), i, -1));
        ASSERT_EQ(lhs, rhs) << weight_str(g) << " i=" << i;
      }
}

TEST(DualGroth, TopComponentIsSchur) {
  for (const Partition& lambda : partitions_up_to(8))
    EXPECT_EQ(dual_groth_det(lambda).top_component(), schur(lambda.as_weight())) << lambda.str();
}

TEST(DualGroth, VanishesBelowThreshold) {
  // g_gamma = 0 once gamma_i < i - ell for some i.
  for (int ell = 1; ell <= 4; ++ell)
    for (const Weight& g : oracle::all_weights(ell, -4, 2)) {
      bool below = false;
      for (int i = 1; i <= ell; ++i) below = below || g[i - 1] < i - ell;
      if (below) ASSERT_TRUE(dual_groth_det(g).is_zero()) << weight_str(g);
    }
}

TEST(EPerp, Examples) {
  EXPECT_EQ(e_perp(1, H({2})), H({1}));
  SymFunc f = H({3, 1}) - 2 * H({2});
  EXPECT_EQ(e_perp(0, f), f);
  EXPECT_TRUE(e_perp(3, H({2})).is_zero());
  EXPECT_TRUE(e_perp(1, kOne).is_zero());
  // e_2^perp h_1^2 = 1: the only way is to lower both factors.
  EXPECT_EQ(e_perp(2, H({1, 1})), kOne);
}

TEST(EPerp, ProductRecursion) {
  std::vector<SymFunc> samples = {kOne, H({1}), H({2, 1}), H({3, 3, 1}) - H({2}),
                                  dual_groth_det(Weight{2, 2}), H({4, 1, 1})};
  for (const SymFunc& f : samples)
    for (int m = 0; m <= 5; ++m)
      for (int s = 0; s <= 4; ++s) {
        SymFunc lhs = e_perp(s, f * SymFunc::h(m));
        SymFunc rhs = SymFunc::h(m) * e_perp(s, f);
        if (s >= 1) rhs += SymFunc::h(m - 1) * e_perp(s - 1, f);
        ASSERT_EQ(lhs, rhs) << f.str() << " m=" << m << " s=" << s;
      }
}

TEST(EPerp, LowersDegreeOnHomogeneous) {
  for (const Partition& lambda : partitions_of(6)) {
    SymFunc f = e_perp(2, SymFunc::monomial(lambda));
    if (!f.is_zero()) EXPECT_EQ(f.degree(), 4);
    EXPECT_EQ(f.homogeneous_component(4), f);
  }
}

TEST(GColumnPerp, Examples) {
  EXPECT_EQ(g_column_perp(1, H({1})), kOne);
  EXPECT_TRUE(g_column_perp(5, H({2, 1})).is_zero());
  EXPECT_THROW(g_column_perp(0, H({1})), InvalidWeight);
  // G_1^perp h_2 = e_1^perp h_2 - e_2^perp h_2 = h_1 - 0.
  EXPECT_EQ(g_column_perp(1, H({2})), H({1}));
  // G_1^perp h_1^2 = 2 h_1 - 1.
  EXPECT_EQ(g_column_perp(1, H({1, 1})), 2 * H({1}) - kOne);
}

TEST(FAuto, Examples) {
  EXPECT_EQ(F_auto(H({2})), H({2}) + H({1}) + kOne);
  EXPECT_EQ(F_auto(kOne), kOne);
  EXPECT_EQ(F_auto(one_minus_G1_perp(H({3, 1}))), H({3, 1}));
}

TEST(FAuto, InvertsOneMinusG1Perp) {
  for (const Partition& lambda : partitions_up_to(8)) {
    SymFunc f = SymFunc::monomial(lambda);
    ASSERT_EQ(F_auto(one_minus_G1_perp(f)), f) << lambda.str();
  }
}

TEST(FAuto, SendsDualGrothToLowerIdealSum) {
  for (const Partition& nu : partitions_up_to(5)) {
    SymFunc sum;
    for (const Partition& mu : partitions_up_to(nu.size()))
      if (nu.contains(mu)) sum += dual_groth_det(mu);
    EXPECT_EQ(F_auto(dual_groth_det(nu)), sum) << nu.str();
  }
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(H({1})), H({1}));
  EXPECT_EQ(omega(kOne), kOne);
  EXPECT_EQ(omega(omega(H({2, 2}))), H({2, 2}));
  EXPECT_EQ(omega(H({2})), dual_groth_det(Weight{1, 1}));
}

TEST(Omega, Involution) {
  for (const Partition& lambda : partitions_up_to(6))
    ASSERT_EQ(omega(omega(SymFunc::monomial(lambda))), SymFunc::monomial(lambda)) << lambda.str();
}

TEST(Omega, SwapsConjugateDualGroth) {
  for (const Partition& lambda : partitions_up_to(6))
    EXPECT_EQ(omega(dual_groth_det(lambda)), dual_groth_det(lambda.conjugate())) << lambda.str();
}

TEST(ExpandInBasis, Examples) {
  std::vector<LabeledSymFunc> fam = {{Partition({1, 1}), schur({1, 1})}, {Partition({2}), schur({2})}};
  Expansion e = expand_in_basis(H({1, 1}), fam);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].second, 1);
  EXPECT_EQ(e[1].second, 1);
  Expansion z = expand_in_basis(SymFunc(), fam);
  for (const auto& [label, c] : z) EXPECT_EQ(c, 0);
}

TEST(ExpandInBasis, Errors) {
  std::vector<LabeledSymFunc> fam = {{Partition({2}), schur({2})}};
  EXPECT_THROW(expand_in_basis(H({1, 1}), fam), NotInSpan);
  EXPECT_THROW(expand_in_basis(H({3}), fam), NotInSpan);
  std::vector<LabeledSymFunc> dup = {{Partition({2}), H({2})}, {Partition({1, 1}), 2 * H({2})}};
  EXPECT_THROW(expand_in_basis(H({2}), dup), NonUnique);
  std::vector<LabeledSymFunc> twice = {{Partition({2}), 2 * H({2})}};
  EXPECT_THROW(expand_in_basis(H({2}), twice), NonIntegral);
}

TEST(ExpandInBasis, SchurRoundTrip) {
  std::vector<LabeledSymFunc> fam;
  for (const Partition& mu : partitions_up_to(5)) fam.push_back({mu, schur(mu.as_weight())});
  BasisExpander ex(fam);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    SymFunc f;
    std::vector<Integer> want(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      want[i] = c(rng);
      f += fam[i].second * want[i];
    }
    Expansion got = ex.expand(f);
    for (std::size_t i = 0; i < fam.size(); ++i) EXPECT_EQ(got[i].second, want[i]);
  }
}
