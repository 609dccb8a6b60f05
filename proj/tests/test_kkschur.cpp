#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "katalan/errors.hpp"
#include "katalan/kkschur.hpp"
#include "test_util.hpp"

using namespace katalan;
using katalan::oracle::H;

namespace {

// Literal-engine evaluation of the defining Katalan index.
SymFunc g_kk_literal(int k, const Partition& lambda) {
  if (lambda.empty()) return SymFunc::one();
  Weight w = lambda.as_weight();
  return eval_weight_map(KatalanIndex(delta_k(k, w), delta_k(k + 1, w), w));
}

// Is mu inside the k-rectangle condition mu_1 + l(mu) - 1 <= k.
bool in_rectangle(int k, const Partition& mu) {
  return mu.empty() || mu.largest() + static_cast<int>(mu.length()) - 1 <= k;
}

}  // namespace

TEST(KKSchur, Examples) {
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(g_kk(k, {1}), H({1}));
  EXPECT_EQ(g_kk(1, {1, 1}), H({1, 1}) + H({1}));
  EXPECT_EQ(g_kk(3, {}), SymFunc::one());
  EXPECT_THROW(g_kk(2, {3}), NotKBounded);
  EXPECT_THROW(g_closed(2, {3, 1}), NotKBounded);
  EXPECT_THROW(kschur(1, {2}), NotKBounded);
}

TEST(KKSchur, FastEngineMatchesLiteral) {
  for (int k = 1; k <= 3; ++k)
    for (const Partition& mu : partitions_up_to(5, k))
      ASSERT_EQ(g_kk(k, mu), g_kk_literal(k, mu)) << k << " " << mu.str();
}

TEST(KKSchur, RectangleCollapse) {
  for (int k = 1; k <= 4; ++k)
    for (const Partition& mu : partitions_up_to(7, k)) {
      if (!in_rectangle(k, mu)) continue;
      ASSERT_EQ(g_kk(k, mu), dual_groth_det(mu)) << k << " " << mu.str();
      ASSERT_EQ(g_closed(k, mu), dual_groth_det(mu)) << k << " " << mu.str();
    }
}

TEST(KKSchur, TopComponentAndBoundedness) {
  for (int k = 1; k <= 3; ++k)
    for (const Partition& mu : partitions_up_to(6, k)) {
      SymFunc g = g_kk(k, mu);
      EXPECT_EQ(g.top_component(), kschur(k, mu)) << k << " " << mu.str();
      EXPECT_TRUE(g.in_k_bounded_subring(k));
      EXPECT_TRUE(g_closed(k, mu).in_k_bounded_subring(k));
    }
}

TEST(KKSchur, KSchurLargeK) {
  for (const Partition& mu : partitions_up_to(5))
    EXPECT_EQ(kschur(std::max(mu.size(), 1), mu), schur(mu.as_weight())) << mu.str();
  EXPECT_EQ(kschur(1, {1, 1}), H({1, 1}));
  EXPECT_EQ(kschur(2, {}), SymFunc::one());
}

TEST(KKSchur, ClosedExample) {
  EXPECT_EQ(g_closed(2, {1}), H({1}));
  // g_{R_2} for k = 2.
  EXPECT_EQ(dual_groth_det(Partition{1, 1}), H({1, 1}) - H({2}) + H({1}));
}

TEST(KKSchur, PieriSmall) {
  for (int r = 0; r <= 2; ++r) {
    PieriTriple t = pieri_triple(2, {1}, r);
    EXPECT_TRUE(t.all_equal()) << r;
  }
  for (int r = 0; r <= 3; ++r) {
    PieriTriple t = pieri_triple(3, {3, 2, 2, 1}, r);
    EXPECT_EQ(t.lhs, t.rhs_hecke) << r;
    EXPECT_EQ(t.lhs, t.rhs_katalan) << r;
  }
  PieriTriple zero = pieri_triple(2, {2, 1}, 0);
  EXPECT_EQ(zero.lhs, g_kk(2, {2, 1}));
  EXPECT_TRUE(zero.all_equal());
  EXPECT_THROW(pieri_triple(2, {1}, 3), InvalidWeight);
}

TEST(KKSchur, PieriRangeK1K2) {
  for (int k = 1; k <= 2; ++k)
    for (const Partition& lambda : partitions_up_to(5, k))
      for (int r = 0; r <= k; ++r)
        ASSERT_TRUE(pieri_triple(k, lambda, r).all_equal()) << k << " " << lambda.str() << " " << r;
}

TEST(KKSchur, Shift) {
  EXPECT_EQ(shift(1, {1}), H({1}));
  EXPECT_EQ(shift(2, {}), SymFunc::one());
  EXPECT_EQ(shift(2, {2, 1}), g_kk(2, {2, 1}));
  for (int k = 1; k <= 2; ++k)
    for (const Partition& lambda : partitions_up_to(5, k)) {
      EXPECT_EQ(shift(k, lambda), g_kk(k, lambda)) << k << " " << lambda.str();
      EXPECT_EQ(shift_closed(k, lambda), g_closed(k, lambda)) << k << " " << lambda.str();
    }
  // A longer padding length is also allowed.
  EXPECT_EQ(shift(2, {1}, 3), g_kk(2, {1}));
}

TEST(KKSchur, Branch) {
  BranchReport empty = branch(2, {});
  ASSERT_EQ(empty.coeffs.size(), 1u);
  EXPECT_EQ(empty.coeff({}), 1);

  BranchReport r = branch(2, {2, 2});
  EXPECT_TRUE(r.reproduces);
  EXPECT_FALSE(r.sign_flaw);
  EXPECT_EQ(r.coeff({2, 2}), 1);
  EXPECT_EQ(r.verdict(), "alternating");

  // Inside both rectangles only the diagonal term survives.
  BranchReport single = branch(3, {2, 1});
  ASSERT_EQ(single.coeffs.size(), 1u);
  EXPECT_EQ(single.coeff({2, 1}), 1);

  json j = to_json(r);
  EXPECT_EQ(j["source"]["k"], 2);
  EXPECT_EQ(j["verdict"], "alternating");
}

TEST(KKSchur, ExpandReport) {
  BranchReport d = expand_report(g_kk(2, {2, 2}), Family::DualGroth, 2, SignRule::Alternating, 4);
  EXPECT_TRUE(d.reproduces);
  EXPECT_FALSE(d.sign_flaw);
  BranchReport ks = expand_report(kschur(3, {2, 1, 1}), Family::KSchur, 3, SignRule::Positive, 4);
  ASSERT_EQ(ks.coeffs.size(), 1u);
  EXPECT_EQ(ks.coeff({2, 1, 1}), 1);
  EXPECT_THROW(expand_report(H({3}), Family::KSchur, 2, SignRule::Positive, 3), NotInSpan);
  // A forced sign failure is reported, not thrown.
  BranchReport neg = expand_report(-H({1}), Family::DualGroth, 1, SignRule::Positive, 1);
  ASSERT_TRUE(neg.sign_flaw.has_value());
  EXPECT_EQ(neg.verdict(), "sign-flaw");
}

TEST(KKSchur, Unitriangular) {
  for (int k = 2; k <= 3; ++k)
    for (const Partition& lambda : partitions_up_to(5, k)) {
      BranchReport a = expand_report(g_kk(k, lambda), Family::KSchur, k, SignRule::None, lambda.size());
      BranchReport b = expand_report(g_closed(k, lambda), Family::KK, k, SignRule::None, lambda.size());
      for (const BranchReport* rep : {&a, &b}) {
        EXPECT_EQ(rep->coeff(lambda), 1);
        for (const auto& [mu, c] : rep->coeffs)
          if (mu != lambda) EXPECT_LT(mu.size(), lambda.size()) << lambda.str();
      }
    }
}

TEST(KKSchur, OmegaEquivariance) {
  for (int k = 1; k <= 3; ++k)
    for (const Partition& mu : partitions_up_to(5, k)) {
      Partition conj = k_conjugate(k, mu);
      EXPECT_EQ(omega(g_kk(k, mu)), g_kk(k, conj)) << k << " " << mu.str();
      EXPECT_EQ(omega(g_closed(k, mu)), g_closed(k, conj)) << k << " " << mu.str();
    }
}

TEST(KKSchur, TildeG) {
  EXPECT_EQ(tilde_g_w(2, {2, 1, 3}), H({1}));
  EXPECT_EQ(tilde_g_w(3, {1, 2, 3, 4}), SymFunc::one());
  for (int k = 1; k <= 3; ++k)
    for (const FinitePerm& w : all_finite_perms(k + 1)) {
      if (finite_descents(w).size() != 1) continue;
      Partition lam = theta(k, w).conjugate();
      EXPECT_EQ(tilde_g_w(k, w), dual_groth_det(lam)) << k;
      EXPECT_EQ(g_kk(k, lam), dual_groth_det(lam));
      EXPECT_EQ(g_closed(k, lam), dual_groth_det(lam));
    }
}

TEST(KKSchur, LongestWord) {
  EXPECT_EQ(longest_word_product(2), H({1}));
  EXPECT_EQ(longest_word_product(3), multiply(dual_groth_det(Partition{2}), dual_groth_det(Partition{1, 1})));
  for (int k = 2; k <= 3; ++k) {
    FinitePerm w0;
    for (int i = k + 1; i >= 1; --i) w0.push_back(i);
    EXPECT_EQ(g_closed(k, k_conjugate(k, theta(k, w0))), longest_word_product(k)) << k;
  }
}

TEST(FamilyCache, DiskRoundTripAndDigest) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "katalan_cache_test";
  fs::remove_all(dir);
  {
    FamilyCache c(dir);
    EXPECT_EQ(c.get(Family::KK, 2, {2, 1}), g_kk(2, {2, 1}));
    EXPECT_EQ(c.disk_hits(), 0u);
  }
  FamilyCache again(dir);
  EXPECT_EQ(again.get(Family::KK, 2, {2, 1}), g_kk(2, {2, 1}));
  EXPECT_EQ(again.disk_hits(), 1u);
  EXPECT_TRUE(again.audit(1.0, 7).empty());

  // A tampered value with a stale digest is ignored and recomputed.
  fs::path file = dir / "kk-k2" / "p_2_1.json";
  ASSERT_TRUE(fs::exists(file));
  json j;
  {
    std::ifstream in(file);
    j = json::parse(in);
  }
  j["value"] = to_json(H({5}));
  {
    std::ofstream out(file);
    out << j.dump();
  }
  FamilyCache third(dir);
  EXPECT_EQ(third.get(Family::KK, 2, {2, 1}), g_kk(2, {2, 1}));
  EXPECT_EQ(third.disk_hits(), 0u);

  // A tampered value with a matching digest is caught by the audit.
  j["digest"] = fnv1a_hex(dump(j["value"]));
  {
    std::ofstream out(file);
    out << j.dump();
  }
  FamilyCache fourth(dir);
  EXPECT_EQ(fourth.get(Family::KK, 2, {2, 1}), H({5}));
  EXPECT_EQ(fourth.audit(0.01, 1).size(), 1u);
  fs::remove_all(dir);
}
