#include <gtest/gtest.h>

#include <set>

#include "katalan/errors.hpp"
#include "katalan/rootideal.hpp"

using namespace katalan;

namespace {

// The bounce-path example ideal in Delta^+_10.
RootIdeal downpath_example() { return RootIdeal(10, {9, 6, 5, 4, 3, 1, 1, 1, 0, 0}); }

// Brute-force ideal test on an explicit root set.
bool is_upper_ideal(int ell, const std::set<std::pair<int, int>>& s) {
  for (auto [i, j] : s) {
    if (i > 1 && !s.count({i - 1, j})) return false;
    if (j < ell && !s.count({i, j + 1})) return false;
  }
  return true;
}

std::set<std::pair<int, int>> as_set(const RootIdeal& psi) {
  std::set<std::pair<int, int>> s;
  for (const Root& a : psi.roots()) s.insert({a.i, a.j});
  return s;
}

}  // namespace

TEST(RootIdeal, ValidatesRows) {
  EXPECT_THROW(RootIdeal(3, {1, 2, 0}), InvalidIdeal);
  EXPECT_THROW(RootIdeal(3, {3, 0, 0}), InvalidIdeal);
  EXPECT_THROW(RootIdeal(3, {1, 0}), InvalidIdeal);
  EXPECT_NO_THROW(RootIdeal(3, {2, 1, 0}));
}

TEST(RootIdeal, DeltaK) {
  Weight mu = {4, 2, 2, 1, 1, 0, 0, 1, 1};
  EXPECT_EQ(delta_k(4, 9, mu).rows(), (std::vector<int>{8, 5, 4, 2, 1, 0, 0, 0, 0}));
  EXPECT_EQ(delta_k(5, 9, mu).rows(), (std::vector<int>{7, 4, 3, 1, 0, 0, 0, 0, 0}));
  // mu_1 + ell - 1 <= k gives the empty ideal.
  EXPECT_EQ(delta_k(5, 3, {3, 2, 1}), RootIdeal::empty(3));
  EXPECT_THROW(delta_k(2, 2, {3, 0}), InvalidWeight);
  EXPECT_THROW(delta_k(3, 3, {0, 2, 0}), InvalidWeight);
}

TEST(RootIdeal, MultisetOf) {
  EXPECT_EQ(multiset_of(RootIdeal::empty(4)).mult(), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(multiset_of(RootIdeal::full(5)).mult(), (std::vector<int>{0, 1, 2, 3, 4}));
  // Column counts of the Delta^5 ideal of 422110011.
  Multiset m = multiset_of(delta_k(5, 9, {4, 2, 2, 1, 1, 0, 0, 1, 1}));
  EXPECT_EQ(m.mult(), (std::vector<int>{0, 0, 1, 1, 1, 2, 3, 3, 4}));
}

TEST(RootIdeal, RemovableAddable) {
  RootIdeal full2 = RootIdeal::full(2);
  ASSERT_EQ(full2.removable_roots().size(), 1u);
  EXPECT_EQ(full2.removable_roots()[0], (Root{1, 2}));
  auto add = RootIdeal::empty(3).addable_roots();
  std::set<std::pair<int, int>> got;
  for (const Root& a : add) got.insert({a.i, a.j});
  EXPECT_EQ(got, (std::set<std::pair<int, int>>{{1, 3}}));
  EXPECT_EQ(rc_power(RootIdeal::full(3), 1).roots(), (RootSet{{1, 3}}));
  EXPECT_EQ(rc_power(RootIdeal::full(3), 0), RootIdeal::full(3));
}

TEST(RootIdeal, RemovableAddableBruteForce) {
  for (int ell = 1; ell <= 6; ++ell)
    for (const RootIdeal& psi : enumerate_ideals(ell)) {
      auto s = as_set(psi);
      std::set<std::pair<int, int>> rem, add;
      for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) {
          auto t = s;
          if (s.count({i, j})) {
            t.erase({i, j});
            if (is_upper_ideal(ell, t)) rem.insert({i, j});
          } else {
            t.insert({i, j});
            if (is_upper_ideal(ell, t)) add.insert({i, j});
          }
        }
      std::set<std::pair<int, int>> rem2, add2;
      for (const Root& a : psi.removable_roots()) rem2.insert({a.i, a.j});
      for (const Root& a : psi.addable_roots()) add2.insert({a.i, a.j});
      ASSERT_EQ(rem, rem2) << psi.str();
      ASSERT_EQ(add, add2) << psi.str();
      for (const Root& a : psi.removable_roots()) EXPECT_NO_THROW(psi.without(a));
      for (const Root& a : psi.addable_roots()) EXPECT_NO_THROW(psi.with(a));
      auto rcs = as_set(rc(psi));
      for (auto r : rcs) EXPECT_TRUE(s.count(r));
    }
}

TEST(RootIdeal, EnumerateCountsAreCatalan) {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int ell = 0; ell <= 7; ++ell) {
    auto all = enumerate_ideals(ell);
    EXPECT_EQ(static_cast<int>(all.size()), catalan[ell]);
    std::set<std::vector<int>> distinct;
    for (const auto& psi : all) distinct.insert(psi.rows());
    EXPECT_EQ(distinct.size(), all.size());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(RootIdeal, BouncePaths) {
  RootIdeal psi = downpath_example();
  EXPECT_EQ(psi.bpath(2, 8), (std::vector<int>{2, 5, 8}));
  EXPECT_EQ(psi.uppath(10), (std::vector<int>{1, 2, 5, 8, 10}));
  EXPECT_EQ(psi.top(10), 1);
  EXPECT_THROW(psi.bpath(2, 7), NotSamePath);
  RootIdeal e = RootIdeal::empty(4);
  for (int x = 1; x <= 4; ++x) {
    EXPECT_FALSE(e.down(x));
    EXPECT_FALSE(e.up(x));
  }
  EXPECT_EQ(e.bounce_paths().size(), 4u);
}

TEST(RootIdeal, BouncePathsPartitionIndices) {
  for (int ell = 1; ell <= 6; ++ell)
    for (const RootIdeal& psi : enumerate_ideals(ell)) {
      std::vector<int> seen(ell + 1, 0);
      for (const auto& path : psi.bounce_paths())
        for (int x : path) {
          ++seen[x];
          EXPECT_EQ(psi.top(x), path.front());
        }
      for (int x = 1; x <= ell; ++x) ASSERT_EQ(seen[x], 1) << psi.str();
    }
}

TEST(RootIdeal, Predicates) {
  RootIdeal psi = downpath_example();
  EXPECT_TRUE(psi.has_ceiling(2, 2));
  EXPECT_FALSE(psi.has_ceiling(1, 1));
  EXPECT_TRUE(psi.has_wall(6, 2));
  EXPECT_FALSE(psi.has_wall(5, 1));
  EXPECT_TRUE(psi.has_mirror(2));
  EXPECT_TRUE(psi.has_mirror(3));
  EXPECT_TRUE(psi.has_mirror(4));
  EXPECT_FALSE(psi.has_mirror(1));
  EXPECT_FALSE(psi.has_mirror(5));
  for (int ell = 2; ell <= 5; ++ell)
    for (int r = 1; r < ell; ++r) EXPECT_FALSE(RootIdeal::full(ell).has_mirror(r));
}

TEST(RootIdeal, Maxband) {
  RootIdeal psi(5, {3, 3, 1, 0, 0});
  EXPECT_EQ(psi.nonroot_counts(), (std::vector<int>{1, 0, 1, 1, 0}));
  EXPECT_EQ(maxband(psi, {3, 4, 4, 2, 1}), 5);
  EXPECT_EQ(maxband(RootIdeal::empty(4), {0, 0, 0, 0}), 3);
  EXPECT_EQ(maxband(RootIdeal::full(4), {3, 2, 2, 1}), 3);
}

TEST(RootIdeal, Concat) {
  RootIdeal a(3, {2, 0, 0}), b(4, {2, 1, 1, 0});
  EXPECT_EQ(concat(a, b).rows(), (std::vector<int>{6, 4, 4, 2, 1, 1, 0}));
  EXPECT_EQ(concat(RootIdeal::full(2), RootIdeal::full(3)), RootIdeal::full(5));
}

TEST(RootIdeal, DiagonalsAndStaircases) {
  EXPECT_EQ(diagonal(3, 4, 6), (RootSet{{3, 4}, {4, 5}, {5, 6}}));
  EXPECT_EQ(diagonal(2, 4, 6), (RootSet{{2, 4}, {3, 5}, {4, 6}}));
  EXPECT_EQ(staircase(3, 4, 6, 1), diagonal(3, 4, 6));
  RootSet e = staircase(2, 4, 6, 2);
  EXPECT_EQ(e.size(), 6u);
}

TEST(RootIdeal, SiAction) {
  Multiset m(4, {0, 1, 2, 3});
  EXPECT_EQ(si_action(2, m).mult(), (std::vector<int>{0, 2, 1, 3}));
  for (int a = 1; a <= 4; ++a) EXPECT_EQ(si_action(1, m)(a), m(a == 1 ? 2 : a == 2 ? 1 : a));
  // s_2 fixes the root ideal {(1,2),(1,3),(1,4)} of Delta^+_4.
  RootIdeal psi(4, {3, 0, 0, 0});
  SiImage img = si_action(2, psi);
  ASSERT_TRUE(img.is_ideal);
  EXPECT_EQ(*img.ideal, psi);
  // s_1 sends (1,2) to (2,1), outside Delta^+.
  EXPECT_FALSE(si_action(1, psi).in_positive_roots);
  EXPECT_EQ(si_action(2, Weight{1, 2, 3}), (Weight{1, 3, 2}));
}

TEST(RootIdeal, PrefixDropsLastColumn) {
  RootIdeal psi(4, {3, 1, 1, 0});
  EXPECT_EQ(psi.truncated().rows(), (std::vector<int>{2, 0, 0}));
  EXPECT_EQ(RootIdeal::full(3).prefix(1), RootIdeal::full(1));
}

TEST(RootIdeal, DeltaKWallFreeAndMirrors) {
  // For k-bounded partitions padded to a fixed ell, Delta^k has no wall in
  // rows x, x+1 above its lowest nonempty row, and a mirror in rows x, x+1
  // exactly when lambda_x = lambda_{x+1} < k there.
  for (int k = 1; k <= 4; ++k)
    for (const Partition& lambda : partitions_up_to(8, k)) {
      const int ell = static_cast<int>(lambda.length());
      if (ell == 0) continue;
      RootIdeal psi = delta_k(k, ell, lambda.as_weight(ell));
      int lowest = 0;
      for (int i = 1; i <= ell; ++i)
        if (psi.row_count(i) > 0) lowest = i;
      for (int x = 1; x < lowest; ++x) {
        EXPECT_FALSE(psi.has_wall(x)) << lambda.str();
        bool mirror = lambda[x] == lambda[x + 1] && lambda[x] < k;
        if (x + 1 < lowest) EXPECT_EQ(psi.has_mirror(x), mirror) << lambda.str() << " x=" << x;
      }
    }
}

TEST(RootIdeal, LoweringIdealMultiplicity) {
  for (int k = 1; k <= 4; ++k)
    for (const Partition& lambda : partitions_up_to(8, k)) {
      const int ell = static_cast<int>(lambda.length());
      if (ell == 0) continue;
      Weight w = lambda.as_weight(ell);
      RootIdeal psi = delta_k(k, ell, w);
      Multiset m = multiset_of(delta_k(k + 1, ell, w));
      for (int x = 1; x < ell; ++x) {
        if (psi.up(x))
          EXPECT_EQ(m(x), m(x + 1) - 1) << lambda.str() << " x=" << x;
        else
          EXPECT_EQ(m(x), m(x + 1)) << lambda.str() << " x=" << x;
      }
    }
}

TEST(RootIdeal, ShiftStability) {
  for (int k = 1; k <= 3; ++k)
    for (const Partition& lambda : partitions_up_to(7, k)) {
      const int ell = static_cast<int>(lambda.length());
      Weight w = lambda.as_weight(ell), w1 = w;
      for (int& x : w1) ++x;
      for (int m = k + 1; m <= k + 3; ++m)
        EXPECT_EQ(delta_k(m, ell, w1), delta_k(m - 1, ell, w)) << lambda.str();
    }
}

TEST(RootIdeal, RenderGrid) {
  RootIdeal psi(3, {2, 0, 0});
  std::string g = render_grid(psi, Multiset(3, {0, 0, 1}), {2, 1, 0});
  EXPECT_NE(g.find("#*"), std::string::npos);
  EXPECT_NE(g.find('2'), std::string::npos);
  std::string overflow = render_grid(psi, Multiset(3, {0, 3, 0}), {2, 1, 0});
  EXPECT_NE(overflow.find("lowering multiplicities"), std::string::npos);
}
