#include <gtest/gtest.h>

#include <set>

#include "katalan/lemmas.hpp"
#include "test_util.hpp"

using namespace katalan;

namespace {

constexpr int kInstances = 500;

// Draws distinct instances until `want` are collected or the budget runs out.
std::vector<LemmaCase> draw(const LemmaFamily& f, int want, std::uint64_t seed) {
  Rng rng(seed);
  std::set<std::string> seen;
  std::vector<LemmaCase> out;
  for (long tries = 0; tries < 4'000'000 && static_cast<int>(out.size()) < want; ++tries) {
    auto c = f.sample(rng);
    if (!c) continue;
    if (seen.insert(dump(c->to_json())).second) out.push_back(*c);
  }
  return out;
}

const LemmaFamily& family_named(const std::string& name) {
  static const std::vector<LemmaFamily> all = [] {
    auto v = identity_families();
    auto m = mirror_families();
    v.insert(v.end(), m.begin(), m.end());
    return v;
  }();
  for (const auto& f : all)
    if (f.name == name) return f;
  throw std::out_of_range(name);
}

void check_family(const LemmaFamily& f) {
  auto cases = draw(f, kInstances, 7);
  ASSERT_EQ(static_cast<int>(cases.size()), kInstances) << f.name;
  int failed = 0;
  for (const auto& c : cases) {
    ASSERT_TRUE(f.hypotheses(c)) << f.name << " " << dump(c.to_json());
    if (!f.holds(c, {})) {
      ++failed;
      ADD_FAILURE() << f.name << " " << dump(c.to_json());
      if (failed > 3) return;
    }
  }
}

}  // namespace

TEST(Lemmas, DifferenceSolver) {
  Rng rng(3);
  auto v = solve_differences(4, {{2, 1, 1}, {3, 2, 1}, {4, 0, 5}}, rng, -3, 3, 0);
  ASSERT_TRUE(v);
  EXPECT_EQ((*v)[1] - (*v)[0], 1);
  EXPECT_EQ((*v)[2] - (*v)[1], 1);
  EXPECT_EQ((*v)[3], 5);
  EXPECT_GE(*std::min_element(v->begin(), v->end()), 0);
  EXPECT_FALSE(solve_differences(3, {{2, 1, 1}, {3, 2, 1}, {3, 1, 0}}, rng, 0, 3, 0));
}

TEST(Lemmas, PinnedExamples) {
  const auto examples = pinned_examples();
  EXPECT_EQ(examples.size(), 7u);
  for (const auto& ex : examples) {
    const LemmaFamily& f = family_named(ex.family);
    EXPECT_TRUE(f.hypotheses(ex.lhs)) << ex.name;
    EXPECT_TRUE(f.holds(ex.lhs, {})) << ex.name;
    SymFunc rhs;
    for (const auto& [sign, index] : ex.rhs) rhs += Integer(sign) * eval(index);
    EXPECT_EQ(eval(KatalanIndex(ex.lhs.psi, ex.lhs.mult, ex.lhs.mu)), rhs) << ex.name;
  }
}

TEST(Lemmas, BrokenHypothesisIsDetected) {
  // Moving mu_z off mu_{z+1} - 1 breaks the base case and its vanishing.
  for (const auto& ex : pinned_examples()) {
    if (ex.name != "base case display, vanishing") continue;
    LemmaCase c = ex.lhs;
    c.mu[1] += 1;
    EXPECT_FALSE(family_named(ex.family).hypotheses(c));
    EXPECT_FALSE(eval(KatalanIndex(c.psi, c.mult, c.mu)).is_zero());
  }
}

class IdentityFamily : public ::testing::TestWithParam<std::string> {};

TEST_P(IdentityFamily, FiveHundredInstances) { check_family(family_named(GetParam())); }

INSTANTIATE_TEST_SUITE_P(All, IdentityFamily,
                         ::testing::Values("root-expansion-addable", "root-expansion-removable",
                                           "lowering-expansion-remove", "lowering-expansion-add",
                                           "straightening", "concatenation", "zero-lemma",
                                           "generalized-pascal", "sliding", "mirror-base-case",
                                           "mirror-lemma", "baby-staircase", "staircase",
                                           "mirror-straightening", "diagonal-removal"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });
