#include <gtest/gtest.h>

#include "katalan/conjectures.hpp"
#include "katalan/errors.hpp"
#include "katalan/verify.hpp"

using namespace katalan;

namespace {

VerifyOptions small() {
  VerifyOptions o;
  o.k = 2;
  o.max_deg = 5;
  o.max_ell = 3;
  o.instances = 60;
  return o;
}

}  // namespace

TEST(Verify, EverySuitePassesOnSmallRanges) {
  for (const auto& name : suite_names()) {
    SuiteResult r = run_suite(name, small());
    EXPECT_TRUE(r.ok()) << dump(r.to_json());
    EXPECT_GT(r.checked(), 0u) << name;
  }
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope", {}), ParseError); }

TEST(Verify, ReportIsDeterministic) {
  VerifyOptions a = small(), b = small();
  b.jobs = 3;
  EXPECT_EQ(dump(verify_mirror(a).to_json()), dump(verify_mirror(b).to_json()));
  a.seed = b.seed = 9;
  EXPECT_EQ(dump(verify_identities(a).to_json()), dump(verify_identities(b).to_json()));
}

TEST(Verify, ReportFields) {
  json j = verify_theta({}).to_json();
  for (const char* key : {"suite", "version", "identity", "parameters", "families", "checked",
                          "failed", "ok", "failures"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["checked"], 2);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Sweep, Aliases) {
  EXPECT_EQ(canonical_sweep("a"), "tilde-g");
  EXPECT_EQ(canonical_sweep("c"), "dual-pieri");
  EXPECT_EQ(canonical_sweep("d"), "k-branching");
  EXPECT_EQ(canonical_sweep("e"), "kk-alternating");
  EXPECT_EQ(canonical_sweep("f"), "rectangle");
  EXPECT_EQ(canonical_sweep("kpos"), "kpos");
  EXPECT_THROW(canonical_sweep("b"), ParseError);
}

TEST(Sweep, SmallRangesAreClean) {
  SweepRanges r;
  r.ks = {2};
  r.max_deg = 5;
  r.max_ell = 3;
  for (const auto& name : sweep_names()) {
    SweepReport rep = sweep(name, r, default_cache(), 2);
    EXPECT_TRUE(rep.clean()) << dump(rep.to_json());
  }
}

TEST(Sweep, RectangleWithEmptyMu) {
  // g_{R_d} is itself the closed function at R_d.
  for (int k = 2; k <= 3; ++k)
    for (int d = 1; d <= k; ++d) {
      const Partition rect = Partition::rectangle(d, k + 1 - d);
      EXPECT_EQ(dual_groth_det(rect), g_closed(k, rect));
    }
}

TEST(Sweep, KposAtDeltaIdealIsClosedFunction) {
  // With Psi = Delta^{k-1}(lambda), K(Psi;Psi;lambda) is the closed function at level k-1.
  for (const Partition& lambda : partitions_up_to(5, 2, 3)) {
    Weight w = lambda.as_weight(3);
    RootIdeal psi = delta_k(2, w);
    EXPECT_EQ(eval(KatalanIndex(psi, psi, w)), g_closed(2, lambda));
  }
}
