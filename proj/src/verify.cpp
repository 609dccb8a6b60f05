#include "katalan/verify.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "katalan/affine.hpp"
#include "katalan/errors.hpp"
#include "katalan/lemmas.hpp"
#include "katalan/parallel.hpp"
#include "katalan/version.hpp"

namespace katalan {

std::size_t SuiteResult::checked() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.checked;
  return n;
}

std::size_t SuiteResult::failed() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.failed;
  return n;
}

json SuiteResult::to_json() const {
  json fams = json::array();
  for (const auto& f : families)
    fams.push_back({{"name", f.name}, {"checked", f.checked}, {"failed", f.failed}});
  return {{"suite", suite},       {"version", kVersion},  {"identity", identity},
          {"parameters", parameters}, {"families", fams}, {"checked", checked()},
          {"failed", failed()},   {"ok", ok()},           {"failures", failures}};
}

namespace {

constexpr std::size_t kMaxFailures = 20;

FamilyCache& cache_of(const VerifyOptions& o) { return o.cache ? *o.cache : default_cache(); }

std::vector<int> k_range(const VerifyOptions& o, int lo, int hi) {
  if (o.k) return {*o.k};
  std::vector<int> ks;
  for (int k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

// Thread-safe tally of checks by family. Failures are kept sorted by their
// serialization so the report does not depend on scheduling.
class Recorder {
 public:
  Recorder(SuiteResult& r, const std::vector<std::string>& families) : r_(r) {
    for (const auto& f : families) index(f);
  }

  // Runs a check; katalan errors other than LimitExceeded count as failures.
  void check(const std::string& family, const std::function<json()>& instance,
             const std::function<bool()>& body) {
    std::string err;
    bool ok = false;
    try {
      ok = body();
    } catch (const LimitExceeded&) {
      throw;
    } catch (const error& e) {
      err = e.what();
    }
    record(family, ok, instance, err);
  }

  void record(const std::string& family, bool ok, const std::function<json()>& instance,
              const std::string& err = {}) {
    json inst = ok ? json() : instance();
    std::lock_guard lock(mu_);
    FamilyTally& t = r_.families[index(family)];
    ++t.checked;
    if (ok) return;
    ++t.failed;
    json f = {{"family", family}, {"instance", inst}};
    if (!err.empty()) f["error"] = err;
    failures_.insert(dump(f));
  }

  // A family that could not be populated to the requested size.
  void shortfall(const std::string& family, std::size_t got, std::size_t want) {
    std::lock_guard lock(mu_);
    FamilyTally& t = r_.families[index(family)];
    ++t.failed;
    failures_.insert(dump(json{{"family", family}, {"shortfall", {{"generated", got}, {"wanted", want}}}}));
  }

  void finish() {
    for (const auto& s : failures_) {
      if (r_.failures.size() >= kMaxFailures) break;
      r_.failures.push_back(json::parse(s));
    }
  }

 private:
  std::size_t index(const std::string& family) {
    for (std::size_t i = 0; i < r_.families.size(); ++i)
      if (r_.families[i].name == family) return i;
    r_.families.push_back({family, 0, 0});
    return r_.families.size() - 1;
  }

  SuiteResult& r_;
  std::mutex mu_;
  std::set<std::string> failures_;
};

json kl(int k, const Partition& lambda) { return {{"k", k}, {"lambda", to_json(lambda)}}; }

json index_json(const RootIdeal& psi, const Multiset& m, const Weight& g) {
  return to_json(KatalanIndex(psi, m, g));
}

SymFunc h_product(const Weight& g) {
  SymFunc out = SymFunc::one();
  for (int x : g) out = out * SymFunc::h(x);
  return out;
}

// Every vector in [lo, hi]^ell.
std::vector<Weight> box(int ell, int lo, int hi) {
  std::vector<Weight> out;
  Weight w(ell, lo);
  for (;;) {
    out.push_back(w);
    int i = ell - 1;
    while (i >= 0 && w[i] == hi) w[i--] = lo;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

// Pairs (k, lambda) over k in ks and k-bounded lambda with |lambda| <= max_deg.
std::vector<std::pair<int, Partition>> bounded_pairs(const std::vector<int>& ks, int max_deg) {
  std::vector<std::pair<int, Partition>> out;
  for (int k : ks)
    for (const Partition& p : partitions_up_to(max_deg, k)) out.emplace_back(k, p);
  return out;
}

Integer binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  Integer out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// ---- lemma families ----

SuiteResult run_lemma_suite(const std::string& suite, const std::string& identity,
                            const std::vector<LemmaFamily>& families,
                            const std::vector<PinnedExample>& pinned, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = suite;
  r.identity = identity;
  r.parameters = {{"instances", opts.instances}, {"seed", opts.seed}};
  std::vector<std::string> names;
  for (const auto& f : families) names.push_back(f.name);
  names.push_back("pinned-examples");
  Recorder rec(r, names);
  const EvalOptions eo = cache_of(opts).options();

  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    const LemmaFamily& f = families[fi];
    Rng rng(opts.seed * 1'000'003ULL + fi);
    std::set<std::string> seen;
    std::vector<LemmaCase> cases;
    // Give up after a long run of draws without a new distinct instance.
    constexpr long kStall = 200'000;
    for (long stall = 0; stall < kStall && static_cast<int>(cases.size()) < opts.instances;) {
      auto c = f.sample(rng);
      if (c && seen.insert(dump(c->to_json())).second) {
        cases.push_back(std::move(*c));
        stall = 0;
      } else {
        ++stall;
      }
    }
    if (static_cast<int>(cases.size()) < opts.instances)
      rec.shortfall(f.name, cases.size(), opts.instances);
    parallel_for(cases.size(), opts.jobs, [&](std::size_t i) {
      const LemmaCase& c = cases[i];
      rec.check(f.name, [&] { return c.to_json(); },
                [&] { return f.hypotheses(c) && f.holds(c, eo); });
    });
  }

  for (const auto& ex : pinned) {
    auto fam = std::find_if(families.begin(), families.end(),
                            [&](const LemmaFamily& f) { return f.name == ex.family; });
    if (fam == families.end()) continue;
    rec.check("pinned-examples", [&] { return json{{"name", ex.name}, {"lhs", ex.lhs.to_json()}}; },
              [&] {
                SymFunc rhs;
                for (const auto& [sign, idx] : ex.rhs) rhs += Integer(sign) * eval(idx, eo);
                return fam->hypotheses(ex.lhs) && fam->holds(ex.lhs, eo) &&
                       eval(KatalanIndex(ex.lhs.psi, ex.lhs.mult, ex.lhs.mu), eo) == rhs;
              });
  }
  rec.finish();
  return r;
}

// The case of the Pieri straightening split: 1, 2 or 3.
int straightening_case(const RootIdeal& psi, int j) {
  const int lo = psi.top(j - 1), hi = psi.top(j);
  if (lo > hi) return 1;
  if (hi > lo + 1) return 2;
  if (hi == lo + 1) return 3;
  return 0;
}

// K(Delta^k(mu); L(Delta^{k+1}(mu)) + S; mu) for mu = lambda + e_S of length max(S).
KatalanIndex pieri_index(int k, const Weight& mu, const std::vector<int>& s) {
  const int ell = static_cast<int>(mu.size());
  return KatalanIndex(delta_k(k, mu), multiset_of(delta_k(k + 1, mu)).disjoint_union(
                                          Multiset::of_elements(ell, s)),
                      mu);
}

Weight lambda_plus(const Partition& lambda, const std::vector<int>& s, int ell) {
  Weight mu = lambda.as_weight(ell);
  for (int a : s) mu[a - 1] += 1;
  return mu;
}

// Nonempty S with min(S) = j and max(S) - min(S) <= k - 1.
std::vector<std::vector<int>> window_sets(int k, int j) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << std::max(k - 1, 0)); ++mask) {
    std::vector<int> s{j};
    for (int b = 0; b < k - 1; ++b)
      if (mask >> b & 1) s.push_back(j + 1 + b);
    out.push_back(s);
  }
  return out;
}

}  // namespace

SuiteResult verify_specializations(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "specializations";
  r.identity =
      "K(empty;empty;g) = g_g, K(full;empty;g) = k_g, K(empty;full;g) = s_g, K(full;full;g) = h_g";
  const int max_ell = opts.max_ell.value_or(4);
  r.parameters = {{"max_ell", max_ell}, {"entries", {0, 3}}};
  Recorder rec(r, {"dual-groth", "inhomogeneous-h", "schur", "h"});
  std::vector<Weight> ws;
  for (int ell = 1; ell <= max_ell; ++ell)
    for (auto& w : box(ell, 0, 3)) ws.push_back(w);
  parallel_for(ws.size(), opts.jobs, [&](std::size_t i) {
    const Weight& g = ws[i];
    const int ell = static_cast<int>(g.size());
    const RootIdeal none(ell, std::vector<int>(ell, 0));
    const RootIdeal full = RootIdeal::full(ell);
    const Multiset lnone(ell), lfull = multiset_of(full);
    auto inst = [&](const RootIdeal& p, const Multiset& m) { return index_json(p, m, g); };
    auto both = [&](const RootIdeal& p, const Multiset& m, const SymFunc& want) {
      KatalanIndex idx(p, m, g);
      return eval(idx) == want && (ell > 3 || eval_weight_map(idx) == want);
    };
    rec.check("dual-groth", [&] { return inst(none, lnone); },
              [&] { return both(none, lnone, dual_groth_det(g)); });
    rec.check("inhomogeneous-h", [&] { return inst(full, lnone); },
              [&] { return both(full, lnone, kappa(g)); });
    rec.check("schur", [&] { return inst(none, lfull); },
              [&] { return both(none, lfull, schur(g)); });
    rec.check("h", [&] { return inst(full, lfull); }, [&] { return both(full, lfull, h_product(g)); });
  });
  rec.finish();
  return r;
}

SuiteResult verify_determinant(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "determinant";
  r.identity = "det(k^{(i-1)}_{g_i+j-i}) = prod_{i<j}(1 - R_ij) k_g";
  const int max_ell = opts.max_ell.value_or(4);
  const int random_cases = 200;
  r.parameters = {{"max_ell", max_ell}, {"entries", {-2, 4}}, {"random", random_cases},
                  {"random_max_ell", 6}, {"seed", opts.seed}};
  Recorder rec(r, {"exhaustive", "random"});
  std::vector<std::pair<std::string, Weight>> ws;
  for (int ell = 1; ell <= max_ell; ++ell)
    for (auto& w : box(ell, -2, 4)) ws.emplace_back("exhaustive", w);
  Rng rng(opts.seed);
  for (int t = 0; t < random_cases; ++t) {
    const int ell = std::uniform_int_distribution<int>(1, 6)(rng);
    Weight w(ell);
    for (int& x : w) x = std::uniform_int_distribution<int>(-2, 4)(rng);
    ws.emplace_back("random", w);
  }
  parallel_for(ws.size(), opts.jobs, [&](std::size_t i) {
    const auto& [fam, g] = ws[i];
    rec.check(fam, [&] { return json{{"gamma", g}}; },
              [&] { return dual_groth_det(g) == dual_groth_raise(g); });
  });
  rec.finish();
  return r;
}

SuiteResult verify_identities(const VerifyOptions& opts) {
  auto pinned = pinned_examples();
  return run_lemma_suite("identities",
                         "root expansions, straightening, concatenation, zero lemma, "
                         "generalized Pascal, sliding",
                         identity_families(), pinned, opts);
}

SuiteResult verify_mirror(const VerifyOptions& opts) {
  return run_lemma_suite("mirror",
                         "mirror base case, mirror lemma, staircase, baby staircase, mirror "
                         "straightening, diagonal removal",
                         mirror_families(), pinned_examples(), opts);
}

SuiteResult verify_pieri(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "pieri";
  r.identity =
      "g_{1^r} g_lambda = sum over cyclically increasing u of 0-Hecke terms = sum over "
      "r-subsets of Z/(k+1) of Katalan functions";
  const auto ks = k_range(opts, 1, 3);
  const int max_deg = opts.max_deg.value_or(8);
  r.parameters = {{"k", ks}, {"max_deg", max_deg}};
  Recorder rec(r, {"three-way"});
  FamilyCache& cache = cache_of(opts);
  std::vector<std::tuple<int, Partition, int>> items;
  for (auto& [k, lambda] : bounded_pairs(ks, max_deg))
    for (int rr = 0; rr <= k; ++rr) items.emplace_back(k, lambda, rr);
  parallel_for(items.size(), opts.jobs, [&](std::size_t i) {
    const auto& [k, lambda, rr] = items[i];
    rec.check("three-way",
              [&] {
                json j = kl(k, lambda);
                j["r"] = rr;
                return j;
              },
              [&] { return pieri_triple(k, lambda, rr, cache).all_equal(); });
  });
  rec.finish();
  return r;
}

SuiteResult verify_pieri_straightening(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "pieri-straightening";
  r.identity =
      "K(Psi; M + S; mu) for mu = lambda + e_S splits into three cases by the tops of j-1 and j";
  const auto ks = k_range(opts, 1, 3);
  const int max_deg = opts.max_deg.value_or(8);
  r.parameters = {{"k", ks}, {"max_deg", max_deg}};
  Recorder rec(r, {"case-1", "case-2", "case-3", "figure"});
  const EvalOptions eo = cache_of(opts).options();

  struct Item {
    int k;
    Partition lambda;
    std::vector<int> s;
  };
  std::vector<Item> items;
  for (auto& [k, lambda] : bounded_pairs(ks, max_deg)) {
    const int m = static_cast<int>(lambda.length());
    for (int j = m + 2; j <= m + 2 + k; ++j)
      for (auto& s : window_sets(k, j)) items.push_back({k, lambda, s});
  }
  auto check_item = [&](const Item& it, std::optional<int> expect_case) {
    const int ell = it.s.back();
    const Weight mu = lambda_plus(it.lambda, it.s, ell);
    const RootIdeal psi = delta_k(it.k, mu);
    const int j = it.s.front();
    const int which = straightening_case(psi, j);
    const std::string fam = expect_case ? "figure" : "case-" + std::to_string(which);
    rec.check(fam,
              [&] {
                json js = kl(it.k, it.lambda);
                js["S"] = it.s;
                js["case"] = which;
                return js;
              },
              [&] {
                if (which == 0 || (expect_case && which != *expect_case)) return false;
                const SymFunc lhs = eval(pieri_index(it.k, mu, it.s), eo);
                std::vector<int> rest(it.s.begin() + 1, it.s.end());
                const Multiset m0 = multiset_of(delta_k(it.k + 1, mu));
                switch (which) {
                  case 1: {
                    const int a = *psi.up(psi.top(j - 1) + 1);
                    Weight nu = mu;
                    nu[a - 1] += 1;
                    nu[j - 1] -= 1;
                    return lhs == eval(pieri_index(it.k, nu, rest), eo);
                  }
                  case 2: {
                    Weight low = mu;
                    low[j - 1] -= 1;
                    KatalanIndex idx(psi, m0.disjoint_union(Multiset::of_elements(ell, rest)), low);
                    return lhs == -eval(idx, eo);
                  }
                  default:
                    return lhs.is_zero();
                }
              });
  };
  parallel_for(items.size(), opts.jobs, [&](std::size_t i) { check_item(items[i], std::nullopt); });
  check_item({3, Partition{3, 2, 2, 2}, {6}}, 1);
  check_item({3, Partition{3, 3, 2, 2}, {6}}, 2);
  check_item({3, Partition{3, 1, 1, 1}, {7}}, 3);
  rec.finish();
  return r;
}

SuiteResult verify_shift(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "shift";
  r.identity = "G_{1^l}^perp g^{(k+1)}_{lambda+1^l} = g^{(k)}_lambda, and the closed analogue";
  const auto ks = k_range(opts, 1, 3);
  const int max_deg = opts.max_deg.value_or(8);
  r.parameters = {{"k", ks}, {"max_deg", max_deg}, {"ell", "l(lambda), l(lambda)+1"}};
  Recorder rec(r, {"kk", "closed"});
  FamilyCache& cache = cache_of(opts);
  std::vector<std::tuple<int, Partition, int>> items;
  for (auto& [k, lambda] : bounded_pairs(ks, max_deg))
    for (int e = 0; e <= 1; ++e) items.emplace_back(k, lambda, static_cast<int>(lambda.length()) + e);
  parallel_for(items.size(), opts.jobs, [&](std::size_t i) {
    const auto& [k, lambda, ell] = items[i];
    auto inst = [&] {
      json j = kl(k, lambda);
      j["ell"] = ell;
      return j;
    };
    rec.check("kk", inst, [&] { return shift(k, lambda, ell, cache) == cache.get(Family::KK, k, lambda); });
    rec.check("closed", inst, [&] {
      return shift_closed(k, lambda, ell, cache) == cache.get(Family::Closed, k, lambda);
    });
  });
  rec.finish();
  return r;
}

SuiteResult verify_branch(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "branch";
  r.identity = "g^{(k)}_lambda = sum a_{lambda mu} g^{(k+1)}_mu with (-1)^{|lambda|-|mu|} a >= 0, a_{lambda lambda} = 1";
  const auto ks = k_range(opts, 1, 3);
  const int max_deg = opts.max_deg.value_or(8);
  r.parameters = {{"k", ks}, {"max_deg", max_deg}};
  Recorder rec(r, {"alternating", "diagonal"});
  FamilyCache& cache = cache_of(opts);
  const auto items = bounded_pairs(ks, max_deg);
  parallel_for(items.size(), opts.jobs, [&](std::size_t i) {
    const auto& [k, lambda] = items[i];
    BranchReport b;
    bool computed = false;
    rec.check("alternating", [&] { return computed ? to_json(b) : kl(k, lambda); }, [&] {
      b = branch(k, lambda, cache);
      computed = true;
      return b.reproduces && !b.sign_flaw;
    });
    rec.check("diagonal", [&] { return computed ? to_json(b) : kl(k, lambda); },
              [&] { return computed && b.coeff(lambda) == 1; });
  });
  rec.finish();
  return r;
}

SuiteResult verify_rectangle(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "rectangle";
  r.identity = "g^{(k)}_mu = g_mu when mu_1 + l(mu) - 1 <= k";
  const auto ks = k_range(opts, 1, 5);
  const int max_deg = opts.max_deg.value_or(10);
  r.parameters = {{"k", ks}, {"max_deg", max_deg}};
  Recorder rec(r, {"collapse"});
  FamilyCache& cache = cache_of(opts);
  std::vector<std::pair<int, Partition>> items;
  for (auto& [k, mu] : bounded_pairs(ks, max_deg))
    if (mu.empty() || mu.largest() + static_cast<int>(mu.length()) - 1 <= k) items.emplace_back(k, mu);
  parallel_for(items.size(), opts.jobs, [&](std::size_t i) {
    const auto& [k, mu] = items[i];
    rec.check("collapse", [&] { return kl(k, mu); },
              [&] { return cache.get(Family::KK, k, mu) == dual_groth_det(mu); });
  });
  rec.finish();
  return r;
}

SuiteResult verify_longest_word(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "longest-word";
  r.identity = "prod_{i=1}^{k-1} g_{(k-i)^i} = closed g^{(k)} at theta(w_0) and at its k-conjugate";
  const auto ks = k_range(opts, 2, 4);
  r.parameters = {{"k", ks}};
  Recorder rec(r, {"theta", "k-conjugate", "fixture"});
  FamilyCache& cache = cache_of(opts);
  for (int k : ks) {
    FinitePerm w0(k + 1);
    for (int i = 0; i <= k; ++i) w0[i] = k + 1 - i;
    const Partition t = theta(k, w0);
    const SymFunc prod = longest_word_product(k);
    rec.check("theta", [&] { return kl(k, t); }, [&] {
      Partition expect;
      for (int i = 1; i < k; ++i) expect = expect.union_with(Partition::rectangle(i, k - i));
      return t == expect && cache.get(Family::Closed, k, t) == prod;
    });
    const Partition tc = k_conjugate(k, t);
    rec.check("k-conjugate", [&] { return kl(k, tc); },
              [&] { return cache.get(Family::Closed, k, tc) == prod; });
  }
  // g_{R_2} at k = 2.
  rec.check("fixture", [] { return json{{"k", 2}, {"lambda", {1, 1}}}; }, [] {
    const SymFunc h1 = SymFunc::h(1);
    return dual_groth_det(Partition{1, 1}) == h1 * h1 - SymFunc::h(2) + h1;
  });
  rec.finish();
  return r;
}

SuiteResult verify_theta(const VerifyOptions&) {
  SuiteResult r;
  r.suite = "theta";
  r.identity = "theta, zeta and k-conjugation on the worked examples";
  Recorder rec(r, {"fixtures"});
  rec.check("fixtures", [] { return json{{"k", 4}, {"w", {1, 3, 2, 5, 4}}}; }, [] {
    const FinitePerm v{1, 3, 2, 5, 4};
    const Partition t = theta(4, v);
    return zeta(4, v).conjugate() == Partition{10, 5, 3} && t == Partition{3, 2, 2, 1} &&
           k_conjugate(4, t) == Partition{3, 2, 1, 1, 1};
  });
  rec.check("fixtures", [] { return json{{"k", 2}, {"w", {2, 1, 3}}}; },
            [] { return theta(2, FinitePerm{2, 1, 3}) == Partition{1}; });
  rec.finish();
  return r;
}

SuiteResult verify_dictionary(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "dictionary";
  r.identity =
      "row residues are constant on bounce paths of Delta^k(lambda), which number at most k+1; "
      "the tops of j-1 and j detect addable and removable (-j+1)-corners; s_i w_lambda is "
      "Grassmannian exactly at such corners; Katalan functions with extra lowering at S are "
      "0-Hecke images";
  const auto ks = k_range(opts, 1, 3);
  const int max_deg = opts.max_deg.value_or(8);
  r.parameters = {{"k", ks}, {"max_deg", max_deg}};
  Recorder rec(r, {"residue-up", "bounce-paths", "corners", "addweak", "hecke-operators", "fixture"});
  FamilyCache& cache = cache_of(opts);
  const EvalOptions eo = cache.options();

  // Corner conditions for lambda at j, with the root ideal built on lambda + e_S.
  auto corners_ok = [](int k, const Partition& lambda, int j, const std::vector<int>& s) {
    const int ell = std::max(j, s.empty() ? 0 : s.back());
    const RootIdeal psi = delta_k(k, lambda_plus(lambda, s, ell));
    const Core core = core_of(k, lambda);
    const int i = mod(1 - j, k + 1);
    const auto add = core.addable_rows(i);
    const auto rem = core.removable_rows(i);
    const int y = psi.top(j - 1), tj = psi.top(j);
    const bool a = y > tj, b = tj > y + 1, c = tj == y + 1;
    if (a != !add.empty() || b != !rem.empty() || c != (add.empty() && rem.empty())) return false;
    if (a) {
      auto row = psi.up(y + 1);
      return row && *row == *std::max_element(add.begin(), add.end());
    }
    return true;
  };

  const auto items = bounded_pairs(ks, max_deg);
  parallel_for(items.size(), opts.jobs, [&](std::size_t n) {
    const auto& [k, lambda] = items[n];
    const int ell = static_cast<int>(lambda.length());
    const Core core = core_of(k, lambda);
    const RootIdeal psi = delta_k(k, lambda.as_weight());
    rec.check("residue-up", [&] { return kl(k, lambda); }, [&] {
      for (int x = 1; x <= ell; ++x)
        if (auto u = psi.up(x); u && core.row_residue(*u) != core.row_residue(x)) return false;
      return true;
    });
    rec.check("bounce-paths", [&] { return kl(k, lambda); }, [&] {
      std::set<int> tops;
      for (int a = 1; a <= ell; ++a) {
        tops.insert(psi.top(a));
        for (int b = 1; b <= ell; ++b)
          if (psi.same_path(a, b) != (core.row_residue(a) == core.row_residue(b))) return false;
      }
      return static_cast<int>(tops.size()) <= k + 1;
    });
    for (int j = ell + 2; j <= ell + k + 2; ++j) {
      rec.check("corners", [&] { json js = kl(k, lambda); js["j"] = j; return js; },
                [&] {
                  if (!corners_ok(k, lambda, j, {})) return false;
                  for (int start : {j, j + 1})
                    for (auto& s : window_sets(k, start))
                      if (!corners_ok(k, lambda, j, s)) return false;
                  return true;
                });
    }
    rec.check("addweak", [&] { return kl(k, lambda); }, [&] {
      const AffinePerm w = perm_of_partition(k, lambda);
      for (int i = 0; i <= k; ++i) {
        const AffinePerm v = w.simple_times(i);
        const auto add = core.addable_rows(i);
        const auto rem = core.removable_rows(i);
        if (v.is_grassmannian() != (!add.empty() || !rem.empty())) return false;
        if (!add.empty()) {
          const int a = *std::max_element(add.begin(), add.end());
          Weight up = lambda.as_weight(std::max<int>(a, ell));
          up[a - 1] += 1;
          if (!is_partition_weight(up) || perm_of_partition(k, partition_of_weight(up)) != v) return false;
        }
        if (!rem.empty()) {
          const int a = *std::max_element(rem.begin(), rem.end());
          Weight down = lambda.as_weight(std::max<int>(a, ell));
          down[a - 1] -= 1;
          if (!is_partition_weight(down) || perm_of_partition(k, partition_of_weight(down)) != v)
            return false;
        }
      }
      return true;
    });
    {
      for (int j = ell + 2; j <= ell + k + 2; ++j)
        for (const auto& s : window_sets(k, j)) {
          rec.check("hecke-operators",
                    [&] { json js = kl(k, lambda); js["S"] = s; return js; }, [&] {
                      SignedHecke x = SignedHecke::basis(perm_of_partition(k, lambda));
                      for (int a : s) x = hecke_act_grassmannian(mod(1 - a, k + 1), x);
                      SymFunc want;
                      if (!x.is_zero())
                        want = Integer(x.sign) * cache.get(Family::KK, k, partition_of_perm(x.perm));
                      return eval(pieri_index(k, lambda_plus(lambda, s, s.back()), s), eo) == want;
                    });
        }
    }
  });

  // k = 5, lambda = 532222111100000, j = 13, 14, 15.
  const Partition big{5, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  const std::map<int, int> want_case{{13, 3}, {14, 1}, {15, 2}};
  for (const auto& [j, which] : want_case) {
    rec.check("fixture", [&, j = j] { json js = kl(5, big); js["j"] = j; return js; },
              [&, j = j, which = which] {
                const RootIdeal psi = delta_k(5, big.as_weight(15));
                const Core core = core_of(5, big);
                if (core.shape() != Partition{11, 6, 3, 3, 3, 3, 1, 1, 1, 1}) return false;
                if (core.row_residue(1) != 4) return false;
                for (int a : {2, 5, 9, 14})
                  if (core.row_residue(a) != 4 || !psi.same_path(1, a)) return false;
                if (straightening_case(psi, j) != which || !corners_ok(5, big, j, {})) return false;
                if (j == 14) return psi.top(14) == 1 && psi.top(13) == 4 && *psi.up(psi.top(13) + 1) == 2;
                if (j == 15) return psi.top(15) == 6;
                return psi.top(13) == 4 && psi.top(12) == 3;
              });
  }
  rec.finish();
  return r;
}

SuiteResult verify_factorization(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "factorization";
  r.identity =
      "T_{w_{1^m}} = +-T_{u_1}...T_{u_a} with cyclically decreasing u_i of lengths mu has "
      "binom(a-1, m-1) solutions for mu = 1^a and none otherwise";
  const auto ks = k_range(opts, 1, 3);
  const int max_m = 3, max_a = 6;
  r.parameters = {{"k", ks}, {"max_m", max_m}, {"max_a", max_a}};
  Recorder rec(r, {"single-letters", "longer-factors"});
  for (int k : ks) {
    std::vector<std::vector<Word>> by_len(k + 1);
    for (int len = 1; len <= k; ++len) by_len[len] = enumerate_cyclic(k, len, Cyclic::Decreasing);
    for (int m = 1; m <= max_m; ++m) {
      const AffinePerm target = perm_of_partition(k, Partition::rectangle(m, 1));
      for (const Partition& mu : partitions_up_to(max_a, k)) {
        if (mu.empty() || static_cast<int>(mu.length()) > max_a) continue;
        long count = 0;
        std::function<void(std::size_t, const SignedHecke&)> go = [&](std::size_t i, const SignedHecke& x) {
          if (x.is_zero()) return;
          if (i == mu.length()) {
            count += x.perm == target;
            return;
          }
          // The product T_{u_1} ... T_{u_a}: apply from the right.
          const int len = mu.parts()[mu.length() - 1 - i];
          for (const Word& u : by_len[len]) go(i + 1, hecke_product(u, x));
        };
        go(0, SignedHecke::basis(AffinePerm::identity(k + 1)));
        const int a = static_cast<int>(mu.length());
        const bool ones = mu.largest() == 1;
        const Integer want = ones ? binomial(a - 1, m - 1) : Integer(0);
        rec.record(ones ? "single-letters" : "longer-factors", Integer(count) == want, [&] {
          return json{{"k", k}, {"m", m}, {"mu", to_json(mu)}, {"count", count},
                      {"expected", want.str()}};
        });
      }
    }
  }
  rec.finish();
  return r;
}

SuiteResult verify_tilde_g(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "tilde-g";
  r.identity = "for Grassmannian w, tilde g_w = g_{theta(w)'} = g^{(k)}_{theta(w)'} = closed g^{(k)}_{theta(w)'}";
  const auto ks = k_range(opts, 1, 4);
  r.parameters = {{"k", ks}};
  Recorder rec(r, {"grassmannian", "examples"});
  FamilyCache& cache = cache_of(opts);
  std::vector<std::pair<int, FinitePerm>> items;
  for (int k : ks)
    for (auto& w : all_finite_perms(k + 1))
      if (finite_descents(w).size() == 1) items.emplace_back(k, w);
  parallel_for(items.size(), opts.jobs, [&](std::size_t i) {
    const auto& [k, w] = items[i];
    rec.check("grassmannian", [&] { return json{{"k", k}, {"w", w}}; }, [&] {
      const Partition t = theta(k, w).conjugate();
      const SymFunc g = dual_groth_det(t);
      return tilde_g_w(k, w, cache) == g && cache.get(Family::KK, k, t) == g &&
             cache.get(Family::Closed, k, t) == g;
    });
  });
  rec.check("examples", [] { return json{{"k", 2}, {"w", {2, 1, 3}}}; },
            [&] { return tilde_g_w(2, {2, 1, 3}, cache) == SymFunc::h(1); });
  for (int k : ks)
    rec.check("examples", [k] { return json{{"k", k}, {"w", "identity"}}; }, [&, k] {
      FinitePerm id(k + 1);
      for (int i = 0; i <= k; ++i) id[i] = i + 1;
      return tilde_g_w(k, id, cache) == SymFunc::one();
    });
  rec.finish();
  return r;
}

SuiteResult verify_omega(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "omega";
  r.identity = "omega(g^{(k)}_mu) = g^{(k)}_{mu^{omega_k}}, and the same for the closed family";
  const auto ks = k_range(opts, 1, 3);
  const int max_deg = opts.max_deg.value_or(7);
  r.parameters = {{"k", ks}, {"max_deg", max_deg}};
  Recorder rec(r, {"kk", "closed"});
  FamilyCache& cache = cache_of(opts);
  const auto items = bounded_pairs(ks, max_deg);
  parallel_for(items.size(), opts.jobs, [&](std::size_t i) {
    const auto& [k, mu] = items[i];
    const Partition c = k_conjugate(k, mu);
    for (Family f : {Family::KK, Family::Closed})
      rec.check(family_name(f), [&] { return kl(k, mu); },
                [&] { return omega(cache.get(f, k, mu)) == cache.get(f, k, c); });
  });
  rec.finish();
  return r;
}

SuiteResult verify_unitriangular(const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "unitriangular";
  r.identity =
      "g^{(k)}_lambda = s^{(k)}_lambda + lower degree k-Schur terms, and closed g^{(k)}_lambda = "
      "g^{(k)}_lambda + lower degree terms";
  const auto ks = k_range(opts, 1, 3);
  const int max_deg = opts.max_deg.value_or(7);
  r.parameters = {{"k", ks}, {"max_deg", max_deg}};
  Recorder rec(r, {"kk-in-kschur", "closed-in-kk"});
  FamilyCache& cache = cache_of(opts);
  const auto items = bounded_pairs(ks, max_deg);
  auto triangular = [](const BranchReport& b, const Partition& lambda) {
    if (!b.reproduces || b.coeff(lambda) != 1) return false;
    for (const auto& [mu, c] : b.coeffs)
      if (mu != lambda && mu.size() >= lambda.size()) return false;
    return true;
  };
  parallel_for(items.size(), opts.jobs, [&](std::size_t i) {
    const auto& [k, lambda] = items[i];
    const int n = lambda.size();
    rec.check("kk-in-kschur", [&] { return kl(k, lambda); }, [&] {
      return triangular(expand_report(cache.get(Family::KK, k, lambda), Family::KSchur, k,
                                      SignRule::None, n, cache),
                        lambda);
    });
    rec.check("closed-in-kk", [&] { return kl(k, lambda); }, [&] {
      return triangular(expand_report(cache.get(Family::Closed, k, lambda), Family::KK, k,
                                      SignRule::None, n, cache),
                        lambda);
    });
  });
  rec.finish();
  return r;
}

std::vector<std::string> suite_names() {
  return {"specializations", "determinant",   "identities",    "mirror",     "pieri",
          "pieri-straightening", "shift",      "branch",        "rectangle",  "longest-word",
          "theta",           "dictionary",    "factorization", "tilde-g",    "omega",
          "unitriangular"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
  using Fn = SuiteResult (*)(const VerifyOptions&);
  static const std::map<std::string, Fn> table{
      {"specializations", verify_specializations},
      {"determinant", verify_determinant},
      {"identities", verify_identities},
      {"mirror", verify_mirror},
      {"pieri", verify_pieri},
      {"pieri-straightening", verify_pieri_straightening},
      {"shift", verify_shift},
      {"branch", verify_branch},
      {"rectangle", verify_rectangle},
      {"longest-word", verify_longest_word},
      {"theta", verify_theta},
      {"dictionary", verify_dictionary},
      {"factorization", verify_factorization},
      {"tilde-g", verify_tilde_g},
      {"omega", verify_omega},
      {"unitriangular", verify_unitriangular},
  };
  auto it = table.find(name);
  if (it == table.end()) throw ParseError("unknown suite '" + name + "'");
  return it->second(opts);
}

}  // namespace katalan
