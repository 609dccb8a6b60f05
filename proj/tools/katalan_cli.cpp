#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "katalan/conjectures.hpp"
#include "katalan/errors.hpp"
#include "katalan/json_io.hpp"
#include "katalan/kkschur.hpp"
#include "katalan/verify.hpp"
#include "katalan/version.hpp"

using namespace katalan;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kInvalid = 2, kLimit = 3 };

struct Args {
  int k = 2;
  std::optional<int> k_given;
  std::optional<int> ell;
  std::string lambda;
  std::string weight;
  std::string psi;
  std::string mult;
  int r = 1;
  std::optional<int> max_deg;
  int jobs = 1;
  std::string cache_dir;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t support_cap = EvalOptions{}.support_cap;
  std::string perm;
  std::string family = "closed";
  std::string basis = "kk";
  std::optional<int> basis_k;
  std::string rule = "alternating";
  int instances = 500;
  std::string target;  // suite or conjecture name
};

std::vector<int> int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": '" + s + "' is not a comma-separated integer list");
    }
    if (used != item.size())
      throw ParseError(std::string(what) + ": '" + s + "' is not a comma-separated integer list");
    out.push_back(v);
  }
  return out;
}

Partition lambda_of(const Args& a) { return Partition(int_list(a.lambda, "--lambda")); }

KatalanIndex index_of(const Args& a) {
  const Weight g = int_list(a.weight, "--weight");
  const int ell = static_cast<int>(g.size());
  RootIdeal psi = RootIdeal(ell, std::vector<int>(ell, 0));
  if (a.psi == "full") psi = RootIdeal::full(ell);
  else if (!a.psi.empty() && a.psi != "empty") psi = RootIdeal(ell, int_list(a.psi, "--psi"));
  Multiset m(ell);
  if (a.mult == "full") m = full_multiset(ell);
  else if (a.mult == "psi") m = multiset_of(psi);
  else if (!a.mult.empty() && a.mult != "empty") m = Multiset(ell, int_list(a.mult, "--mult"));
  return KatalanIndex(psi, m, g);
}

SignRule rule_of(const std::string& s) {
  if (s == "alternating") return SignRule::Alternating;
  if (s == "positive") return SignRule::Positive;
  if (s == "none") return SignRule::None;
  throw ParseError("--rule must be alternating, positive or none");
}

void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + a.out);
  f << text << '\n';
}

std::unique_ptr<FamilyCache> make_cache(const Args& a) {
  EvalOptions eo;
  eo.support_cap = a.support_cap;
  std::string dir = a.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("KATALAN_CACHE_DIR")) dir = env;
  if (dir.empty()) return std::make_unique<FamilyCache>(std::filesystem::path(), eo);
  return std::make_unique<FamilyCache>(std::filesystem::path(dir), eo);
}

int run_command(const std::string& cmd, const Args& a) {
  if (a.support_cap == 0) throw ParseError("--support-cap must be positive");
  if (a.jobs < 1) throw ParseError("--jobs must be positive");
  auto cache_ptr = make_cache(a);
  FamilyCache& cache = *cache_ptr;
  const EvalOptions& eo = cache.options();
  int code = kOk;
  std::string text;

  if (cmd == "eval") {
    text = dump(to_json(eval(index_of(a), eo)));
  } else if (cmd == "kkschur" || cmd == "closed" || cmd == "kschur") {
    const Family f = cmd == "kkschur" ? Family::KK : cmd == "closed" ? Family::Closed : Family::KSchur;
    text = dump(to_json(cache.get(f, a.k, lambda_of(a))));
  } else if (cmd == "pieri") {
    const PieriTriple t = pieri_triple(a.k, lambda_of(a), a.r, cache);
    text = dump(json{{"k", a.k}, {"lambda", to_json(lambda_of(a))}, {"r", a.r},
                     {"lhs", to_json(t.lhs)}, {"rhs_hecke", to_json(t.rhs_hecke)},
                     {"rhs_katalan", to_json(t.rhs_katalan)}, {"equal", t.all_equal()}});
    if (!t.all_equal()) code = kCounterexample;
  } else if (cmd == "shift") {
    const Partition lam = lambda_of(a);
    const SymFunc s = shift(a.k, lam, a.ell, cache);
    const SymFunc& g = cache.get(Family::KK, a.k, lam);
    text = dump(json{{"k", a.k}, {"lambda", to_json(lam)},
                     {"ell", a.ell.value_or(static_cast<int>(lam.length()))}, {"shift", to_json(s)},
                     {"g", to_json(g)}, {"equal", s == g}});
    if (s != g) code = kCounterexample;
  } else if (cmd == "branch") {
    BranchReport b = branch(a.k, lambda_of(a), cache);
    text = dump(to_json(b));
    if (b.sign_flaw || !b.reproduces) code = kCounterexample;
  } else if (cmd == "expand") {
    SymFunc f;
    Partition src;
    int size = 0;
    if (!a.weight.empty()) {
      const KatalanIndex idx = index_of(a);
      f = eval(idx, eo);
      for (int x : idx.gamma) size += x;
    } else {
      src = lambda_of(a);
      f = cache.get(parse_family(a.family), a.k, src);
      size = src.size();
    }
    const Family basis = parse_family(a.basis);
    BranchReport b = expand_report(f, basis, a.basis_k.value_or(a.k), rule_of(a.rule), size, cache);
    b.k = a.k;
    b.source = src;
    text = dump(to_json(b));
    if (b.sign_flaw || !b.reproduces) code = kCounterexample;
  } else if (cmd == "tilde-g") {
    const FinitePerm w = int_list(a.perm, "--perm");
    if (static_cast<int>(w.size()) != a.k + 1) throw ParseError("--perm must have k+1 entries");
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i <= a.k; ++i)
      if (sorted[i] != i + 1) throw ParseError("--perm is not a permutation of 1..k+1");
    const Partition lam = k_conjugate(a.k, theta(a.k, w));
    const SymFunc t = tilde_g_w(a.k, w, cache);
    const SymFunc& c = cache.get(Family::Closed, a.k, lam);
    text = dump(json{{"k", a.k}, {"w", w}, {"lambda", to_json(lam)}, {"tilde_g", to_json(t)},
                     {"closed", to_json(c)}, {"equal", t == c}});
    if (t != c) code = kCounterexample;
  } else if (cmd == "verify") {
    VerifyOptions vo;
    vo.k = a.k_given;
    vo.max_deg = a.max_deg;
    vo.max_ell = a.ell;
    vo.instances = a.instances;
    vo.seed = a.seed;
    vo.jobs = a.jobs;
    vo.cache = &cache;
    const SuiteResult r = run_suite(a.target, vo);
    text = dump(r.to_json());
    if (!r.ok()) code = kCounterexample;
  } else if (cmd == "sweep") {
    SweepRanges sr;
    if (a.k_given) sr.ks = {*a.k_given};
    if (a.ell) sr.max_ell = *a.ell;
    if (a.max_deg) sr.max_deg = *a.max_deg;
    const SweepReport rep = sweep(a.target, sr, cache, a.jobs);
    text = dump(rep.to_json());
    if (!rep.witnesses.empty()) code = kCounterexample;
  } else if (cmd == "render") {
    const KatalanIndex idx = index_of(a);
    text = render_grid(idx.psi, idx.mult, idx.gamma);
    if (!text.empty() && text.back() == '\n') text.pop_back();
  }

  const auto bad = cache.audit(0.01, a.seed);
  for (const auto& key : bad) std::cerr << "cache audit mismatch: " << key << '\n';
  if (!bad.empty()) code = kCounterexample;
  emit(a, text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Katalan functions and K-k-Schur functions"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* s) {
    s->add_option("--cache-dir", a.cache_dir, "Persistent family cache (default $KATALAN_CACHE_DIR)");
    s->add_option("--out", a.out, "Write the result here instead of stdout");
    s->add_option("--support-cap", a.support_cap, "Maximum live partial weights during evaluation");
    s->add_option("--seed", a.seed, "Seed for randomized subsets and the cache audit");
    s->add_option("--jobs", a.jobs, "Worker threads");
  };
  auto with_k = [&](CLI::App* s) {
    s->add_option_function<int>("--k", [&](int k) { a.k = k; a.k_given = k; }, "Level k");
  };
  auto with_index = [&](CLI::App* s) {
    s->add_option("--weight", a.weight, "Weight, comma-separated, negatives allowed")->required();
    s->add_option("--psi", a.psi, "Root ideal row counts, or 'full' / 'empty'");
    s->add_option("--mult", a.mult, "Lowering multiplicities per column, or 'full' / 'psi' / 'empty'");
  };

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate K(psi; mult; weight) in the h basis");
  with_index(eval_cmd);
  common(eval_cmd);

  for (const char* name : {"kkschur", "closed", "kschur"}) {
    auto* s = app.add_subcommand(name, std::string("Family member ") + name + " at (k, lambda)");
    with_k(s);
    s->add_option("--lambda", a.lambda, "Partition, comma-separated");
    common(s);
  }

  auto* pieri_cmd = app.add_subcommand("pieri", "Three formulations of g_{1^r} g_lambda");
  with_k(pieri_cmd);
  pieri_cmd->add_option("--lambda", a.lambda);
  pieri_cmd->add_option("--r", a.r, "Column length r, 0 <= r <= k");
  common(pieri_cmd);

  auto* shift_cmd = app.add_subcommand("shift", "G_{1^l}^perp g^{(k+1)}_{lambda+1^l} against g^{(k)}_lambda");
  with_k(shift_cmd);
  shift_cmd->add_option("--lambda", a.lambda);
  shift_cmd->add_option("--ell", a.ell, "Column length l, default l(lambda)");
  common(shift_cmd);

  auto* branch_cmd = app.add_subcommand("branch", "Expand g^{(k)}_lambda in g^{(k+1)}");
  with_k(branch_cmd);
  branch_cmd->add_option("--lambda", a.lambda);
  common(branch_cmd);

  auto* expand_cmd = app.add_subcommand("expand", "Expand a family member or Katalan function in a family");
  with_k(expand_cmd);
  expand_cmd->add_option("--lambda", a.lambda);
  expand_cmd->add_option("--family", a.family, "Source family: dual-groth, kschur, kk, closed");
  expand_cmd->add_option("--weight", a.weight, "Expand K(psi; mult; weight) instead");
  expand_cmd->add_option("--psi", a.psi);
  expand_cmd->add_option("--mult", a.mult);
  expand_cmd->add_option("--basis", a.basis, "Target family");
  expand_cmd->add_option("--basis-k", a.basis_k, "Level of the target family, default k");
  expand_cmd->add_option("--rule", a.rule, "Sign rule: alternating, positive, none");
  common(expand_cmd);

  auto* tilde_cmd = app.add_subcommand("tilde-g", "tilde g_w for w in S_{k+1}");
  with_k(tilde_cmd);
  tilde_cmd->add_option("--perm", a.perm, "One-line notation, comma-separated")->required();
  common(tilde_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", a.target, "Suite name")->required();
  with_k(verify_cmd);
  verify_cmd->add_option("--max-deg", a.max_deg, "Degree bound");
  verify_cmd->add_option("--ell", a.ell, "Length bound");
  verify_cmd->add_option("--instances", a.instances, "Generated instances per lemma family");
  common(verify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep a conjecture for counterexamples");
  sweep_cmd->add_option("conjecture", a.target, "tilde-g|a, dual-pieri|c, k-branching|d, kk-alternating|e, rectangle|f, kpos")->required();
  with_k(sweep_cmd);
  sweep_cmd->add_option("--max-deg", a.max_deg, "Degree bound");
  sweep_cmd->add_option("--ell", a.ell, "Length bound");
  common(sweep_cmd);

  auto* render_cmd = app.add_subcommand("render", "Grid picture of K(psi; mult; weight)");
  with_index(render_cmd);
  common(render_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    return run_command(app.get_subcommands().front()->get_name(), a);
  } catch (const LimitExceeded& e) {
    std::cerr << e.what() << '\n';
    return kLimit;
  } catch (const error& e) {
    std::cerr << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
