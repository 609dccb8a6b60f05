#include "katalan/kkschur.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "katalan/errors.hpp"

namespace katalan {

namespace fs = std::filesystem;

namespace {

void require_k_bounded(int k, const Partition& lambda) {
  if (lambda.largest() > k)
    throw NotKBounded("partition " + lambda.str() + " has a part larger than k = " +
                      std::to_string(k));
}

SymFunc katalan_of(const RootIdeal& psi, const RootIdeal& lowering, const Weight& w,
                   const EvalOptions& opts) {
  return eval(KatalanIndex(psi, lowering, w), opts);
}

}  // namespace

SymFunc g_kk(int k, const Partition& lambda, const EvalOptions& opts) {
  require_k_bounded(k, lambda);
  if (lambda.empty()) return SymFunc::one();
  const Weight w = lambda.as_weight();
  return katalan_of(delta_k(k, w), delta_k(k + 1, w), w, opts);
}

SymFunc g_closed(int k, const Partition& lambda, const EvalOptions& opts) {
  require_k_bounded(k, lambda);
  if (lambda.empty()) return SymFunc::one();
  const Weight w = lambda.as_weight();
  const RootIdeal psi = delta_k(k, w);
  return katalan_of(psi, psi, w, opts);
}

SymFunc kschur(int k, const Partition& mu, const EvalOptions& opts) {
  require_k_bounded(k, mu);
  if (mu.empty()) return SymFunc::one();
  const Weight w = mu.as_weight();
  return catalan_H(delta_k(k, w), w, opts);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::DualGroth: return "dual-groth";
    case Family::KSchur: return "kschur";
    case Family::KK: return "kk";
    case Family::Closed: return "closed";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::DualGroth, Family::KSchur, Family::KK, Family::Closed})
    if (family_name(f) == name) return f;
  throw ParseError("unknown family '" + name + "'");
}

SymFunc family_member(Family f, int k, const Partition& lambda, const EvalOptions& opts) {
  switch (f) {
    case Family::DualGroth: return dual_groth_det(lambda);
    case Family::KSchur: return kschur(k, lambda, opts);
    case Family::KK: return g_kk(k, lambda, opts);
    case Family::Closed: return g_closed(k, lambda, opts);
  }
  return {};
}

FamilyCache::FamilyCache(fs::path dir, EvalOptions opts) : opts_(opts) {
  if (!dir.empty()) dir_ = std::move(dir);
}

SymFunc FamilyCache::compute(Family f, int k, const Partition& lambda) const {
  return family_member(f, k, lambda, opts_);
}

fs::path FamilyCache::path_of(const Key& key) const {
  const auto& [f, k, lambda] = key;
  std::string name = "p";
  for (int x : lambda.parts()) name += "_" + std::to_string(x);
  return *dir_ / (family_name(f) + "-k" + std::to_string(k)) / (name + ".json");
}

std::optional<SymFunc> FamilyCache::load(const Key& key) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(path_of(key));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    const auto& [f, k, lambda] = key;
    if (j.at("family") != family_name(f) || j.at("k") != k ||
        partition_from_json(j.at("lambda")) != lambda)
      return std::nullopt;
    SymFunc value = symfunc_from_json(j.at("value"));
    if (j.at("digest") != fnv1a_hex(dump(to_json(value)))) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void FamilyCache::store(const Key& key, const SymFunc& value) const {
  if (!dir_) return;
  const auto& [f, k, lambda] = key;
  const fs::path target = path_of(key);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  json v = to_json(value);
  json j = {{"family", family_name(f)},
            {"k", k},
            {"lambda", to_json(lambda)},
            {"value", v},
            {"digest", fnv1a_hex(dump(v))}};
  std::ostringstream tag;
  tag << std::this_thread::get_id();
  fs::path tmp = target;
  tmp += ".tmp." + tag.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << dump(j) << '\n';
    if (!out) return;
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

const SymFunc& FamilyCache::get(Family f, int k, const Partition& lambda) {
  Key key{f, f == Family::DualGroth ? 0 : k, lambda};
  {
    std::lock_guard lock(mu_);
    if (auto it = values_.find(key); it != values_.end()) return *it->second;
  }
  bool from_disk = false;
  SymFunc value;
  if (auto cached = load(key)) {
    value = std::move(*cached);
    from_disk = true;
  } else {
    value = compute(f, k, lambda);
    store(key, value);
  }
  std::lock_guard lock(mu_);
  auto [it, inserted] = values_.try_emplace(key, nullptr);
  if (inserted) {
    it->second = std::make_unique<SymFunc>(std::move(value));
    if (from_disk) {
      loaded_.push_back(key);
      ++disk_hits_;
    }
  }
  return *it->second;
}

const BasisExpander& FamilyCache::expander(Family f, int k, int max_deg) {
  const int level = f == Family::DualGroth ? 0 : k;
  const auto key = std::make_tuple(f, level, max_deg);
  {
    std::lock_guard lock(mu_);
    if (auto it = expanders_.find(key); it != expanders_.end()) return *it->second;
  }
  std::vector<LabeledSymFunc> members;
  const int max_part = f == Family::DualGroth ? -1 : k;
  for (const Partition& mu : partitions_up_to(max_deg, max_part))
    members.emplace_back(mu, get(f, k, mu));
  auto built = std::make_unique<BasisExpander>(std::move(members));
  std::lock_guard lock(mu_);
  auto [it, inserted] = expanders_.try_emplace(key, nullptr);
  if (inserted) it->second = std::move(built);
  return *it->second;
}

std::vector<std::string> FamilyCache::audit(double fraction, std::uint64_t seed) {
  std::vector<std::pair<Key, const SymFunc*>> picked;
  {
    std::lock_guard lock(mu_);
    if (loaded_.empty() || fraction <= 0) return {};
    std::vector<Key> keys = loaded_;
    std::mt19937_64 rng(seed);
    std::shuffle(keys.begin(), keys.end(), rng);
    std::size_t n = static_cast<std::size_t>(fraction * static_cast<double>(keys.size()));
    n = std::clamp<std::size_t>(n, 1, keys.size());
    for (std::size_t i = 0; i < n; ++i) picked.emplace_back(keys[i], values_.at(keys[i]).get());
  }
  std::vector<std::string> bad;
  for (const auto& [key, stored] : picked) {
    const auto& [f, k, lambda] = key;
    if (compute(f, k, lambda) != *stored)
      bad.push_back(family_name(f) + " k=" + std::to_string(k) + " " + lambda.str());
  }
  return bad;
}

FamilyCache& default_cache() {
  static FamilyCache cache;
  return cache;
}

PieriTriple pieri_triple(int k, const Partition& lambda, int r, FamilyCache& cache) {
  require_k_bounded(k, lambda);
  if (r < 0 || r > k) throw InvalidWeight("Pieri needs 0 <= r <= k");
  const SymFunc& g = cache.get(Family::KK, k, lambda);
  PieriTriple out;
  out.lhs = multiply(dual_groth_det(Partition::rectangle(r, 1)), g);

  const AffinePerm w_lambda = perm_of_partition(k, lambda);
  const int len_lambda = lambda.size();
  for (const Word& u : enumerate_cyclic(k, r, Cyclic::Increasing)) {
    SignedHecke x = hecke_product(u, SignedHecke::basis(w_lambda));
    if (!x.perm.is_grassmannian()) continue;
    const int e = len_lambda + r - x.perm.length();
    const SymFunc& term = cache.get(Family::KK, k, partition_of_perm(x.perm));
    out.rhs_hecke += (e % 2) ? -term : term;
  }

  const int ell = static_cast<int>(lambda.length()) + k + 1;
  const int n = k + 1;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + r, 1);
  do {
    std::vector<int> residues;
    for (int i = 0; i < n; ++i)
      if (pick[i]) residues.push_back(i);
    const std::vector<int> A = rm_inverse(ell, k, residues);
    Weight mu = lambda.as_weight(ell + r);
    for (int a : A) mu[a - 1] += 1;
    const RootIdeal psi = delta_k(k, mu);
    const Multiset m = multiset_of(delta_k(k + 1, mu)).disjoint_union(Multiset::of_elements(ell + r, A));
    out.rhs_katalan += eval(KatalanIndex(psi, m, mu), cache.options());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

namespace {

SymFunc shift_impl(Family f, int k, const Partition& lambda, std::optional<int> ell,
                   FamilyCache& cache) {
  require_k_bounded(k, lambda);
  const int len = ell.value_or(static_cast<int>(lambda.length()));
  if (len < static_cast<int>(lambda.length()))
    throw MismatchedLength("shift length shorter than the partition");
  if (len == 0) return cache.get(f, k + 1, lambda);
  Weight up = lambda.as_weight(len);
  for (int& x : up) ++x;
  return g_column_perp(len, cache.get(f, k + 1, Partition(up)));
}

}  // namespace

SymFunc shift(int k, const Partition& lambda, std::optional<int> ell, FamilyCache& cache) {
  return shift_impl(Family::KK, k, lambda, ell, cache);
}

SymFunc shift_closed(int k, const Partition& lambda, std::optional<int> ell,
                     FamilyCache& cache) {
  return shift_impl(Family::Closed, k, lambda, ell, cache);
}

std::string BranchReport::verdict() const {
  if (sign_flaw) return "sign-flaw";
  switch (rule) {
    case SignRule::Alternating: return "alternating";
    case SignRule::Positive: return "positive";
    case SignRule::None: return "unchecked";
  }
  return "unchecked";
}

Integer BranchReport::coeff(const Partition& mu) const {
  for (const auto& [p, c] : coeffs)
    if (p == mu) return c;
  return 0;
}

json to_json(const BranchReport& r) {
  json coeffs = json::array();
  for (const auto& [mu, c] : r.coeffs) coeffs.push_back({{"mu", to_json(mu)}, {"c", to_decimal(c)}});
  json out = {{"source", {{"k", r.k}, {"lambda", to_json(r.source)}}},
              {"family", {{"kind", family_name(r.family)}, {"k", r.family_k}}},
              {"coeffs", std::move(coeffs)},
              {"verdict", r.verdict()},
              {"reproduces", r.reproduces}};
  if (r.sign_flaw)
    out["sign_flaw"] = {{"mu", to_json(r.sign_flaw->first)}, {"c", to_decimal(r.sign_flaw->second)}};
  return out;
}

BranchReport expand_report(const SymFunc& f, Family family, int k, SignRule rule,
                           int source_size, FamilyCache& cache) {
  const int deg = std::max(f.degree(), 0);
  const BasisExpander& ex = cache.expander(family, k, deg);
  BranchReport rep;
  rep.family = family;
  rep.family_k = family == Family::DualGroth ? 0 : k;
  rep.rule = rule;
  rep.source_size = source_size;
  SymFunc back;
  for (auto& [mu, c] : ex.expand(f)) {
    if (c == 0) continue;
    back += cache.get(family, k, mu) * c;
    const bool odd = (source_size - mu.size()) % 2 != 0;
    bool ok = true;
    if (rule == SignRule::Alternating) ok = odd ? c <= 0 : c >= 0;
    if (rule == SignRule::Positive) ok = c >= 0;
    if (!ok && !rep.sign_flaw) rep.sign_flaw = std::make_pair(mu, c);
    rep.coeffs.emplace_back(mu, c);
  }
  rep.reproduces = back == f;
  return rep;
}

BranchReport branch(int k, const Partition& lambda, FamilyCache& cache) {
  const SymFunc& f = cache.get(Family::KK, k, lambda);
  BranchReport rep =
      expand_report(f, Family::KK, k + 1, SignRule::Alternating, lambda.size(), cache);
  rep.k = k;
  rep.source = lambda;
  return rep;
}

SymFunc tilde_g_w(int k, const FinitePerm& w, FamilyCache& cache) {
  const Partition lambda = k_conjugate(k, theta(k, w));
  const AffinePerm top = perm_of_partition(k, lambda);
  SymFunc sum;
  for (const Partition& mu : partitions_up_to(lambda.size(), k))
    if (bruhat_leq(perm_of_partition(k, mu), top)) sum += cache.get(Family::KK, k, mu);
  return one_minus_G1_perp(sum);
}

SymFunc longest_word_product(int k) {
  SymFunc out = SymFunc::one();
  for (int i = 1; i <= k - 1; ++i) out = multiply(out, dual_groth_det(Partition::rectangle(i, k - i)));
  return out;
}

}  // namespace katalan
