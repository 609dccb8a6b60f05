#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "katalan/affine.hpp"
#include "katalan/json_io.hpp"
#include "katalan/katalan.hpp"
#include "katalan/symfunc.hpp"

namespace katalan {

// K(Delta^k(lambda); Delta^{k+1}(lambda); lambda). Throws NotKBounded if lambda_1 > k.
SymFunc g_kk(int k, const Partition& lambda, const EvalOptions& opts = {});
// K(Delta^k(lambda); Delta^k(lambda); lambda).
SymFunc g_closed(int k, const Partition& lambda, const EvalOptions& opts = {});
// H(Delta^k(mu); mu).
SymFunc kschur(int k, const Partition& mu, const EvalOptions& opts = {});

enum class Family { DualGroth, KSchur, KK, Closed };
std::string family_name(Family f);
// Accepts "dual-groth", "kschur", "kk", "closed". Throws ParseError.
Family parse_family(const std::string& name);

// Thread-safe memo of family members, optionally persisted to disk as one
// JSON file per member carrying a content digest. Writes go to a temporary
// file that is renamed into place.
class FamilyCache {
 public:
  FamilyCache() = default;
  // An empty path keeps the cache in memory only.
  explicit FamilyCache(std::filesystem::path dir, EvalOptions opts = {});

  const SymFunc& get(Family f, int k, const Partition& lambda);
  // Members {mu : |mu| <= max_deg} of the family at level k, factored once.
  const BasisExpander& expander(Family f, int k, int max_deg);

  // Recomputes roughly `fraction` of the entries that were loaded from disk
  // and returns the keys whose stored value disagrees.
  std::vector<std::string> audit(double fraction, std::uint64_t seed);

  std::size_t disk_hits() const noexcept { return disk_hits_; }
  const EvalOptions& options() const noexcept { return opts_; }

 private:
  using Key = std::tuple<Family, int, Partition>;
  SymFunc compute(Family f, int k, const Partition& lambda) const;
  std::optional<SymFunc> load(const Key& key) const;
  void store(const Key& key, const SymFunc& value) const;
  std::filesystem::path path_of(const Key& key) const;

  std::optional<std::filesystem::path> dir_;
  EvalOptions opts_;
  std::mutex mu_;
  std::map<Key, std::unique_ptr<SymFunc>> values_;
  std::vector<Key> loaded_;
  std::map<std::tuple<Family, int, int>, std::unique_ptr<BasisExpander>> expanders_;
  std::size_t disk_hits_ = 0;
};

// Process-wide cache without disk persistence.
FamilyCache& default_cache();

SymFunc family_member(Family f, int k, const Partition& lambda, const EvalOptions& opts = {});

struct PieriTriple {
  SymFunc lhs;          // g_{1^r} * g_kk(k, lambda)
  SymFunc rhs_hecke;    // 0-Hecke Pieri sum
  SymFunc rhs_katalan;  // sum over r-subsets of Z/(k+1) of Katalan functions
  bool all_equal() const { return lhs == rhs_hecke && lhs == rhs_katalan; }
};
PieriTriple pieri_triple(int k, const Partition& lambda, int r, FamilyCache& cache = default_cache());

// G_{1^ell}^perp g_kk(k+1, lambda + 1^ell); ell defaults to the length of lambda.
SymFunc shift(int k, const Partition& lambda, std::optional<int> ell = std::nullopt,
              FamilyCache& cache = default_cache());
SymFunc shift_closed(int k, const Partition& lambda, std::optional<int> ell = std::nullopt,
                     FamilyCache& cache = default_cache());

enum class SignRule {
  Alternating,  // (-1)^{|source| - |mu|} c >= 0
  Positive,     // c >= 0
  None,
};

struct BranchReport {
  int k = 0;
  Partition source;
  int source_size = 0;  // degree used for the sign rule
  Family family = Family::KK;
  int family_k = 0;
  Expansion coeffs;  // nonzero coefficients only
  SignRule rule = SignRule::None;
  std::optional<std::pair<Partition, Integer>> sign_flaw;
  bool reproduces = false;  // sum of coeffs * members equals the source

  std::string verdict() const;
  Integer coeff(const Partition& mu) const;
};
json to_json(const BranchReport& r);

// Coefficients of g_kk(k, lambda) in {g_kk(k+1, mu)}.
BranchReport branch(int k, const Partition& lambda, FamilyCache& cache = default_cache());

// Coefficients of f in the family at level k, with f of degree <= its own
// degree. `source_size` fixes the parity in the alternating rule.
// Throws NotInSpan if f does not lie in the span.
BranchReport expand_report(const SymFunc& f, Family family, int k, SignRule rule,
                           int source_size, FamilyCache& cache = default_cache());

// (1 - G_1^perp) sum_{mu : w_mu <= w_lambda} g_kk(k, mu), lambda = k_conjugate(theta(w)).
SymFunc tilde_g_w(int k, const FinitePerm& w, FamilyCache& cache = default_cache());

// prod_{i=1}^{k-1} g_{(k-i)^i}.
SymFunc longest_word_product(int k);

}  // namespace katalan
