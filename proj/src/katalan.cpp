#include "katalan/katalan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "katalan/errors.hpp"

namespace katalan {

KatalanIndex::KatalanIndex(RootIdeal psi_, Multiset mult_, Weight gamma_)
    : psi(std::move(psi_)), mult(std::move(mult_)), gamma(std::move(gamma_)) {
  if (mult.ell() != psi.ell() || static_cast<int>(gamma.size()) != psi.ell())
    throw MismatchedLength("Katalan index with ideal length " + std::to_string(psi.ell()) +
                           ", multiset length " + std::to_string(mult.ell()) +
                           ", weight length " + std::to_string(gamma.size()));
}

KatalanIndex::KatalanIndex(RootIdeal psi_, const RootIdeal& lowering, Weight gamma_)
    : KatalanIndex(std::move(psi_), multiset_of(lowering), std::move(gamma_)) {}

std::string KatalanIndex::str() const {
  std::ostringstream os;
  os << "K(rows=" << weight_str(psi.rows()) << "; mult=" << mult.str()
     << "; gamma=" << weight_str(gamma) << ")";
  return os.str();
}

namespace {

using StateMap = std::unordered_map<Weight, SymFunc, WeightHash>;

void check_cap(std::size_t size, const EvalOptions& opts) {
  if (size > opts.support_cap)
    throw LimitExceeded("intermediate support " + std::to_string(size) + " exceeds cap " +
                        std::to_string(opts.support_cap));
}

void add_into(StateMap& map, Weight&& w, const SymFunc& c, bool negate) {
  auto [it, inserted] = map.try_emplace(std::move(w));
  if (negate)
    it->second -= c;
  else
    it->second += c;
  if (it->second.is_zero()) map.erase(it);
}

}  // namespace

SymFunc raise_and_contract(const RootIdeal& psi, const Weight& gamma,
                           const std::vector<int>& shifts, const EvalOptions& opts) {
  const int ell = psi.ell();
  if (static_cast<int>(gamma.size()) != ell || static_cast<int>(shifts.size()) != ell)
    throw MismatchedLength("raise_and_contract inputs have different lengths");
  if (ell == 0) return SymFunc::one();

  // raises_left[p]: raising factors (p, j) not yet applied.
  std::vector<int> raises_left = psi.nonroot_counts();
  auto alive = [&](const Weight& w, int upto) {
    for (int p = 0; p < upto; ++p)
      if (w[p] + raises_left[p] < 0) return false;
    return true;
  };

  StateMap states;
  if (!alive(gamma, ell)) return SymFunc();
  states.emplace(gamma, SymFunc::one());

  for (int j = ell; j >= 1; --j) {
    // Non-roots in column j are rows col_count(j)+1 .. j-1.
    for (int i = psi.col_count(j) + 1; i <= j - 1; ++i) {
      --raises_left[i - 1];
      std::vector<std::pair<Weight, const SymFunc*>> shifted;
      shifted.reserve(states.size());
      for (const auto& [w, c] : states) {
        if (w[j - 1] <= 0) continue;  // position j only decreases from here on
        Weight v = w;
        ++v[i - 1];
        --v[j - 1];
        shifted.emplace_back(std::move(v), &c);
      }
      StateMap next;
      next.reserve(states.size() + shifted.size());
      for (auto& [v, c] : shifted) add_into(next, std::move(v), *c, true);
      for (auto& [w, c] : states) add_into(next, Weight(w), c, false);
      states = std::move(next);
      check_cap(states.size(), opts);
    }

    // Finalize position j: group by (prefix, a_j), then multiply once per group.
    std::map<int, StateMap> by_last;
    for (auto& [w, c] : states) {
      const int a = w[j - 1];
      if (a < 0) continue;
      Weight prefix(w.begin(), w.begin() + (j - 1));
      if (!alive(prefix, j - 1)) continue;
      add_into(by_last[a], std::move(prefix), c, false);
    }
    StateMap next;
    for (auto& [a, group] : by_last) {
      const SymFunc& f = cached_k_hom(a, shifts[j - 1]);
      if (f.is_zero()) continue;
      for (auto& [prefix, c] : group) {
        SymFunc prod = multiply(c, f);
        if (prod.is_zero()) continue;
        auto [it, inserted] = next.try_emplace(prefix);
        it->second += prod;
        if (it->second.is_zero()) next.erase(it);
      }
    }
    states = std::move(next);
    check_cap(states.size(), opts);
  }

  auto it = states.find(Weight{});
  return it == states.end() ? SymFunc() : it->second;
}

namespace {

std::vector<int> lowered_shifts(const KatalanIndex& idx) {
  std::vector<int> shifts(idx.ell());
  for (int j = 1; j <= idx.ell(); ++j) shifts[j - 1] = j - 1 - idx.mult(j);
  return shifts;
}

}  // namespace

SymFunc eval(const KatalanIndex& idx, const EvalOptions& opts) {
  return raise_and_contract(idx.psi, idx.gamma, lowered_shifts(idx), opts);
}

SymFunc catalan_H(const RootIdeal& psi, const Weight& gamma, const EvalOptions& opts) {
  return raise_and_contract(psi, gamma, std::vector<int>(psi.ell(), 0), opts);
}

SymFunc eval_weight_map(const KatalanIndex& idx, std::optional<std::uint64_t> seed,
                        const EvalOptions& opts) {
  struct Factor {
    bool raising;
    int i, j;
  };
  std::vector<Factor> factors;
  for (int j = 2; j <= idx.ell(); ++j)
    for (int i = 1; i < j; ++i)
      if (!idx.psi.contains(i, j)) factors.push_back({true, i, j});
  for (int j = 1; j <= idx.ell(); ++j)
    for (int t = 0; t < idx.mult(j); ++t) factors.push_back({false, 0, j});
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(factors.begin(), factors.end(), rng);
  }
  WeightMap map;
  map.emplace(idx.gamma, Integer(1));
  for (const Factor& f : factors) {
    if (f.raising)
      apply_raising(map, f.i, f.j);
    else
      apply_lowering(map, f.j, 1);
    check_cap(map.size(), opts);
  }
  return kappa_sum(map);
}

bool check_order_independence(const KatalanIndex& idx, std::uint64_t seed,
                              const EvalOptions& opts) {
  SymFunc fast = eval(idx, opts);
  return eval_weight_map(idx, seed, opts) == fast &&
         eval_weight_map(idx, seed + 0x9e3779b97f4a7c15ULL, opts) == fast;
}

SymFunc eval_via_H(const KatalanIndex& idx, const EvalOptions& opts) {
  // K = prod_j (1 - L_j)^{m(j) - (j-1)} H(psi; gamma). A negative exponent is
  // a series, cut off once position j cannot be raised back to zero.
  const int ell = idx.ell();
  const std::vector<int> nr = idx.psi.nonroot_counts();
  std::vector<int> expo(ell), top(ell);
  for (int j = 1; j <= ell; ++j) {
    expo[j - 1] = idx.mult(j) - (j - 1);
    top[j - 1] = std::max(-1, idx.gamma[j - 1] + nr[j - 1]);
    if (expo[j - 1] >= 0) top[j - 1] = std::min(top[j - 1], expo[j - 1]);
  }
  for (int t : top)
    if (t < 0) return SymFunc();
  SymFuncBuilder acc;
  std::vector<int> take(ell, 0);
  while (true) {
    Integer weight = 1;
    Weight g = idx.gamma;
    for (int j = 0; j < ell; ++j) {
      weight *= binom(expo[j], take[j]);
      if (take[j] % 2) weight = -weight;
      g[j] -= take[j];
    }
    if (weight != 0) acc.add(catalan_H(idx.psi, g, opts), weight);
    int j = ell - 1;
    while (j >= 0 && take[j] == top[j]) take[j--] = 0;
    if (j < 0) break;
    ++take[j];
  }
  return std::move(acc).build();
}

KatalanIndex normalize(KatalanIndex idx) {
  while (idx.ell() > 0 && idx.gamma.back() == 0) {
    const int ell = idx.ell() - 1;
    idx.psi = idx.psi.prefix(ell);
    idx.mult = idx.mult.prefix(ell);
    idx.gamma.pop_back();
  }
  return idx;
}

}  // namespace katalan
