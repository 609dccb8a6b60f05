#include "katalan/conjectures.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "katalan/errors.hpp"
#include "katalan/parallel.hpp"
#include "katalan/version.hpp"

namespace katalan {

json SweepReport::to_json() const {
  return {{"conjecture", conjecture}, {"version", kVersion},      {"statement", statement},
          {"parameters", parameters}, {"instances", instances},   {"witnesses", witnesses},
          {"clean", clean()}};
}

namespace {

const std::map<std::string, std::string>& statements() {
  static const std::map<std::string, std::string> s{
      {"tilde-g", "closed g^{(k)} at theta(w)^{omega_k} equals tilde g_w for every w in S_{k+1}"},
      {"dual-pieri",
       "G_{1^m}^perp closed g^{(k)}_mu expands in closed g^{(k)} with (-1)^{|mu|-m-|nu|} c >= 0"},
      {"k-branching",
       "closed g^{(k)}_mu expands in closed g^{(k+1)} with (-1)^{|mu|-|nu|} a >= 0"},
      {"kk-alternating", "closed g^{(k)}_mu expands in g^{(k)} with (-1)^{|mu|-|nu|} b >= 0"},
      {"rectangle", "g_{R_d} closed g^{(k)}_mu = closed g^{(k)}_{mu u R_d}, R_d = (k+1-d)^d"},
      {"kpos",
       "for maxband(Psi, lambda) <= k: K(Psi;Psi;lambda) is alternating in closed g^{(k)}_mu "
       "with l(mu) <= l, and K(Psi;RC^a(Psi);lambda) is k-Schur positive for every a"},
  };
  return s;
}

// Collects witnesses from parallel tasks in task order.
class Witnesses {
 public:
  void add(std::size_t task, json w) {
    std::lock_guard lock(mu_);
    found_.emplace_back(task, std::move(w));
  }
  std::vector<json> sorted() {
    std::stable_sort(found_.begin(), found_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<json> out;
    for (auto& [t, w] : found_) out.push_back(std::move(w));
    return out;
  }

 private:
  std::mutex mu_;
  std::vector<std::pair<std::size_t, json>> found_;
};

json kl(int k, const Partition& mu) { return {{"k", k}, {"lambda", to_json(mu)}}; }

std::vector<std::pair<int, Partition>> sources(const SweepRanges& r) {
  std::vector<std::pair<int, Partition>> out;
  for (int k : r.ks)
    for (const Partition& mu : partitions_up_to(r.max_deg, k, r.max_ell)) out.emplace_back(k, mu);
  return out;
}

// Sign-rule expansion; any failure to expand or to reproduce is a witness.
std::optional<json> expansion_witness(const SymFunc& f, int source_k, const Partition& source,
                                      Family family, int k, SignRule rule, int source_size,
                                      FamilyCache& cache,
                                      const std::function<bool(const BranchReport&)>& extra = {}) {
  try {
    BranchReport b = expand_report(f, family, k, rule, source_size, cache);
    b.k = source_k;
    b.source = source;
    if (b.sign_flaw || !b.reproduces || (extra && !extra(b))) return to_json(b);
  } catch (const NotInSpan& e) {
    return json{{"error", e.what()}};
  } catch (const NonUnique& e) {
    return json{{"error", e.what()}};
  } catch (const NonIntegral& e) {
    return json{{"error", e.what()}};
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> sweep_names() {
  return {"tilde-g", "dual-pieri", "k-branching", "kk-alternating", "rectangle", "kpos"};
}

std::string canonical_sweep(const std::string& name) {
  static const std::map<std::string, std::string> alias{
      {"a", "tilde-g"}, {"c", "dual-pieri"}, {"d", "k-branching"}, {"e", "kk-alternating"},
      {"f", "rectangle"}};
  if (auto it = alias.find(name); it != alias.end()) return it->second;
  if (statements().count(name)) return name;
  throw ParseError("unknown conjecture '" + name + "'");
}

SweepReport sweep(const std::string& which_in, const SweepRanges& ranges, FamilyCache& cache,
                  int jobs) {
  const std::string which = canonical_sweep(which_in);
  SweepReport rep;
  rep.conjecture = which;
  rep.statement = statements().at(which);
  rep.parameters = {{"k", ranges.ks}, {"max_ell", ranges.max_ell}, {"max_deg", ranges.max_deg}};
  Witnesses wit;
  std::mutex count_mu;
  auto count = [&](std::size_t n) {
    std::lock_guard lock(count_mu);
    rep.instances += n;
  };

  if (which == "tilde-g") {
    rep.parameters = {{"k", ranges.ks}};
    std::vector<std::pair<int, FinitePerm>> items;
    for (int k : ranges.ks)
      for (auto& w : all_finite_perms(k + 1)) items.emplace_back(k, w);
    parallel_for(items.size(), jobs, [&](std::size_t i) {
      const auto& [k, w] = items[i];
      const Partition lambda = k_conjugate(k, theta(k, w));
      const SymFunc lhs = cache.get(Family::Closed, k, lambda);
      const SymFunc rhs = tilde_g_w(k, w, cache);
      count(1);
      if (lhs != rhs)
        wit.add(i, {{"k", k}, {"w", w}, {"lambda", to_json(lambda)}, {"closed", to_json(lhs)},
                    {"tilde_g", to_json(rhs)}});
    });
  } else if (which == "kpos") {
    struct Item {
      int k;
      RootIdeal psi;
      Weight lambda;
    };
    std::vector<Item> items;
    for (int k : ranges.ks)
      for (int ell = 1; ell <= ranges.max_ell; ++ell) {
        const auto ideals = enumerate_ideals(ell);
        for (const Partition& p : partitions_up_to(ranges.max_deg, k, ell))
          for (const RootIdeal& psi : ideals) {
            Weight lam = p.as_weight(ell);
            if (maxband(psi, lam) <= k) items.push_back({k, psi, lam});
          }
      }
    parallel_for(items.size(), jobs, [&](std::size_t i) {
      const Item& it = items[i];
      const int ell = it.psi.ell();
      const Partition lambda = partition_of_weight(it.lambda);
      const EvalOptions& eo = cache.options();
      auto base = [&] {
        return json{{"k", it.k}, {"psi", to_json(it.psi)}, {"lambda", it.lambda}};
      };
      const SymFunc closed = eval(KatalanIndex(it.psi, it.psi, it.lambda), eo);
      count(1);
      auto short_support = [&](const BranchReport& b) {
        for (const auto& [mu, c] : b.coeffs)
          if (static_cast<int>(mu.length()) > ell) return false;
        return true;
      };
      if (auto w = expansion_witness(closed, it.k, lambda, Family::Closed, it.k, SignRule::Alternating,
                                     lambda.size(), cache, short_support)) {
        json j = base();
        j["display"] = "closed-alternating";
        j["report"] = *w;
        wit.add(i, j);
      }
      RootIdeal lower = it.psi;
      for (int a = 0;; ++a) {
        const SymFunc f = eval(KatalanIndex(it.psi, lower, it.lambda), eo);
        count(1);
        if (auto w = expansion_witness(f, it.k, lambda, Family::KSchur, it.k, SignRule::Positive, lambda.size(),
                                       cache)) {
          json j = base();
          j["display"] = "kschur-positive";
          j["a"] = a;
          j["report"] = *w;
          wit.add(i, j);
        }
        RootIdeal next = rc(lower);
        if (next == lower) break;
        lower = next;
      }
    });
  } else {
    const auto items = sources(ranges);
    parallel_for(items.size(), jobs, [&](std::size_t i) {
      const auto& [k, mu] = items[i];
      const SymFunc& g = cache.get(Family::Closed, k, mu);
      auto note = [&](json extra, const json& report) {
        json j = kl(k, mu);
        for (auto& [key, v] : extra.items()) j[key] = v;
        j["report"] = report;
        wit.add(i, j);
      };
      if (which == "dual-pieri") {
        for (int m = 1; m <= mu.size(); ++m) {
          count(1);
          // G_{1^m}^perp lowers degree by m, so parity is taken from |mu| - m.
          if (auto w = expansion_witness(g_column_perp(m, g), k, mu, Family::Closed, k,
                                         SignRule::Alternating, mu.size() - m, cache))
            note({{"m", m}}, *w);
        }
      } else if (which == "k-branching") {
        count(1);
        if (auto w = expansion_witness(g, k, mu, Family::Closed, k + 1, SignRule::Alternating, mu.size(), cache))
          note(json::object(), *w);
      } else if (which == "kk-alternating") {
        count(1);
        if (auto w = expansion_witness(g, k, mu, Family::KK, k, SignRule::Alternating, mu.size(), cache))
          note(json::object(), *w);
      } else {
        for (int d = 1; d <= k; ++d) {
          const Partition rect = Partition::rectangle(d, k + 1 - d);
          const Partition joined = mu.union_with(rect);
          const SymFunc lhs = dual_groth_det(rect) * g;
          const SymFunc& rhs = cache.get(Family::Closed, k, joined);
          count(1);
          if (lhs != rhs)
            note({{"d", d}}, {{"product", to_json(lhs)}, {"closed", to_json(rhs)}});
        }
      }
    });
  }
  rep.witnesses = wit.sorted();
  return rep;
}

}  // namespace katalan
