#include "katalan/lemmas.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "katalan/errors.hpp"

namespace katalan {

json LemmaCase::to_json() const {
  json j = {{"psi", katalan::to_json(psi)}, {"mult", katalan::to_json(mult)}, {"mu", mu}};
  if (!at.empty()) j["at"] = at;
  if (psi2.ell() > 0 || !mu2.empty()) {
    j["lower"] = katalan::to_json(lower);
    j["psi2"] = katalan::to_json(psi2);
    j["lower2"] = katalan::to_json(lower2);
    j["mu2"] = mu2;
  }
  return j;
}

std::optional<std::vector<int>> solve_differences(int n, const std::vector<Difference>& cons,
                                                  Rng& rng, int lo, int hi, int floor) {
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
  for (const auto& d : cons) {
    if (d.a < 0 || d.a > n || d.b < 0 || d.b > n) return std::nullopt;
    adj[d.b].emplace_back(d.a, d.c);
    adj[d.a].emplace_back(d.b, -d.c);
  }
  std::vector<std::optional<int>> val(n + 1);
  std::uniform_int_distribution<int> pick(lo, hi);
  for (int root = 0; root <= n; ++root) {
    if (val[root]) continue;
    std::vector<int> comp{root};
    val[root] = root == 0 ? 0 : pick(rng);
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (auto [v, c] : adj[u]) {
        const int want = *val[u] + c;
        if (!val[v]) {
          val[v] = want;
          comp.push_back(v);
          queue.push_back(v);
        } else if (*val[v] != want) {
          return std::nullopt;
        }
      }
    }
    if (root == 0) continue;
    int low = *val[root];
    for (int v : comp) low = std::min(low, *val[v]);
    if (low < floor)
      for (int v : comp) *val[v] += floor - low;
  }
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = *val[i];
  for (int x : out)
    if (x < floor && floor <= lo) return std::nullopt;
  return out;
}

namespace {

constexpr int kMaxEll = 7;

const std::vector<RootIdeal>& ideals_of(int ell) {
  static const std::vector<std::vector<RootIdeal>> all = [] {
    std::vector<std::vector<RootIdeal>> v;
    for (int l = 0; l <= kMaxEll; ++l) v.push_back(enumerate_ideals(l));
    return v;
  }();
  return all.at(ell);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

const RootIdeal& random_ideal(Rng& rng, int ell) {
  const auto& v = ideals_of(ell);
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

Weight random_vector(Rng& rng, int ell, int lo, int hi) {
  Weight w(ell);
  for (int& x : w) x = uniform(rng, lo, hi);
  return w;
}

Multiset random_mult(Rng& rng, int ell, int hi) { return Multiset(ell, random_vector(rng, ell, 0, hi)); }

std::vector<int> path(const RootIdeal& psi, int a, std::optional<int> b) {
  if (!b || a > *b) return {};
  return psi.bpath(a, *b);
}

Weight bump(Weight w, int i, int d) {
  w[i - 1] += d;
  return w;
}

SymFunc K(const RootIdeal& psi, const Multiset& m, const Weight& mu, const EvalOptions& o) {
  return eval(KatalanIndex(psi, m, mu), o);
}

constexpr int kWeightLo = -1, kWeightHi = 3, kMultHi = 2;

// Multiplicities and weights satisfying difference constraints, with the
// remaining entries free.
std::optional<std::pair<Multiset, Weight>> fill(Rng& rng, int ell, const std::vector<Difference>& mc,
                                                const std::vector<Difference>& wc) {
  auto m = solve_differences(ell, mc, rng, 0, kMultHi, 0);
  auto w = solve_differences(ell, wc, rng, kWeightLo, kWeightHi, kWeightLo);
  if (!m || !w) return std::nullopt;
  return std::make_pair(Multiset(ell, *m), *w);
}

LemmaCase make_case(RootIdeal psi, Multiset m, Weight mu, std::map<std::string, int> at = {}) {
  LemmaCase c;
  c.psi = std::move(psi);
  c.mult = std::move(m);
  c.mu = std::move(mu);
  c.at = std::move(at);
  return c;
}

bool lengths_ok(const LemmaCase& c) {
  return c.mult.ell() == c.psi.ell() && static_cast<int>(c.mu.size()) == c.psi.ell();
}

// ---- Section 3 identities ----

LemmaFamily root_expansion_addable() {
  LemmaFamily f;
  f.name = "root-expansion-addable";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 2, 6);
    const RootIdeal& psi = random_ideal(rng, ell);
    RootSet add = psi.addable_roots();
    if (add.empty()) return std::nullopt;
    Root b = add[uniform(rng, 0, static_cast<int>(add.size()) - 1)];
    return make_case(psi, random_mult(rng, ell, kMultHi), random_vector(rng, ell, kWeightLo, kWeightHi),
                     {{"i", b.i}, {"j", b.j}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    return lengths_ok(c) && c.psi.is_addable({c["i"], c["j"]});
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    RootIdeal up = c.psi.with({c["i"], c["j"]});
    return K(c.psi, c.mult, c.mu, o) ==
           K(up, c.mult, c.mu, o) - K(up, c.mult, bump(bump(c.mu, c["i"], 1), c["j"], -1), o);
  };
  return f;
}

LemmaFamily root_expansion_removable() {
  LemmaFamily f;
  f.name = "root-expansion-removable";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 2, 6);
    const RootIdeal& psi = random_ideal(rng, ell);
    RootSet rem = psi.removable_roots();
    if (rem.empty()) return std::nullopt;
    Root a = rem[uniform(rng, 0, static_cast<int>(rem.size()) - 1)];
    return make_case(psi, random_mult(rng, ell, kMultHi), random_vector(rng, ell, kWeightLo, kWeightHi),
                     {{"i", a.i}, {"j", a.j}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    return lengths_ok(c) && c.psi.is_removable({c["i"], c["j"]});
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    return K(c.psi, c.mult, c.mu, o) ==
           K(c.psi.without(Root{c["i"], c["j"]}), c.mult, c.mu, o) +
               K(c.psi, c.mult, bump(bump(c.mu, c["i"], 1), c["j"], -1), o);
  };
  return f;
}

LemmaFamily lowering_expansion_remove() {
  LemmaFamily f;
  f.name = "lowering-expansion-remove";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 1, 6);
    Multiset m = random_mult(rng, ell, kMultHi);
    const int y = uniform(rng, 1, ell);
    if (m(y) == 0) m = m.plus(y);
    return make_case(random_ideal(rng, ell), m, random_vector(rng, ell, kWeightLo, kWeightHi), {{"y", y}});
  };
  f.hypotheses = [](const LemmaCase& c) { return lengths_ok(c) && c.mult(c["y"]) >= 1; };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    const int y = c["y"];
    Multiset less = c.mult.minus(y);
    return K(c.psi, c.mult, c.mu, o) == K(c.psi, less, c.mu, o) - K(c.psi, less, bump(c.mu, y, -1), o);
  };
  return f;
}

LemmaFamily lowering_expansion_add() {
  LemmaFamily f;
  f.name = "lowering-expansion-add";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 1, 6);
    return make_case(random_ideal(rng, ell), random_mult(rng, ell, kMultHi),
                     random_vector(rng, ell, kWeightLo, kWeightHi), {{"y", uniform(rng, 1, ell)}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    return lengths_ok(c) && c["y"] >= 1 && c["y"] <= c.psi.ell();
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    const int y = c["y"];
    return K(c.psi, c.mult, c.mu, o) ==
           K(c.psi, c.mult.plus(y), c.mu, o) + K(c.psi, c.mult, bump(c.mu, y, -1), o);
  };
  return f;
}

bool reflection_fixes(const RootIdeal& psi, int i) {
  SiImage img = si_action(i, psi);
  return img.is_ideal && img.ideal && *img.ideal == psi;
}

LemmaFamily straightening() {
  LemmaFamily f;
  f.name = "straightening";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 2, 6);
    const RootIdeal& psi = random_ideal(rng, ell);
    const int i = uniform(rng, 1, ell - 1);
    if (!reflection_fixes(psi, i)) return std::nullopt;
    auto filled = fill(rng, ell, {{i + 1, i, 1}}, {});
    if (!filled) return std::nullopt;
    return make_case(psi, filled->first, filled->second, {{"i", i}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    const int i = c["i"];
    return lengths_ok(c) && i >= 1 && i < c.psi.ell() && reflection_fixes(c.psi, i) &&
           c.mult(i + 1) == c.mult(i) + 1;
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    const int i = c["i"];
    Weight other = bump(bump(si_action(i, c.mu), i, -1), i + 1, 1);
    return (K(c.psi, c.mult, c.mu, o) + K(c.psi, c.mult, other, o)).is_zero();
  };
  return f;
}

LemmaFamily concatenation() {
  LemmaFamily f;
  f.name = "concatenation";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int l1 = uniform(rng, 1, 4);
    const int l2 = uniform(rng, 1, 6 - l1);
    LemmaCase c;
    c.psi = random_ideal(rng, l1);
    c.lower = random_ideal(rng, l1);
    c.mu = random_vector(rng, l1, kWeightLo, kWeightHi);
    c.psi2 = random_ideal(rng, l2);
    c.lower2 = random_ideal(rng, l2);
    c.mu2 = random_vector(rng, l2, kWeightLo, kWeightHi);
    c.mult = multiset_of(c.lower);
    return c;
  };
  f.hypotheses = [](const LemmaCase& c) {
    return c.psi.ell() == c.lower.ell() && static_cast<int>(c.mu.size()) == c.psi.ell() &&
           c.psi2.ell() == c.lower2.ell() && static_cast<int>(c.mu2.size()) == c.psi2.ell();
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    SymFunc left = eval(KatalanIndex(c.psi, c.lower, c.mu), o);
    SymFunc right = eval(KatalanIndex(c.psi2, c.lower2, c.mu2), o);
    Weight both = c.mu;
    both.insert(both.end(), c.mu2.begin(), c.mu2.end());
    return multiply(left, right) ==
           eval(KatalanIndex(concat(c.psi, c.psi2), concat(c.lower, c.lower2), both), o);
  };
  return f;
}

LemmaFamily zero_lemma() {
  LemmaFamily f;
  f.name = "zero-lemma";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 1, 5);
    Weight mu = random_vector(rng, ell, kWeightLo, kWeightHi);
    mu.push_back(0);
    return make_case(random_ideal(rng, ell + 1), random_mult(rng, ell + 1, kMultHi), mu);
  };
  f.hypotheses = [](const LemmaCase& c) { return lengths_ok(c) && !c.mu.empty() && c.mu.back() == 0; };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    const int ell = c.psi.ell() - 1;
    Weight short_mu(c.mu.begin(), c.mu.end() - 1);
    return K(c.psi, c.mult, c.mu, o) == K(c.psi.prefix(ell), c.mult.prefix(ell), short_mu, o);
  };
  return f;
}

LemmaFamily generalized_pascal() {
  LemmaFamily f;
  f.name = "generalized-pascal";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int r = uniform(rng, 0, 3);
    const int s = uniform(rng, 1, 3);
    Weight mu(r, 0);
    Weight g = random_vector(rng, s, kWeightLo, kWeightHi + 1);
    mu.insert(mu.end(), g.begin(), g.end());
    std::vector<int> m(r + s, 0);
    for (int j = r; j < r + s; ++j) m[j] = r;
    return make_case(RootIdeal::full(r + s), Multiset(r + s, m), mu, {{"r", r}, {"s", s}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    const int r = c["r"], s = c["s"];
    if (!lengths_ok(c) || c.psi != RootIdeal::full(r + s)) return false;
    for (int j = 1; j <= r + s; ++j)
      if (c.mult(j) != (j > r ? r : 0) || (j <= r && c.mu[j - 1] != 0)) return false;
    return true;
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    const int r = c["r"];
    Weight g(c.mu.begin() + r, c.mu.end());
    WeightMap map{{c.mu, Integer(1)}};
    for (int j = r + 1; j <= c.psi.ell(); ++j) apply_lowering(map, j, r);
    const SymFunc want = kappa(g);
    return K(c.psi, c.mult, c.mu, o) == want && kappa_sum(map) == want;
  };
  return f;
}

LemmaFamily sliding() {
  LemmaFamily f;
  f.name = "sliding";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 2, 6);
    const RootIdeal& psi = random_ideal(rng, ell);
    auto x = psi.up(ell);
    if (!x) return std::nullopt;
    Multiset m = random_mult(rng, ell, kMultHi);
    if (m(ell) == 0) m = m.plus(ell);
    Weight mu = random_vector(rng, ell, kWeightLo, kWeightHi);
    mu.back() = 1;
    return make_case(psi, m, mu, {{"x", *x}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    const int ell = c.psi.ell();
    return lengths_ok(c) && ell >= 2 && c.mu.back() == 1 && c.mult(ell) >= 1 &&
           c.psi.is_removable({c["x"], ell});
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    const int ell = c.psi.ell(), x = c["x"];
    Weight hat(c.mu.begin(), c.mu.end() - 1);
    hat[x - 1] += 1;
    return K(c.psi, c.mult, c.mu, o) ==
           K(c.psi.without(Root{x, ell}), c.mult.minus(ell), c.mu, o) +
               K(c.psi.prefix(ell - 1), c.mult.prefix(ell - 1).plus(x), hat, o);
  };
  return f;
}

// ---- Section 4 mirror lemmas ----

LemmaFamily base_case() {
  LemmaFamily f;
  f.name = "mirror-base-case";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 2, kMaxEll);
    const RootIdeal& psi = random_ideal(rng, ell);
    const int z = uniform(rng, 1, ell - 1);
    if (!psi.has_ceiling(z) || !psi.has_wall(z)) return std::nullopt;
    const int variant = uniform(rng, 0, 1);
    auto filled = fill(rng, ell, {{z + 1, z, variant == 0 ? 1 : 0}}, {{z + 1, z, 1}});
    if (!filled) return std::nullopt;
    return make_case(psi, filled->first, filled->second, {{"z", z}, {"variant", variant}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    const int z = c["z"], v = c["variant"];
    if (!lengths_ok(c) || z < 1 || z >= c.psi.ell()) return false;
    const bool mult_ok = v == 0 ? c.mult(z + 1) == c.mult(z) + 1 : c.mult(z + 1) == c.mult(z);
    return c.psi.has_ceiling(z) && c.psi.has_wall(z) && c.mu[z - 1] == c.mu[z] - 1 && mult_ok;
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    SymFunc lhs = K(c.psi, c.mult, c.mu, o);
    if (c["variant"] == 0) return lhs.is_zero();
    return lhs == K(c.psi, c.mult, bump(c.mu, c["z"] + 1, -1), o);
  };
  return f;
}

// Shared conditions of the mirror lemma and mirror straightening on (y, z).
struct PathData {
  std::vector<int> mirrors;  // path(y, up(z))
  std::vector<int> rising;   // path(down(y), z)
};

std::optional<PathData> mirror_path(const RootIdeal& psi, int y, int z) {
  const int ell = psi.ell();
  if (y < 1 || y > z || z >= ell || !psi.same_path(y, z)) return std::nullopt;
  PathData d;
  if (y < z) {
    d.mirrors = path(psi, y, psi.up(z));
    d.rising = path(psi, *psi.down(y), z);
  }
  for (int x : d.mirrors)
    if (!psi.has_mirror(x)) return std::nullopt;
  if (!psi.has_wall(z)) return std::nullopt;
  return d;
}

std::vector<Difference> mirror_weights(const PathData& d, int z) {
  std::vector<Difference> wc;
  for (int x : d.mirrors) wc.push_back({x + 1, x, 0});
  wc.push_back({z + 1, z, 1});
  return wc;
}

bool mirror_weights_ok(const LemmaCase& c, const PathData& d, int z) {
  for (int x : d.mirrors)
    if (c.mu[x - 1] != c.mu[x]) return false;
  return c.mu[z - 1] == c.mu[z] - 1;
}

bool rising_ok(const LemmaCase& c, const PathData& d) {
  for (int x : d.rising)
    if (c.mult(x + 1) != c.mult(x) + 1) return false;
  return true;
}

// Draws an ideal of length ell together with (y, z), y <= z on a common
// bounce path, accepted by `ok`. Pairs with y < z are rare, so several
// ideals are tried for one before settling for y = z.
std::optional<std::tuple<RootIdeal, int, int>> pick_path_pair(
    Rng& rng, int ell, const std::function<bool(const RootIdeal&, int, int)>& ok) {
  const bool want_strict = uniform(rng, 0, 3) != 0;
  for (int attempt = 0; attempt < 40; ++attempt) {
    const RootIdeal& psi = random_ideal(rng, ell);
    std::vector<std::pair<int, int>> pool;
    for (int z = 1; z < ell; ++z)
      for (int y : psi.uppath(z))
        if ((y < z) == want_strict && ok(psi, y, z)) pool.emplace_back(y, z);
    if (pool.empty()) continue;
    auto [y, z] = pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
    return std::make_tuple(psi, y, z);
  }
  return std::nullopt;
}

LemmaFamily mirror_lemma() {
  LemmaFamily f;
  f.name = "mirror-lemma";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 3, kMaxEll);
    auto picked = pick_path_pair(rng, ell, [](const RootIdeal& psi, int y, int z) {
      return psi.has_ceiling(y) && mirror_path(psi, y, z).has_value();
    });
    if (!picked) return std::nullopt;
    const auto& [psi, y, z] = *picked;
    auto d = mirror_path(psi, y, z);
    const int variant = uniform(rng, 0, 1);
    std::vector<Difference> mc;
    for (int x : d->rising) mc.push_back({x + 1, x, 1});
    mc.push_back({y + 1, y, variant == 0 ? 1 : 0});
    auto filled = fill(rng, ell, mc, mirror_weights(*d, z));
    if (!filled) return std::nullopt;
    return make_case(psi, filled->first, filled->second, {{"y", y}, {"z", z}, {"variant", variant}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    if (!lengths_ok(c)) return false;
    const int y = c["y"], z = c["z"], v = c["variant"];
    auto d = mirror_path(c.psi, y, z);
    if (!d || !c.psi.has_ceiling(y) || !rising_ok(c, *d) || !mirror_weights_ok(c, *d, z)) return false;
    return v == 0 ? c.mult(y + 1) == c.mult(y) + 1 : c.mult(y + 1) == c.mult(y);
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    SymFunc lhs = K(c.psi, c.mult, c.mu, o);
    if (c["variant"] == 0) return lhs.is_zero();
    return lhs == K(c.psi, c.mult, bump(c.mu, c["z"] + 1, -1), o);
  };
  return f;
}

bool staircase_shape(const RootIdeal& psi, int j) {
  return j >= 1 && j < psi.ell() && psi.has_ceiling(j) && psi.has_wall(j);
}

LemmaFamily baby_staircase() {
  LemmaFamily f;
  f.name = "baby-staircase";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 2, kMaxEll);
    const RootIdeal& psi = random_ideal(rng, ell);
    const int j = uniform(rng, 1, ell - 1);
    auto i = psi.up(j);
    if (!i || !staircase_shape(psi, j)) return std::nullopt;
    auto filled = fill(rng, ell, {{j + 1, j, 1}}, {{j + 1, j, 0}});
    if (!filled) return std::nullopt;
    return make_case(psi, filled->first, filled->second, {{"i", *i}, {"j", j}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    const int i = c["i"], j = c["j"];
    return lengths_ok(c) && staircase_shape(c.psi, j) && c.psi.is_removable({i, j}) &&
           c.mult(j + 1) == c.mult(j) + 1 && c.mu[j - 1] == c.mu[j];
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    return K(c.psi, c.mult, c.mu, o) == K(c.psi.without(Root{c["i"], c["j"]}), c.mult, c.mu, o);
  };
  return f;
}

LemmaFamily staircase() {
  LemmaFamily f;
  f.name = "staircase";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 2, kMaxEll);
    const RootIdeal& psi = random_ideal(rng, ell);
    const int j = uniform(rng, 1, ell - 1);
    if (!staircase_shape(psi, j)) return std::nullopt;
    auto filled = fill(rng, ell, {{j + 1, j, 0}}, {{j + 1, j, 0}});
    if (!filled) return std::nullopt;
    Multiset m = filled->first;
    if (m(j) == 0) m = m.plus(j).plus(j + 1);
    return make_case(psi, m, filled->second, {{"j", j}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    const int j = c["j"];
    return lengths_ok(c) && staircase_shape(c.psi, j) && c.mult(j) >= 1 &&
           c.mult(j + 1) == c.mult(j) && c.mu[j - 1] == c.mu[j];
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    const int j = c["j"];
    SymFunc lhs = K(c.psi, c.mult, c.mu, o);
    Multiset less = c.mult.minus(j);
    if (lhs != K(c.psi, less, c.mu, o)) return false;
    if (auto i = c.psi.up(j)) return lhs == K(c.psi.without(Root{*i, j}), less, c.mu, o);
    return true;
  };
  return f;
}

LemmaFamily mirror_straightening() {
  LemmaFamily f;
  f.name = "mirror-straightening";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 3, kMaxEll);
    auto picked = pick_path_pair(rng, ell, [](const RootIdeal& psi, int y, int z) {
      auto a = psi.up(y + 1);
      return a && *a < y && psi.is_addable({*a, y}) && mirror_path(psi, y, z).has_value();
    });
    if (!picked) return std::nullopt;
    const auto& [psi, y, z] = *picked;
    auto d = mirror_path(psi, y, z);
    std::vector<Difference> mc{{y + 1, y, 0}};
    for (int x : d->rising) mc.push_back({x + 1, x, 1});
    auto filled = fill(rng, ell, mc, mirror_weights(*d, z));
    if (!filled) return std::nullopt;
    return make_case(psi, filled->first, filled->second, {{"y", y}, {"z", z}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    if (!lengths_ok(c)) return false;
    const int y = c["y"], z = c["z"];
    auto d = mirror_path(c.psi, y, z);
    if (!d || c.mult(y) != c.mult(y + 1) || !rising_ok(c, *d) || !mirror_weights_ok(c, *d, z))
      return false;
    auto a = c.psi.up(y + 1);
    return a && *a < y && c.psi.is_addable({*a, y}) && c.psi.is_removable({*a, y + 1});
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    const int y = c["y"], z = c["z"];
    const int a = *c.psi.up(y + 1);
    SymFunc first = K(c.psi.with(Root{a, y}), c.mult.plus(y + 1), bump(bump(c.mu, a, 1), z + 1, -1), o);
    return K(c.psi, c.mult, c.mu, o) == first + K(c.psi, c.mult, bump(c.mu, z + 1, -1), o);
  };
  return f;
}

bool diagonal_shape(const RootIdeal& psi, int x, int y, int z) {
  if (!(1 <= x && x < y && y < z && z <= psi.ell())) return false;
  if (!psi.has_ceiling(z - 1) || !psi.has_wall(y, z - y)) return false;
  for (const Root& r : diagonal(x, y, z - 1))
    if (!psi.contains(r) || !psi.is_removable(r)) return false;
  return true;
}

LemmaFamily diagonal_removal() {
  LemmaFamily f;
  f.name = "diagonal-removal";
  f.sample = [](Rng& rng) -> std::optional<LemmaCase> {
    const int ell = uniform(rng, 3, kMaxEll);
    const RootIdeal& psi = random_ideal(rng, ell);
    const int z = uniform(rng, 3, ell);
    const int y = uniform(rng, 2, z - 1);
    const int x = uniform(rng, 1, y - 1);
    if (!diagonal_shape(psi, x, y, z)) return std::nullopt;
    std::vector<Difference> mc{{z, z - 1, 0}}, wc;
    for (int j = y + 1; j <= z - 1; ++j) mc.push_back({j, j - 1, 1});
    for (int j = y + 1; j <= z; ++j) wc.push_back({j, j - 1, 0});
    auto m = solve_differences(ell, mc, rng, 1, kMultHi + 1, 0);
    auto w = solve_differences(ell, wc, rng, kWeightLo, kWeightHi, kWeightLo);
    if (!m || !w || (*m)[y - 1] < 1) return std::nullopt;
    return make_case(psi, Multiset(ell, *m), *w, {{"x", x}, {"y", y}, {"z", z}});
  };
  f.hypotheses = [](const LemmaCase& c) {
    const int x = c["x"], y = c["y"], z = c["z"];
    if (!lengths_ok(c) || !diagonal_shape(c.psi, x, y, z)) return false;
    if (!c.mult.contains(multiset_of(c.psi.ell(), diagonal(x, y, z - 1)))) return false;
    if (c.mult(z) != c.mult(z - 1)) return false;
    for (int j = y; j <= z - 1; ++j)
      if (c.mult(j) != c.mult(y) + (j - y)) return false;
    for (int j = y; j <= z; ++j)
      if (c.mu[j - 1] != c.mu[y - 1]) return false;
    return true;
  };
  f.holds = [](const LemmaCase& c, const EvalOptions& o) {
    RootSet d = diagonal(c["x"], c["y"], c["z"] - 1);
    return K(c.psi, c.mult, c.mu, o) ==
           K(c.psi.without(d), c.mult.difference(multiset_of(c.psi.ell(), d)), c.mu, o);
  };
  return f;
}

KatalanIndex idx(int ell, std::vector<int> rows, std::vector<int> mult, Weight mu) {
  return KatalanIndex(RootIdeal(ell, std::move(rows)), Multiset(ell, std::move(mult)), std::move(mu));
}

LemmaCase case_of(const KatalanIndex& i, std::map<std::string, int> at) {
  return make_case(i.psi, i.mult, i.gamma, std::move(at));
}

}  // namespace

std::vector<LemmaFamily> identity_families() {
  return {root_expansion_addable(), root_expansion_removable(), lowering_expansion_remove(),
          lowering_expansion_add(),  straightening(),            concatenation(),
          zero_lemma(),              generalized_pascal(),       sliding()};
}

std::vector<LemmaFamily> mirror_families() {
  return {base_case(), mirror_lemma(), baby_staircase(), staircase(), mirror_straightening(),
          diagonal_removal()};
}

std::vector<PinnedExample> pinned_examples() {
  std::vector<PinnedExample> out;
  {
    KatalanIndex lhs = idx(7, {6, 4, 2, 1, 0, 0, 0}, {0, 0, 1, 1, 2, 3, 4}, {4, 3, 1, 1, 1, 1, 1});
    out.push_back({"sliding display",
                   "sliding",
                   case_of(lhs, {{"x", 4}}),
                   {{1, idx(7, {6, 4, 2, 0, 0, 0, 0}, {0, 0, 1, 1, 2, 3, 3}, {4, 3, 1, 1, 1, 1, 1})},
                    {1, idx(6, {5, 3, 1, 0, 0, 0}, {0, 0, 1, 2, 2, 3}, {4, 3, 1, 2, 1, 1})}}});
  }
  {
    KatalanIndex lhs = idx(6, {5, 2, 2, 2, 0, 0}, {0, 0, 1, 1, 2, 4}, {3, 2, 3, 2, 1, 1});
    out.push_back({"base case display, vanishing", "mirror-base-case",
                   case_of(lhs, {{"z", 2}, {"variant", 0}}), {}});
  }
  {
    KatalanIndex lhs = idx(6, {5, 2, 2, 2, 0, 0}, {0, 1, 1, 1, 2, 4}, {3, 2, 3, 2, 1, 1});
    out.push_back({"base case display, lowering", "mirror-base-case",
                   case_of(lhs, {{"z", 2}, {"variant", 1}}),
                   {{1, idx(6, {5, 2, 2, 2, 0, 0}, {0, 1, 1, 1, 2, 4}, {3, 2, 2, 2, 1, 1})}}});
  }
  const Weight g4{4, 3, 2, 2};
  out.push_back({"staircase display, first equality", "staircase",
                 case_of(idx(4, {2, 2, 0, 0}, {0, 0, 2, 2}, g4), {{"j", 3}}),
                 {{1, idx(4, {2, 2, 0, 0}, {0, 0, 1, 2}, g4)}}});
  out.push_back({"baby staircase display", "baby-staircase",
                 case_of(idx(4, {2, 2, 0, 0}, {0, 0, 1, 2}, g4), {{"i", 2}, {"j", 3}}),
                 {{1, idx(4, {2, 1, 0, 0}, {0, 0, 1, 2}, g4)}}});
  out.push_back({"staircase display, combined", "staircase",
                 case_of(idx(4, {2, 2, 0, 0}, {0, 0, 2, 2}, g4), {{"j", 3}}),
                 {{1, idx(4, {2, 1, 0, 0}, {0, 0, 1, 2}, g4)}}});
  {
    KatalanIndex lhs = idx(6, {4, 2, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 2}, {5, 4, 4, 4, 3, 4});
    out.push_back({"mirror straightening display", "mirror-straightening",
                   case_of(lhs, {{"y", 2}, {"z", 5}}),
                   {{1, idx(6, {5, 2, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 2}, {6, 4, 4, 4, 3, 3})},
                    {1, idx(6, {4, 2, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 2}, {5, 4, 4, 4, 3, 3})}}});
  }
  return out;
}

}  // namespace katalan
