#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "katalan/json_io.hpp"
#include "katalan/katalan.hpp"

namespace katalan {

// One instance of a Katalan identity: an index (psi, mult, mu), named integer
// parameters, and for concatenation a second index with lowering ideals.
struct LemmaCase {
  RootIdeal psi;
  Multiset mult;
  Weight mu;
  std::map<std::string, int> at;
  // Concatenation only.
  RootIdeal lower, psi2, lower2;
  Weight mu2;

  int operator[](const std::string& name) const { return at.at(name); }
  json to_json() const;
};

using Rng = std::mt19937_64;

// A generator builds candidate instances (nullopt = rejected draw); the
// hypothesis check re-validates an instance directly against the stated
// conditions; `holds` evaluates both sides exactly.
struct LemmaFamily {
  std::string name;
  std::function<std::optional<LemmaCase>(Rng&)> sample;
  std::function<bool(const LemmaCase&)> hypotheses;
  std::function<bool(const LemmaCase&, const EvalOptions&)> holds;
};

// Root expansions, straightening, concatenation, zero lemma, generalized
// Pascal, sliding.
std::vector<LemmaFamily> identity_families();
// Base case, mirror, baby staircase, staircase, mirror straightening,
// diagonal removal.
std::vector<LemmaFamily> mirror_families();

// A displayed example: an instance that must satisfy the hypotheses of
// `family`, plus the displayed right-hand side as signed Katalan terms.
struct PinnedExample {
  std::string name;
  std::string family;
  LemmaCase lhs;
  std::vector<std::pair<int, KatalanIndex>> rhs;
};
std::vector<PinnedExample> pinned_examples();

// Solves v[a] - v[b] = c over 1-based indices (index 0 is pinned to 0, so
// {a, 0, c} fixes v[a] = c). Free components get a value drawn from [lo, hi]
// and are then shifted up so that no entry is below `floor`.
struct Difference {
  int a, b, c;
};
std::optional<std::vector<int>> solve_differences(int n, const std::vector<Difference>& cons,
                                                  Rng& rng, int lo, int hi, int floor);

}  // namespace katalan
